// wienerlab: simulation, estimation and experiment reproduction for the
// Wiener process with drift dX_t = mu dt + sigma dW_t.
//
// Exit codes: 0 success, 1 failed check (experiment fixture), 2 validation
// error, 3 I/O error. Every randomized command takes --seed (default 0);
// identical invocations produce byte-identical output files.

#include "wiener/csv.hpp"
#include "wiener/detail/parallel.hpp"
#include "wiener/estimators.hpp"
#include "wiener/experiments.hpp"
#include "wiener/fixture.hpp"
#include "wiener/model.hpp"
#include "wiener/rng.hpp"
#include "wiener/simulator.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace wiener;

void print_value(const char* name, double v) {
    std::printf("%s = %.9g\n", name, v);
}

std::size_t default_burn_in(std::size_t n) { return n / 2; }

void print_window(const char* prefix, const RunningEstimate& run,
                  std::optional<std::size_t> burn_in_flag) {
    const std::size_t burn_in =
        burn_in_flag.value_or(default_burn_in(run.size()));
    const WindowBounds w = window_bounds(run, burn_in);
    std::printf("%swindow burn_in = %zu\n", prefix, w.burn_in);
    std::printf("%swindow lower = %.9g\n", prefix, w.lower);
    std::printf("%swindow upper = %.9g\n", prefix, w.upper);
}

struct SimulateMarginalOpts {
    double x0 = 0.0, mu = 0.0, sigma = 1.0, t = 0.5;
    std::size_t n = 100;
    std::uint64_t seed = 0;
    bool series = false;
    int terms = SeriesConfig::kDefaultTerms;
    std::string out;
};

struct SimulatePairedOpts {
    double x0 = 0.0, mu = 0.0, sigma = 1.0, t1 = 0.5, t2 = 1.0;
    std::size_t n = 100;
    std::uint64_t seed = 0;
    std::string out;
};

struct SimulatePathsOpts {
    double x0 = 0.0, mu = 0.0, sigma = 1.0, dt = 1e-4;
    std::size_t count = 4;
    int terms = SeriesConfig::kDefaultTerms;
    std::uint64_t seed = 0;
    bool per_path_files = false;
    std::string out;
};

struct EstimateOpts {
    std::string in;
    double t = 0.5, t1 = 0.5, t2 = 1.0;
    double x0 = 0.0, mu = 0.0;
    bool window = false;
    std::optional<std::size_t> burn_in;
};

struct PipelineOpts {
    std::string paired_file, extra_file;
    double t1 = 0.5, t2 = 1.0, t = 0.5;
};

struct Table41Opts {
    double x0 = fixture::kX0, mu = fixture::kMu, sigma = fixture::kSigma,
           t = fixture::kT;
    std::size_t count = 100;
    int terms = SeriesConfig::kDefaultTerms;
    std::uint64_t seed = 0;
    std::string out;
};

struct SweepOpts {
    EstimatorKind kind = EstimatorKind::sigma2;
    bool use_fixture = false;
    std::string in;
    double t = fixture::kT;
    double x0 = fixture::kX0, mu = fixture::kMu;
    std::optional<double> true_value;
    std::vector<int> ns;
    std::string out;
};

struct FixtureOpts {
    double tol = 2e-3;
};

struct RmseOpts {
    EstimatorKind kind = EstimatorKind::sigma2;
    double x0 = fixture::kX0, mu = fixture::kMu, sigma = fixture::kSigma;
    double t = fixture::kT, t2 = 1.0;
    int reps = 200;
    std::vector<int> ns = {100, 1000, 10000};
    std::uint64_t seed = 0;
    bool sequential = false;
    std::string out;
};

std::vector<std::pair<double, double>>
simulate_pairs(const WienerParams& params, TimePoint t1, TimePoint t2,
               std::size_t n, Seed seed) {
    detail::NormalSequence seq{GaussianStream(seed, 0)};
    std::vector<std::pair<double, double>> pairs(n);
    for (auto& [z1, z2] : pairs) {
        z1 = marginal_from_normal(params, t1, seq.next());
        z2 = marginal_from_normal(params, t2, seq.next());
    }
    return pairs;
}

void run_simulate_marginal(const SimulateMarginalOpts& o) {
    const WienerParams params(o.x0, o.mu, o.sigma);
    const TimePoint t(o.t);
    const MarginalSample sample =
        o.series ? generate_table41(params, t, o.n, SeriesConfig(o.terms),
                                    Seed{o.seed})
                 : sample_marginal(params, t, o.n, GaussianStream(Seed{o.seed}, 0));
    csv::write_marginal(o.out, sample.values());
}

void run_simulate_paired(const SimulatePairedOpts& o) {
    const WienerParams params(o.x0, o.mu, o.sigma);
    if (o.n == 0) {
        throw ValidationError("n must be >= 1");
    }
    const auto pairs = simulate_pairs(params, TimePoint(o.t1), TimePoint(o.t2),
                                      o.n, Seed{o.seed});
    // Constructing the sample validates t1 != t2 and finiteness.
    const PairedSample sample(TimePoint(o.t1), TimePoint(o.t2), pairs);
    csv::write_paired(o.out, sample.pairs());
}

void run_simulate_paths(const SimulatePathsOpts& o) {
    const WienerParams params(o.x0, o.mu, o.sigma);
    const SeriesConfig config(o.terms);
    if (o.count == 0) {
        throw ValidationError("count must be >= 1");
    }
    // One substream per trajectory; slot writes keep the output independent
    // of thread scheduling.
    std::vector<std::optional<PathGrid>> slots(o.count);
    detail::parallel_for(o.count, true, [&](std::size_t k) {
        slots[k].emplace(build_path(params, config, o.dt,
                                    GaussianStream(Seed{o.seed}, k)));
    });
    std::vector<PathGrid> paths;
    paths.reserve(o.count);
    for (auto& slot : slots) {
        paths.push_back(std::move(*slot));
    }
    if (o.per_path_files) {
        const std::filesystem::path base(o.out);
        const std::filesystem::path dir = base.parent_path();
        const std::string stem = base.stem().string();
        const std::string ext =
            base.has_extension() ? base.extension().string() : ".csv";
        for (std::size_t k = 0; k < paths.size(); ++k) {
            const std::filesystem::path file =
                dir / (stem + "_" + std::to_string(k + 1) + ext);
            csv::write_path_frame(file, paths[k]);
        }
    } else {
        csv::write_paths(o.out, paths);
    }
}

MarginalSample load_marginal(const std::string& file, double t) {
    return MarginalSample(TimePoint(t), csv::read_marginal(file));
}

void run_estimate_sigma2(const EstimateOpts& o) {
    const MarginalSample sample = load_marginal(o.in, o.t);
    print_value("sigma2", estimate_sigma2(sample, o.x0, o.mu));
    if (o.window) {
        print_window("", running_sigma2(sample, o.x0, o.mu), o.burn_in);
    }
}

void run_estimate_mu(const EstimateOpts& o) {
    const MarginalSample sample = load_marginal(o.in, o.t);
    print_value("mu", estimate_mu(sample, o.x0));
    if (o.window) {
        print_window("", running_mu(sample, o.x0), o.burn_in);
    }
}

void run_estimate_x0(const EstimateOpts& o) {
    const MarginalSample sample = load_marginal(o.in, o.t);
    print_value("x0", estimate_x0(sample, o.mu));
    if (o.window) {
        print_window("", running_x0(sample, o.mu), o.burn_in);
    }
}

void run_estimate_joint(const EstimateOpts& o) {
    const PairedSample sample(TimePoint(o.t1), TimePoint(o.t2),
                              csv::read_paired(o.in));
    const JointEstimate est = estimate_joint(sample);
    print_value("x0", est.x0_hat);
    print_value("mu", est.mu_hat);
    if (o.window) {
        const JointRunning run = running_joint(sample);
        print_window("x0 ", run.x0_hat, o.burn_in);
        print_window("mu ", run.mu_hat, o.burn_in);
    }
}

void run_estimate_pipeline(const PipelineOpts& o) {
    const PairedSample paired(TimePoint(o.t1), TimePoint(o.t2),
                              csv::read_paired(o.paired_file));
    const MarginalSample extra(TimePoint(o.t),
                               csv::read_marginal(o.extra_file));
    const PluginEstimate est = plugin_pipeline(paired, extra);
    print_value("x0", est.x0_hat);
    print_value("mu", est.mu_hat);
    print_value("sigma2", est.sigma2_hat);
}

void run_experiment_table41(const Table41Opts& o) {
    const MarginalSample sample =
        generate_table41(WienerParams(o.x0, o.mu, o.sigma), TimePoint(o.t),
                         o.count, SeriesConfig(o.terms), Seed{o.seed});
    csv::write_marginal(o.out, sample.values());
}

void run_experiment_sweep(const SweepOpts& o) {
    if (o.use_fixture == !o.in.empty()) {
        throw ValidationError("pass exactly one of --fixture or --in");
    }
    std::vector<int> ns = o.ns.empty() ? fixture::sweep_ns() : o.ns;

    MarginalSample sample =
        o.use_fixture
            ? MarginalSample(TimePoint(fixture::kT),
                             {fixture::table41().begin(), fixture::table41().end()})
            : load_marginal(o.in, o.t);
    double truth = 0.0;
    if (o.true_value) {
        truth = *o.true_value;
    } else if (o.use_fixture) {
        switch (o.kind) {
        case EstimatorKind::sigma2:
            truth = fixture::kSigma * fixture::kSigma;
            break;
        case EstimatorKind::mu:
            truth = fixture::kMu;
            break;
        default:
            truth = fixture::kX0;
            break;
        }
    } else {
        throw ValidationError("--true is required with --in");
    }
    const SweepResult sweep =
        run_sweep(o.kind, sample, KnownParams{o.x0, o.mu}, ns, truth);
    csv::write_sweep(o.out, sweep);
}

int run_experiment_fixture(const FixtureOpts& o) {
    const FixtureReport report = check_fixture(o.tol);
    for (const auto& row : report.rows) {
        std::printf("%-6s n=%-3d expected=%-12.9g computed=%-12.9g delta=%.3e %s\n",
                    to_string(row.kind), row.n, row.expected, row.computed,
                    row.delta, row.pass ? "PASS" : "FAIL");
    }
    std::size_t passed = 0;
    for (const auto& row : report.rows) {
        passed += row.pass ? 1 : 0;
    }
    std::printf("fixture check: %zu/%zu rows within tolerance %g (max delta %.3e)\n",
                passed, report.rows.size(), report.tolerance,
                report.max_delta());
    return report.all_pass() ? 0 : 1;
}

void run_experiment_rmse(const RmseOpts& o) {
    CurveConfig config;
    config.kind = o.kind;
    config.params = WienerParams(o.x0, o.mu, o.sigma);
    config.t1 = o.t;
    config.t2 = o.t2;
    config.ns = o.ns;
    config.replications = o.reps;
    config.seed = Seed{o.seed};
    config.parallel = !o.sequential;
    csv::write_rmse(o.out, consistency_curve(config));
}

void add_params(CLI::App* cmd, double& x0, double& mu, double& sigma,
                bool required) {
    auto* a = cmd->add_option("--x0", x0, "initial position x0");
    auto* b = cmd->add_option("--mu", mu, "drift per unit time");
    auto* c = cmd->add_option("--sigma", sigma, "noise scale (>= 0)");
    if (required) {
        a->required();
        b->required();
        c->required();
    } else {
        a->capture_default_str();
        b->capture_default_str();
        c->capture_default_str();
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wiener process with drift: simulation, estimation and "
                 "experiment reproduction"};
    app.require_subcommand(1);
    int exit_code = 0;

    const std::map<std::string, EstimatorKind> marginal_kinds{
        {"sigma2", EstimatorKind::sigma2},
        {"mu", EstimatorKind::mu},
        {"x0", EstimatorKind::x0},
    };
    std::map<std::string, EstimatorKind> all_kinds = marginal_kinds;
    all_kinds.emplace("joint_x0", EstimatorKind::joint_x0);
    all_kinds.emplace("joint_mu", EstimatorKind::joint_mu);

    // --- simulate ---
    auto* simulate = app.add_subcommand("simulate", "generate observations");
    simulate->require_subcommand(1);

    SimulateMarginalOpts sm;
    auto* sim_marginal = simulate->add_subcommand(
        "marginal", "sample the marginal law at one time");
    add_params(sim_marginal, sm.x0, sm.mu, sm.sigma, true);
    sim_marginal->add_option("--t", sm.t, "observation time (> 0)")->required();
    sim_marginal->add_option("--n", sm.n, "number of observations")->required();
    sim_marginal->add_option("--seed", sm.seed, "RNG seed")->capture_default_str();
    sim_marginal->add_flag("--series", sm.series,
                           "sample via truncated series paths (t <= 1)");
    sim_marginal->add_option("--terms", sm.terms, "series truncation depth")
        ->capture_default_str();
    sim_marginal->add_option("--out", sm.out, "output CSV (k,z)")->required();
    sim_marginal->callback([&sm] { run_simulate_marginal(sm); });

    SimulatePairedOpts sp;
    auto* sim_paired = simulate->add_subcommand(
        "paired", "sample independent trajectory pairs at two times");
    add_params(sim_paired, sp.x0, sp.mu, sp.sigma, true);
    sim_paired->add_option("--t1", sp.t1, "first observation time")->required();
    sim_paired->add_option("--t2", sp.t2, "second observation time")->required();
    sim_paired->add_option("--n", sp.n, "number of pairs")->required();
    sim_paired->add_option("--seed", sp.seed, "RNG seed")->capture_default_str();
    sim_paired->add_option("--out", sp.out, "output CSV (k,z1,z2)")->required();
    sim_paired->callback([&sp] { run_simulate_paired(sp); });

    SimulatePathsOpts spa;
    auto* sim_paths = simulate->add_subcommand(
        "paths", "build truncated-series trajectories on [0, 1]");
    add_params(sim_paths, spa.x0, spa.mu, spa.sigma, true);
    sim_paths->add_option("--dt", spa.dt, "grid step (must divide 1)")
        ->capture_default_str();
    sim_paths->add_option("--count", spa.count, "number of trajectories")
        ->capture_default_str();
    sim_paths->add_option("--terms", spa.terms, "series truncation depth")
        ->capture_default_str();
    sim_paths->add_option("--seed", spa.seed, "RNG seed")->capture_default_str();
    sim_paths->add_flag("--per-path-files", spa.per_path_files,
                        "write one CSV per trajectory instead of a wide file");
    sim_paths->add_option("--out", spa.out, "output CSV (t,path_1,...)")
        ->required();
    sim_paths->callback([&spa] { run_simulate_paths(spa); });

    // --- estimate ---
    auto* estimate = app.add_subcommand("estimate", "estimate parameters");
    estimate->require_subcommand(1);

    const auto add_window_flags = [](CLI::App* cmd, EstimateOpts& o) {
        cmd->add_flag("--window", o.window,
                      "also print tail min/max of the running estimate");
        cmd->add_option("--burn-in", o.burn_in,
                        "running entries to discard before the window "
                        "(default n/2)");
    };

    EstimateOpts es;
    auto* est_sigma2 =
        estimate->add_subcommand("sigma2", "noise scale, x0 and mu known");
    est_sigma2->add_option("--in", es.in, "input CSV (k,z)")->required();
    est_sigma2->add_option("--t", es.t, "observation time")->required();
    est_sigma2->add_option("--x0", es.x0, "known x0")->required();
    est_sigma2->add_option("--mu", es.mu, "known mu")->required();
    add_window_flags(est_sigma2, es);
    est_sigma2->callback([&es] { run_estimate_sigma2(es); });

    EstimateOpts em;
    auto* est_mu = estimate->add_subcommand("mu", "drift, x0 known");
    est_mu->add_option("--in", em.in, "input CSV (k,z)")->required();
    est_mu->add_option("--t", em.t, "observation time")->required();
    est_mu->add_option("--x0", em.x0, "known x0")->required();
    add_window_flags(est_mu, em);
    est_mu->callback([&em] { run_estimate_mu(em); });

    EstimateOpts ex;
    auto* est_x0 = estimate->add_subcommand("x0", "initial position, mu known");
    est_x0->add_option("--in", ex.in, "input CSV (k,z)")->required();
    est_x0->add_option("--t", ex.t, "observation time")->required();
    est_x0->add_option("--mu", ex.mu, "known mu")->required();
    add_window_flags(est_x0, ex);
    est_x0->callback([&ex] { run_estimate_x0(ex); });

    EstimateOpts ej;
    auto* est_joint = estimate->add_subcommand(
        "joint", "(x0, mu) from pairs at two distinct times");
    est_joint->add_option("--in", ej.in, "input CSV (k,z1,z2)")->required();
    est_joint->add_option("--t1", ej.t1, "first observation time")->required();
    est_joint->add_option("--t2", ej.t2, "second observation time")->required();
    add_window_flags(est_joint, ej);
    est_joint->callback([&ej] { run_estimate_joint(ej); });

    PipelineOpts pl;
    auto* est_pipeline = estimate->add_subcommand(
        "pipeline", "(x0, mu) from pairs, then sigma2 with them plugged in");
    est_pipeline->add_option("--paired", pl.paired_file, "paired CSV (k,z1,z2)")
        ->required();
    est_pipeline->add_option("--extra", pl.extra_file, "marginal CSV (k,z)")
        ->required();
    est_pipeline->add_option("--t1", pl.t1, "paired first time")->required();
    est_pipeline->add_option("--t2", pl.t2, "paired second time")->required();
    est_pipeline->add_option("--t", pl.t, "extra sample time")->required();
    est_pipeline->callback([&pl] { run_estimate_pipeline(pl); });

    // --- experiment ---
    auto* experiment =
        app.add_subcommand("experiment", "reproduce the reference experiments");
    experiment->require_subcommand(1);

    Table41Opts t41;
    auto* exp_table = experiment->add_subcommand(
        "table41", "regenerate the reference-table regime from series paths");
    add_params(exp_table, t41.x0, t41.mu, t41.sigma, false);
    exp_table->add_option("--t", t41.t, "observation time")->capture_default_str();
    exp_table->add_option("--count", t41.count, "number of trajectories")
        ->capture_default_str();
    exp_table->add_option("--terms", t41.terms, "series truncation depth")
        ->capture_default_str();
    exp_table->add_option("--seed", t41.seed, "RNG seed")->capture_default_str();
    exp_table->add_option("--out", t41.out, "output CSV (k,z)")->required();
    exp_table->callback([&t41] { run_experiment_table41(t41); });

    SweepOpts sw;
    auto* exp_sweep = experiment->add_subcommand(
        "sweep", "prefix estimates over growing n");
    exp_sweep
        ->add_option("--estimator", sw.kind, "one of sigma2|mu|x0")
        ->required()
        ->transform(CLI::CheckedTransformer(marginal_kinds, CLI::ignore_case));
    exp_sweep->add_flag("--fixture", sw.use_fixture,
                        "sweep the embedded reference observations");
    exp_sweep->add_option("--in", sw.in, "input CSV (k,z)");
    exp_sweep->add_option("--t", sw.t, "observation time (with --in)")
        ->capture_default_str();
    exp_sweep->add_option("--x0", sw.x0, "known x0")->capture_default_str();
    exp_sweep->add_option("--mu", sw.mu, "known mu")->capture_default_str();
    exp_sweep->add_option("--true", sw.true_value,
                          "true parameter value for the output column");
    exp_sweep->add_option("--n", sw.ns, "n values (default 5,10,...,100)");
    exp_sweep->add_option("--out", sw.out, "output CSV (n,estimate,true_value)")
        ->required();
    exp_sweep->callback([&sw] { run_experiment_sweep(sw); });

    FixtureOpts fx;
    auto* exp_fixture = experiment->add_subcommand(
        "fixture", "golden regression against the embedded tables");
    exp_fixture->add_option("--tol", fx.tol, "absolute tolerance per row")
        ->capture_default_str();
    exp_fixture->callback([&fx, &exit_code] { exit_code = run_experiment_fixture(fx); });

    RmseOpts rm;
    auto* exp_rmse = experiment->add_subcommand(
        "rmse", "RMSE decay over replications");
    exp_rmse
        ->add_option("--estimator", rm.kind,
                     "one of sigma2|mu|x0|joint_x0|joint_mu")
        ->required()
        ->transform(CLI::CheckedTransformer(all_kinds, CLI::ignore_case));
    add_params(exp_rmse, rm.x0, rm.mu, rm.sigma, false);
    exp_rmse->add_option("--t", rm.t, "observation time")->capture_default_str();
    exp_rmse->add_option("--t2", rm.t2, "second time (joint kinds)")
        ->capture_default_str();
    exp_rmse->add_option("--reps", rm.reps, "replications")->capture_default_str();
    exp_rmse->add_option("--n", rm.ns, "sample sizes (default 100,1000,10000)");
    exp_rmse->add_option("--seed", rm.seed, "RNG seed")->capture_default_str();
    exp_rmse->add_flag("--sequential", rm.sequential,
                       "run replications on one thread");
    exp_rmse->add_option("--out", rm.out, "output CSV (n,rmse)")->required();
    exp_rmse->callback([&rm] { run_experiment_rmse(rm); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "wienerlab: " << e.what() << '\n';
        return 2;
    } catch (const csv::IoError& e) {
        std::cerr << "wienerlab: " << e.what() << '\n';
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "wienerlab: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
