#include "wiener/experiments.hpp"

#include "wiener/detail/parallel.hpp"
#include "wiener/fixture.hpp"

#include <cmath>
#include <utility>

namespace wiener {

MarginalSample generate_table41(const WienerParams& params, TimePoint t,
                                std::size_t count, const SeriesConfig& config,
                                Seed seed) {
    if (count == 0) {
        throw ValidationError("count must be >= 1");
    }
    if (t.value() > 1.0) {
        throw ValidationError("t must lie in (0, 1] for series paths");
    }
    std::vector<double> values(count);
    detail::parallel_for(count, true, [&](std::size_t k) {
        values[k] = path_value_at(params, config, t, GaussianStream(seed, k));
    });
    return MarginalSample(t, std::move(values));
}

SweepResult run_sweep(EstimatorKind kind, const MarginalSample& sample,
                      const KnownParams& known, const std::vector<int>& ns,
                      double true_value) {
    if (ns.empty()) {
        throw ValidationError("n list must be nonempty");
    }
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ns[i] < 1 || (i > 0 && ns[i] <= ns[i - 1])) {
            throw ValidationError("n list must be strictly increasing and positive");
        }
    }
    if (static_cast<std::size_t>(ns.back()) > sample.size()) {
        throw ValidationError("n exceeds the sample size");
    }

    const RunningEstimate run = running_batch(kind, sample, known);
    SweepResult result;
    result.rows.reserve(ns.size());
    for (int n : ns) {
        result.rows.push_back(
            SweepRow{n, run.values()[static_cast<std::size_t>(n) - 1], true_value});
    }
    return result;
}

bool FixtureReport::all_pass() const noexcept {
    for (const auto& row : rows) {
        if (!row.pass) {
            return false;
        }
    }
    return true;
}

double FixtureReport::max_delta() const noexcept {
    double m = 0.0;
    for (const auto& row : rows) {
        m = std::max(m, row.delta);
    }
    return m;
}

FixtureReport check_fixture(double tolerance) {
    return check_fixture(fixture::table41(), tolerance);
}

FixtureReport check_fixture(std::span<const double> sample_values,
                            double tolerance) {
    if (!(tolerance >= 0.0)) {
        throw ValidationError("tolerance must be >= 0");
    }
    const MarginalSample sample(
        TimePoint(fixture::kT),
        std::vector<double>(sample_values.begin(), sample_values.end()));
    const KnownParams known{fixture::kX0, fixture::kMu};
    const std::vector<int> ns = fixture::sweep_ns();

    FixtureReport report;
    report.tolerance = tolerance;
    report.rows.reserve(2 * ns.size());

    const auto compare = [&](EstimatorKind kind, std::span<const double> expected,
                             double true_value) {
        const SweepResult sweep = run_sweep(kind, sample, known, ns, true_value);
        for (std::size_t i = 0; i < ns.size(); ++i) {
            const double computed = sweep.rows[i].estimate;
            const double delta = std::abs(computed - expected[i]);
            report.rows.push_back(FixtureRow{kind, ns[i], expected[i], computed,
                                             delta, delta <= tolerance});
        }
    };
    compare(EstimatorKind::sigma2, fixture::table42_sigma2(),
            fixture::kSigma * fixture::kSigma);
    compare(EstimatorKind::mu, fixture::table43_mu(), fixture::kMu);
    return report;
}

PluginEstimate plugin_pipeline(const PairedSample& paired,
                               const MarginalSample& extra) {
    const JointEstimate joint = estimate_joint(paired);
    const double sigma2 = estimate_sigma2(extra, joint.x0_hat, joint.mu_hat);
    return PluginEstimate{joint.x0_hat, joint.mu_hat, sigma2};
}

namespace {

double true_value_for(EstimatorKind kind, const WienerParams& p) {
    switch (kind) {
    case EstimatorKind::sigma2:
        return p.sigma() * p.sigma();
    case EstimatorKind::mu:
    case EstimatorKind::joint_mu:
        return p.mu();
    case EstimatorKind::x0:
    case EstimatorKind::joint_x0:
        return p.x0();
    }
    return 0.0;
}

bool is_joint(EstimatorKind kind) {
    return kind == EstimatorKind::joint_x0 || kind == EstimatorKind::joint_mu;
}

} // namespace

std::vector<RmseRow> consistency_curve(const CurveConfig& config) {
    if (config.replications < 1) {
        throw ValidationError("replications must be >= 1");
    }
    const std::vector<int>& ns = config.ns;
    if (ns.empty()) {
        throw ValidationError("n list must be nonempty");
    }
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ns[i] < 1 || (i > 0 && ns[i] <= ns[i - 1])) {
            throw ValidationError("n list must be strictly increasing and positive");
        }
    }
    if (ns.back() < 10) {
        throw ValidationError("largest n must be >= 10");
    }

    const TimePoint t1(config.t1);
    const auto n_max = static_cast<std::size_t>(ns.back());
    const double truth = true_value_for(config.kind, config.params);
    const auto reps = static_cast<std::size_t>(config.replications);

    // One slot per (replication, n); filled independently, reduced in
    // replication order so threaded and sequential runs agree bit-for-bit.
    std::vector<double> sq_err(reps * ns.size());

    detail::parallel_for(reps, config.parallel, [&](std::size_t r) {
        const GaussianStream stream(config.seed, r);
        std::vector<double> prefix;
        if (is_joint(config.kind)) {
            const TimePoint t2(config.t2);
            detail::NormalSequence seq(stream);
            std::vector<std::pair<double, double>> pairs(n_max);
            for (auto& [z1, z2] : pairs) {
                z1 = marginal_from_normal(config.params, t1, seq.next());
                z2 = marginal_from_normal(config.params, t2, seq.next());
            }
            const PairedSample paired(t1, t2, std::move(pairs));
            const JointRunning run = running_joint(paired);
            prefix = config.kind == EstimatorKind::joint_x0 ? run.x0_hat.values()
                                                            : run.mu_hat.values();
        } else {
            const MarginalSample sample =
                sample_marginal(config.params, t1, n_max, stream);
            const KnownParams known{config.params.x0(), config.params.mu()};
            prefix = running_batch(config.kind, sample, known).values();
        }
        for (std::size_t i = 0; i < ns.size(); ++i) {
            const double err =
                prefix[static_cast<std::size_t>(ns[i]) - 1] - truth;
            sq_err[r * ns.size() + i] = err * err;
        }
    });

    std::vector<RmseRow> rows(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) {
        detail::NeumaierSum total;
        for (std::size_t r = 0; r < reps; ++r) {
            total.add(sq_err[r * ns.size() + i]);
        }
        rows[i] = RmseRow{ns[i],
                          std::sqrt(total.value() / static_cast<double>(reps))};
    }
    return rows;
}

} // namespace wiener
