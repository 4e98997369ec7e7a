#include "wiener/estimators.hpp"

#include "wiener/fixture.hpp"
#include "wiener/rng.hpp"
#include "wiener/simulator.hpp"

#include "stats.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace wiener;

namespace {

MarginalSample fixture_prefix(std::size_t n) {
    const auto table = fixture::table41();
    return MarginalSample(TimePoint(fixture::kT),
                          {table.begin(), table.begin() + n});
}

PairedSample simulate_pairs(const WienerParams& p, double t1, double t2,
                            std::size_t n, Seed seed) {
    detail::NormalSequence seq{GaussianStream(seed, 0)};
    std::vector<std::pair<double, double>> pairs(n);
    for (auto& [z1, z2] : pairs) {
        z1 = marginal_from_normal(p, TimePoint(t1), seq.next());
        z2 = marginal_from_normal(p, TimePoint(t2), seq.next());
    }
    return PairedSample(TimePoint(t1), TimePoint(t2), std::move(pairs));
}

} // namespace

TEST_CASE("sigma2 estimate on the first five reference observations") {
    const double est = estimate_sigma2(fixture_prefix(5), 3.0, -1.0);
    CHECK(std::abs(est - 3.182349256) < 1e-3);
}

TEST_CASE("sigma2 is zero on deviation-free data") {
    const MarginalSample s(TimePoint(0.5), std::vector<double>(7, 2.5));
    CHECK(estimate_sigma2(s, 3.0, -1.0) == 0.0);
}

TEST_CASE("symmetric unit deviations give sigma2 == 1 at any t") {
    for (double t : {0.5, 2.0, 0.123}) {
        const double center = 1.0 + t * 0.25; // x0=1, mu=0.25
        const MarginalSample s(
            TimePoint(t), {center + std::sqrt(t), center - std::sqrt(t)});
        CHECK(estimate_sigma2(s, 1.0, 0.25) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("mu estimate on the first five reference observations") {
    CHECK(std::abs(estimate_mu(fixture_prefix(5), 3.0) - 0.12624) < 1e-3);
}

TEST_CASE("mu is zero when every observation sits at x0") {
    const MarginalSample s(TimePoint(0.8), std::vector<double>(5, 3.0));
    CHECK(estimate_mu(s, 3.0) == 0.0);
}

TEST_CASE("mu recovers the drift exactly from noiseless data") {
    const MarginalSample s(TimePoint(0.5), std::vector<double>(9, 2.5));
    CHECK(estimate_mu(s, 3.0) == -1.0);
}

TEST_CASE("x0 recovers the start exactly from noiseless data") {
    const MarginalSample s(TimePoint(0.5), std::vector<double>(9, 2.5));
    CHECK(estimate_x0(s, -1.0) == 3.0);
}

TEST_CASE("x0 with zero drift is the sample mean") {
    const MarginalSample s(TimePoint(0.7), {5.0});
    CHECK(estimate_x0(s, 0.0) == 5.0);
}

TEST_CASE("x0 estimate on the first five reference observations") {
    // Hand value: mean(z_1..z_5) = 15.3156/5 = 3.06312, minus t*mu = -0.5.
    CHECK(std::abs(estimate_x0(fixture_prefix(5), -1.0) - 3.56312) < 1e-4);
}

TEST_CASE("joint estimator identities") {
    SUBCASE("noiseless pairs invert the two-point line") {
        const PairedSample s(TimePoint(0.5), TimePoint(1.0),
                             std::vector<std::pair<double, double>>(6, {2.5, 2.0}));
        const JointEstimate est = estimate_joint(s);
        CHECK(est.x0_hat == 3.0);
        CHECK(est.mu_hat == -1.0);
    }
    SUBCASE("single pair, hand-computed") {
        const PairedSample s(TimePoint(1.0), TimePoint(2.0), {{5.0, 6.0}});
        const JointEstimate est = estimate_joint(s);
        CHECK(est.x0_hat == 4.0);
        CHECK(est.mu_hat == 1.0);
    }
}

TEST_CASE("joint estimator lands within 4 analytic standard errors") {
    constexpr std::size_t n = 100000;
    const double t1 = 0.5, t2 = 1.0, sigma2 = 4.0;
    const PairedSample s =
        simulate_pairs(WienerParams(3.0, -1.0, 2.0), t1, t2, n, Seed{17});
    const JointEstimate est = estimate_joint(s);
    const double dn = static_cast<double>(n) * (t2 - t1) * (t2 - t1);
    const double se_x0 = std::sqrt(sigma2 * (t2 * t2 * t1 + t1 * t1 * t2) / dn);
    const double se_mu = std::sqrt(sigma2 * (t1 + t2) / dn);
    CHECK(std::abs(est.x0_hat - 3.0) < 4.0 * se_x0);
    CHECK(std::abs(est.mu_hat - -1.0) < 4.0 * se_mu);
}

TEST_CASE("running sigma2 over the reference table matches the expected column") {
    const RunningEstimate run = running_sigma2(fixture_prefix(100), 3.0, -1.0);
    const auto expected = fixture::table42_sigma2();
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const std::size_t n = 5 * (i + 1);
        CHECK(std::abs(run.values()[n - 1] - expected[i]) < 2e-3);
    }
}

TEST_CASE("running mu over the reference table matches the expected column") {
    const RunningEstimate run = running_mu(fixture_prefix(100), 3.0);
    const auto expected = fixture::table43_mu();
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const std::size_t n = 5 * (i + 1);
        CHECK(std::abs(run.values()[n - 1] - expected[i]) < 2e-3);
    }
}

TEST_CASE("constant data gives a constant running sequence") {
    const MarginalSample s(TimePoint(0.5), std::vector<double>(64, 2.5));
    const RunningEstimate rs = running_sigma2(s, 3.0, -1.0);
    const RunningEstimate rm = running_mu(s, 3.0);
    const RunningEstimate rx = running_x0(s, -1.0);
    for (double v : rs.values()) {
        CHECK(v == 0.0);
    }
    for (double v : rm.values()) {
        CHECK(v == -1.0);
    }
    for (double v : rx.values()) {
        CHECK(v == 3.0);
    }
}

TEST_CASE("running prefix values equal batch recomputation exactly") {
    const WienerParams p(3.0, -1.0, 2.0);
    const MarginalSample s =
        sample_marginal(p, TimePoint(0.5), 200, GaussianStream(Seed{8}, 0));

    const RunningEstimate rs = running_sigma2(s, 3.0, -1.0);
    const RunningEstimate rm = running_mu(s, 3.0);
    const RunningEstimate rx = running_x0(s, -1.0);
    for (std::size_t j = 0; j < s.size(); ++j) {
        const MarginalSample prefix(
            s.time(), {s.values().begin(), s.values().begin() + j + 1});
        CHECK(rs.values()[j] == estimate_sigma2(prefix, 3.0, -1.0));
        CHECK(rm.values()[j] == estimate_mu(prefix, 3.0));
        CHECK(rx.values()[j] == estimate_x0(prefix, -1.0));
    }

    const PairedSample pairs = simulate_pairs(p, 0.5, 1.0, 100, Seed{8});
    const JointRunning rj = running_joint(pairs);
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        const PairedSample prefix(
            pairs.time1(), pairs.time2(),
            {pairs.pairs().begin(), pairs.pairs().begin() + j + 1});
        const JointEstimate batch = estimate_joint(prefix);
        CHECK(rj.x0_hat.values()[j] == batch.x0_hat);
        CHECK(rj.mu_hat.values()[j] == batch.mu_hat);
    }
}

TEST_CASE("window bounds") {
    SUBCASE("constant sequence collapses to a point") {
        const RunningEstimate run(std::vector<double>(10, 1.25));
        const WindowBounds w = window_bounds(run, 3);
        CHECK(w.lower == 1.25);
        CHECK(w.upper == 1.25);
    }
    SUBCASE("direct min/max") {
        const RunningEstimate run({1.0, 3.0, 2.0, 4.0});
        const WindowBounds w = window_bounds(run, 1);
        CHECK(w.lower == 2.0);
        CHECK(w.upper == 4.0);
    }
    SUBCASE("burn-in must leave at least one entry") {
        const RunningEstimate run({1.0, 2.0});
        CHECK_THROWS_AS(window_bounds(run, 2), ValidationError);
        CHECK_THROWS_AS(window_bounds(run, 5), ValidationError);
        CHECK_NOTHROW(window_bounds(run, 1));
    }
    SUBCASE("larger burn-in nests the bracket") {
        testutil::TestRng rng(4242);
        std::vector<double> values(200);
        for (double& v : values) {
            v = rng.uniform(-1, 1);
        }
        const RunningEstimate run(values);
        WindowBounds prev = window_bounds(run, 0);
        for (std::size_t burn : {10u, 50u, 120u, 199u}) {
            const WindowBounds w = window_bounds(run, burn);
            CHECK(w.lower >= prev.lower);
            CHECK(w.upper <= prev.upper);
            prev = w;
        }
    }
}

TEST_CASE("tail window of a long sigma2 run brackets the true parameter") {
    constexpr std::size_t n = 100000;
    constexpr std::size_t burn = 50000;
    const MarginalSample s = sample_marginal(WienerParams(3.0, -1.0, 2.0),
                                             TimePoint(0.5), n,
                                             GaussianStream(Seed{23}, 0));
    const WindowBounds w = window_bounds(running_sigma2(s, 3.0, -1.0), burn);
    // 4-SE band for the estimate at the burn-in point, doubled to cover the
    // running extremes over the tail.
    const double tol =
        2.0 * (4.0 * 4.0 * std::sqrt(2.0 / static_cast<double>(burn)));
    CHECK(std::abs(w.lower - 4.0) < tol);
    CHECK(std::abs(w.upper - 4.0) < tol);
    CHECK(w.lower <= w.upper);
}

TEST_CASE("batch estimators are permutation invariant") {
    testutil::TestRng rng(99);
    std::vector<double> values(1000);
    for (double& v : values) {
        v = rng.uniform(-10, 10);
    }
    const MarginalSample a(TimePoint(0.5), values);
    testutil::shuffle(values, rng);
    const MarginalSample b(TimePoint(0.5), values);

    CHECK(testutil::rel_diff(estimate_sigma2(a, 3.0, -1.0),
                             estimate_sigma2(b, 3.0, -1.0)) < 1e-12);
    CHECK(testutil::rel_diff(estimate_mu(a, 3.0), estimate_mu(b, 3.0)) < 1e-12);
    CHECK(testutil::rel_diff(estimate_x0(a, -1.0), estimate_x0(b, -1.0)) < 1e-12);

    std::vector<std::pair<double, double>> pairs(500);
    for (auto& [z1, z2] : pairs) {
        z1 = rng.uniform(-5, 5);
        z2 = rng.uniform(-5, 5);
    }
    const PairedSample pa(TimePoint(0.5), TimePoint(1.0), pairs);
    testutil::shuffle(pairs, rng);
    const PairedSample pb(TimePoint(0.5), TimePoint(1.0), pairs);
    const JointEstimate ja = estimate_joint(pa);
    const JointEstimate jb = estimate_joint(pb);
    CHECK(testutil::rel_diff(ja.x0_hat, jb.x0_hat) < 1e-12);
    CHECK(testutil::rel_diff(ja.mu_hat, jb.mu_hat) < 1e-12);
}

TEST_CASE("scaling the deviations by c scales sigma2 by c^2") {
    testutil::TestRng rng(55);
    const double x0 = 1.5, mu = -0.75, t = 0.8;
    const double center = x0 + t * mu;
    std::vector<double> values(300), scaled(300);
    const double c = 2.5;
    for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = rng.uniform(-4, 4);
        scaled[i] = center + c * (values[i] - center);
    }
    const double base = estimate_sigma2(MarginalSample(TimePoint(t), values), x0, mu);
    const double grown =
        estimate_sigma2(MarginalSample(TimePoint(t), scaled), x0, mu);
    CHECK(testutil::rel_diff(grown, c * c * base) < 1e-12);
}

TEST_CASE("shifting the data shifts mu by delta/t and x0 by delta") {
    testutil::TestRng rng(56);
    const double t = 0.4, delta = 1.75;
    std::vector<double> values(300), shifted(300);
    for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = rng.uniform(-4, 4);
        shifted[i] = values[i] + delta;
    }
    const MarginalSample a(TimePoint(t), values);
    const MarginalSample b(TimePoint(t), shifted);
    CHECK(testutil::rel_diff(estimate_mu(b, 3.0),
                             estimate_mu(a, 3.0) + delta / t) < 1e-12);
    CHECK(testutil::rel_diff(estimate_x0(b, -1.0),
                             estimate_x0(a, -1.0) + delta) < 1e-12);
}

TEST_CASE("joint estimate reproduces both prefix means exactly in exact arithmetic") {
    const PairedSample s =
        simulate_pairs(WienerParams(3.0, -1.0, 2.0), 0.5, 1.0, 4000, Seed{31});
    const JointEstimate est = estimate_joint(s);
    double m1 = 0.0, m2 = 0.0;
    for (const auto& [z1, z2] : s.pairs()) {
        m1 += z1;
        m2 += z2;
    }
    m1 /= static_cast<double>(s.size());
    m2 /= static_cast<double>(s.size());
    CHECK(testutil::rel_diff(est.x0_hat + est.mu_hat * s.t1(), m1) < 1e-12);
    CHECK(testutil::rel_diff(est.x0_hat + est.mu_hat * s.t2(), m2) < 1e-12);
}

TEST_CASE("replication means sit within 4 standard errors of the truth") {
    constexpr int reps = 1000;
    constexpr std::size_t n = 100;
    const WienerParams p(3.0, -1.0, 2.0);
    const double t1 = 0.5, t2 = 1.0, sigma2 = 4.0;
    std::vector<double> est_s2(reps), est_mu(reps), est_x0(reps),
        est_jx(reps), est_jm(reps);
    for (int r = 0; r < reps; ++r) {
        const auto idx = static_cast<std::uint64_t>(r);
        const MarginalSample s =
            sample_marginal(p, TimePoint(t1), n, GaussianStream(Seed{71}, idx));
        est_s2[r] = estimate_sigma2(s, 3.0, -1.0);
        est_mu[r] = estimate_mu(s, 3.0);
        est_x0[r] = estimate_x0(s, -1.0);
        const PairedSample pairs =
            simulate_pairs(p, t1, t2, n, Seed{0xABCD + idx});
        const JointEstimate joint = estimate_joint(pairs);
        est_jx[r] = joint.x0_hat;
        est_jm[r] = joint.mu_hat;
    }
    const double nd = static_cast<double>(n);
    const double rd = static_cast<double>(reps);
    const double var_s2 = 2.0 * sigma2 * sigma2 / nd;
    const double var_mu = sigma2 / (t1 * nd);
    const double var_x0 = sigma2 * t1 / nd;
    const double dsq = (t2 - t1) * (t2 - t1);
    const double var_jx = sigma2 * (t2 * t2 * t1 + t1 * t1 * t2) / (nd * dsq);
    const double var_jm = sigma2 * (t1 + t2) / (nd * dsq);

    CHECK(std::abs(testutil::mean(est_s2) - 4.0) < 4.0 * std::sqrt(var_s2 / rd));
    CHECK(std::abs(testutil::mean(est_mu) - -1.0) < 4.0 * std::sqrt(var_mu / rd));
    CHECK(std::abs(testutil::mean(est_x0) - 3.0) < 4.0 * std::sqrt(var_x0 / rd));
    CHECK(std::abs(testutil::mean(est_jx) - 3.0) < 4.0 * std::sqrt(var_jx / rd));
    CHECK(std::abs(testutil::mean(est_jm) - -1.0) < 4.0 * std::sqrt(var_jm / rd));
}

TEST_CASE("estimator kind dispatch") {
    const MarginalSample s = fixture_prefix(10);
    const KnownParams known{3.0, -1.0};
    CHECK(estimate_batch(EstimatorKind::sigma2, s, known) ==
          estimate_sigma2(s, 3.0, -1.0));
    CHECK(estimate_batch(EstimatorKind::mu, s, known) == estimate_mu(s, 3.0));
    CHECK(estimate_batch(EstimatorKind::x0, s, known) == estimate_x0(s, -1.0));
    CHECK_THROWS_AS(estimate_batch(EstimatorKind::joint_x0, s, known),
                    ValidationError);
    CHECK_THROWS_AS(running_batch(EstimatorKind::joint_mu, s, known),
                    ValidationError);
}

TEST_CASE("nuisance parameters must be finite") {
    const MarginalSample s = fixture_prefix(5);
    const double nan = std::nan("");
    CHECK_THROWS_AS(estimate_sigma2(s, nan, -1.0), ValidationError);
    CHECK_THROWS_AS(estimate_mu(s, nan), ValidationError);
    CHECK_THROWS_AS(estimate_x0(s, nan), ValidationError);
}
