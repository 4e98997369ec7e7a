#include "wiener/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace wiener {

namespace detail {

void NeumaierSum::add(double v) noexcept {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
        comp += (sum - t) + v;
    } else {
        comp += (v - t) + sum;
    }
    sum = t;
}

} // namespace detail

namespace {

// One accumulation loop shared by the batch and running variants of each
// marginal estimator. The prefix identity running[j] == batch(first j+1)
// holds exactly because both sides execute this same operation sequence.
template <typename Transform>
double batch_scan(const std::vector<double>& z, double denom_scale,
                  Transform f) {
    detail::NeumaierSum acc;
    for (double v : z) {
        acc.add(f(v));
    }
    return acc.value() / (static_cast<double>(z.size()) * denom_scale);
}

template <typename Transform>
RunningEstimate running_scan(const std::vector<double>& z, double denom_scale,
                             Transform f) {
    detail::NeumaierSum acc;
    std::vector<double> values(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) {
        acc.add(f(z[j]));
        values[j] = acc.value() / (static_cast<double>(j + 1) * denom_scale);
    }
    return RunningEstimate(std::move(values));
}

} // namespace

RunningEstimate::RunningEstimate(std::vector<double> values)
    : values_(std::move(values)) {
    if (values_.empty()) {
        throw ValidationError("running estimate must contain at least one value");
    }
    for (double v : values_) {
        detail::require_finite(v, "running estimate value");
    }
}

double estimate_sigma2(const MarginalSample& sample, double x0, double mu) {
    detail::require_finite(x0, "x0");
    detail::require_finite(mu, "mu");
    const double center = x0 + sample.t() * mu;
    return batch_scan(sample.values(), sample.t(), [center](double z) {
        const double d = z - center;
        return d * d;
    });
}

double estimate_mu(const MarginalSample& sample, double x0) {
    detail::require_finite(x0, "x0");
    return batch_scan(sample.values(), sample.t(),
                      [x0](double z) { return z - x0; });
}

double estimate_x0(const MarginalSample& sample, double mu) {
    detail::require_finite(mu, "mu");
    const double shift = sample.t() * mu;
    return batch_scan(sample.values(), 1.0,
                      [shift](double z) { return z - shift; });
}

JointEstimate estimate_joint(const PairedSample& sample) {
    const double t1 = sample.t1();
    const double t2 = sample.t2();
    const double span = t2 - t1;
    detail::NeumaierSum pos;
    detail::NeumaierSum slope;
    for (const auto& [z1, z2] : sample.pairs()) {
        pos.add(t2 * z1 - t1 * z2);
        slope.add(z2 - z1);
    }
    const double n = static_cast<double>(sample.size());
    const JointEstimate est{pos.value() / (n * span),
                            slope.value() / (n * span)};
    if (!std::isfinite(est.x0_hat) || !std::isfinite(est.mu_hat)) {
        throw ValidationError("joint estimate overflowed; t1 and t2 too close");
    }
    return est;
}

RunningEstimate running_sigma2(const MarginalSample& sample, double x0,
                               double mu) {
    detail::require_finite(x0, "x0");
    detail::require_finite(mu, "mu");
    const double center = x0 + sample.t() * mu;
    return running_scan(sample.values(), sample.t(), [center](double z) {
        const double d = z - center;
        return d * d;
    });
}

RunningEstimate running_mu(const MarginalSample& sample, double x0) {
    detail::require_finite(x0, "x0");
    return running_scan(sample.values(), sample.t(),
                        [x0](double z) { return z - x0; });
}

RunningEstimate running_x0(const MarginalSample& sample, double mu) {
    detail::require_finite(mu, "mu");
    const double shift = sample.t() * mu;
    return running_scan(sample.values(), 1.0,
                        [shift](double z) { return z - shift; });
}

JointRunning running_joint(const PairedSample& sample) {
    const double t1 = sample.t1();
    const double t2 = sample.t2();
    const double span = t2 - t1;
    detail::NeumaierSum pos;
    detail::NeumaierSum slope;
    std::vector<double> x0_values(sample.size());
    std::vector<double> mu_values(sample.size());
    for (std::size_t j = 0; j < sample.size(); ++j) {
        const auto& [z1, z2] = sample.pairs()[j];
        pos.add(t2 * z1 - t1 * z2);
        slope.add(z2 - z1);
        const double n = static_cast<double>(j + 1);
        x0_values[j] = pos.value() / (n * span);
        mu_values[j] = slope.value() / (n * span);
    }
    return JointRunning{RunningEstimate(std::move(x0_values)),
                        RunningEstimate(std::move(mu_values))};
}

WindowBounds window_bounds(const RunningEstimate& run, std::size_t burn_in) {
    if (burn_in >= run.size()) {
        throw ValidationError("burn_in must be smaller than the run length");
    }
    const auto first = run.values().begin() + static_cast<std::ptrdiff_t>(burn_in);
    const auto [lo, hi] = std::minmax_element(first, run.values().end());
    return WindowBounds{burn_in, *lo, *hi};
}

const char* to_string(EstimatorKind kind) noexcept {
    switch (kind) {
    case EstimatorKind::sigma2:
        return "sigma2";
    case EstimatorKind::mu:
        return "mu";
    case EstimatorKind::x0:
        return "x0";
    case EstimatorKind::joint_x0:
        return "joint_x0";
    case EstimatorKind::joint_mu:
        return "joint_mu";
    }
    return "unknown";
}

double estimate_batch(EstimatorKind kind, const MarginalSample& sample,
                      const KnownParams& known) {
    switch (kind) {
    case EstimatorKind::sigma2:
        return estimate_sigma2(sample, known.x0, known.mu);
    case EstimatorKind::mu:
        return estimate_mu(sample, known.x0);
    case EstimatorKind::x0:
        return estimate_x0(sample, known.mu);
    default:
        throw ValidationError("joint estimator kinds need a paired sample");
    }
}

RunningEstimate running_batch(EstimatorKind kind, const MarginalSample& sample,
                              const KnownParams& known) {
    switch (kind) {
    case EstimatorKind::sigma2:
        return running_sigma2(sample, known.x0, known.mu);
    case EstimatorKind::mu:
        return running_mu(sample, known.x0);
    case EstimatorKind::x0:
        return running_x0(sample, known.mu);
    default:
        throw ValidationError("joint estimator kinds need a paired sample");
    }
}

} // namespace wiener
