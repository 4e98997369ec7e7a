#pragma once

#include "wiener/model.hpp"

#include <cstddef>
#include <vector>

namespace wiener {

/// Prefix sequence T_1..T_n of an estimator: values()[j] is the batch
/// estimate over the first j+1 observations, bit-for-bit.
class RunningEstimate {
public:
    explicit RunningEstimate(std::vector<double> values);

    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double last() const noexcept { return values_.back(); }

private:
    std::vector<double> values_;
};

/// Tail min/max of a running estimate after discarding the first `burn_in`
/// entries. For a convergent estimator both bracket the limit once the
/// burn-in is large enough; this is the finite-data stand-in for the
/// liminf/limsup functionals of the infinite sample.
struct WindowBounds {
    std::size_t burn_in;
    double lower;
    double upper;
};

struct JointEstimate {
    double x0_hat;
    double mu_hat;
};

/// Noise-scale estimator with x0 and mu known:
///   T_n = sum_k (z_k - x0 - t*mu)^2 / (n*t)  ->  sigma^2.
double estimate_sigma2(const MarginalSample& sample, double x0, double mu);

/// Drift estimator with x0 known:
///   T_n = sum_k (z_k - x0) / (n*t)  ->  mu.
double estimate_mu(const MarginalSample& sample, double x0);

/// Initial-position estimator with mu known:
///   T_n = sum_k (z_k - t*mu) / n  ->  x0.
double estimate_x0(const MarginalSample& sample, double mu);

/// Two-time joint estimator of (x0, mu) with sigma unrestricted:
///   x0_hat = sum_k (t2*z1_k - t1*z2_k) / (n*(t2 - t1))
///   mu_hat = sum_k (z2_k - z1_k)       / (n*(t2 - t1)).
/// Solves the two-point line fit through the sample means at t1 and t2:
/// x0_hat + mu_hat*t1 == mean(z1) and x0_hat + mu_hat*t2 == mean(z2).
JointEstimate estimate_joint(const PairedSample& sample);

RunningEstimate running_sigma2(const MarginalSample& sample, double x0,
                               double mu);
RunningEstimate running_mu(const MarginalSample& sample, double x0);
RunningEstimate running_x0(const MarginalSample& sample, double mu);

struct JointRunning {
    RunningEstimate x0_hat;
    RunningEstimate mu_hat;
};
JointRunning running_joint(const PairedSample& sample);

WindowBounds window_bounds(const RunningEstimate& run, std::size_t burn_in);

/// Dispatch tags for the sweep/curve machinery. joint_x0/joint_mu select
/// one component of the two-time estimator.
enum class EstimatorKind { sigma2, mu, x0, joint_x0, joint_mu };

const char* to_string(EstimatorKind kind) noexcept;

/// Nuisance parameters assumed known by the marginal estimators; each kind
/// reads only the fields its formula needs.
struct KnownParams {
    double x0 = 0.0;
    double mu = 0.0;
};

double estimate_batch(EstimatorKind kind, const MarginalSample& sample,
                      const KnownParams& known);
RunningEstimate running_batch(EstimatorKind kind, const MarginalSample& sample,
                              const KnownParams& known);

namespace detail {

/// Neumaier-compensated accumulator. Used for every estimator sum, batch
/// and running alike, so prefix values stay bit-identical to batch
/// recomputation at any index and remain tight for n >= 1e6.
struct NeumaierSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) noexcept;
    double value() const noexcept { return sum + comp; }
};

} // namespace detail

} // namespace wiener
