#pragma once

#include "wiener/model.hpp"
#include "wiener/rng.hpp"

#include <vector>

namespace wiener {

/// Truncation depth N of the sine-series path construction. The series
/// converges on [0, 1] only, so all series-based operations are restricted
/// to that interval.
class SeriesConfig {
public:
    explicit SeriesConfig(int terms = kDefaultTerms);

    int terms() const noexcept { return terms_; }

    static constexpr int kDefaultTerms = 1000;

private:
    int terms_;
};

/// One trajectory evaluated on the uniform grid 0, dt, 2*dt, ..., 1.
class PathGrid {
public:
    PathGrid(std::vector<double> times, std::vector<double> values);

    const std::vector<double>& times() const noexcept { return times_; }
    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return times_.size(); }

private:
    std::vector<double> times_;
    std::vector<double> values_;
};

/// z = x0 + mu*t + sigma*sqrt(t)*xi for a single standard normal xi.
/// Exposed so tests can inject xi directly.
double marginal_from_normal(const WienerParams& params, TimePoint t,
                            double xi) noexcept;

/// n observations of the exact marginal law at time t, one per consecutive
/// draw of the stream. Deterministic given (params, t, n, stream).
MarginalSample sample_marginal(const WienerParams& params, TimePoint t,
                               std::size_t n, const GaussianStream& stream);

/// Evaluates the truncated series
///   x(t) = x0 + mu*t + sigma*(d0*t + sqrt(2) * sum_{n=1}^{N} d_n sin(pi n t)/(pi n))
/// on the grid 0, dt, ..., 1, consuming terms+1 draws d_0..d_N from the
/// stream. dt must divide 1 within floating-point tolerance.
PathGrid build_path(const WienerParams& params, const SeriesConfig& config,
                    double dt, const GaussianStream& stream);

/// Single series evaluation at t in (0, 1] for the stream's trajectory.
/// Agrees bit-for-bit with build_path's grid value at the same t and stream.
double path_value_at(const WienerParams& params, const SeriesConfig& config,
                     TimePoint t, const GaussianStream& stream);

/// Variance of the truncated series at time t for noise scale sigma:
///   v_N(t) = sigma^2 * (t^2 + 2 * sum_{n=1}^{N} (sin(pi n t) / (pi n))^2).
/// Nondecreasing in N and bounded above by sigma^2 * t on [0, 1].
double truncated_variance(double sigma, const SeriesConfig& config, double t);

} // namespace wiener
