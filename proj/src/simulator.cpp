#include "wiener/simulator.hpp"

#include <cmath>
#include <numbers>
#include <span>
#include <utility>

namespace wiener {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

// Shared series kernel: both the grid builder and the single-point
// evaluator go through here so their values agree exactly. Terms are summed
// in ascending n; the accumulator is long double to keep the 1/(pi n) tail
// from eroding the sum at N ~ 1000.
double series_value(const WienerParams& params, std::span<const double> draws,
                    double t) {
    long double acc = 0.0L;
    for (std::size_t n = 1; n < draws.size(); ++n) {
        const double pin = kPi * static_cast<double>(n);
        acc += static_cast<long double>(draws[n] * (std::sin(pin * t) / pin));
    }
    const double noise = draws[0] * t + kSqrt2 * static_cast<double>(acc);
    return params.x0() + params.mu() * t + params.sigma() * noise;
}

std::vector<double> series_draws(const SeriesConfig& config,
                                 const GaussianStream& stream) {
    return draw_standard_normals(stream,
                                 static_cast<std::size_t>(config.terms()) + 1);
}

} // namespace

SeriesConfig::SeriesConfig(int terms) : terms_(terms) {
    if (terms < 1) {
        throw ValidationError("terms must be >= 1");
    }
}

PathGrid::PathGrid(std::vector<double> times, std::vector<double> values)
    : times_(std::move(times)), values_(std::move(values)) {
    if (times_.empty() || times_.size() != values_.size()) {
        throw ValidationError("path grid times and values must match and be nonempty");
    }
    if (times_.front() != 0.0 || times_.back() > 1.0) {
        throw ValidationError("path grid must lie within [0, 1] and start at 0");
    }
    for (std::size_t i = 1; i < times_.size(); ++i) {
        if (!(times_[i] > times_[i - 1])) {
            throw ValidationError("path grid times must be strictly increasing");
        }
    }
}

double marginal_from_normal(const WienerParams& params, TimePoint t,
                            double xi) noexcept {
    return params.x0() + params.mu() * t.value() +
           params.sigma() * std::sqrt(t.value()) * xi;
}

MarginalSample sample_marginal(const WienerParams& params, TimePoint t,
                               std::size_t n, const GaussianStream& stream) {
    if (n == 0) {
        throw ValidationError("n must be >= 1");
    }
    detail::NormalSequence seq(stream);
    std::vector<double> values(n);
    for (double& z : values) {
        z = marginal_from_normal(params, t, seq.next());
    }
    return MarginalSample(t, std::move(values));
}

PathGrid build_path(const WienerParams& params, const SeriesConfig& config,
                    double dt, const GaussianStream& stream) {
    if (!std::isfinite(dt) || dt <= 0.0 || dt > 1.0) {
        throw ValidationError("dt must lie in (0, 1]");
    }
    const auto steps = static_cast<std::size_t>(std::llround(1.0 / dt));
    if (steps == 0 || std::abs(static_cast<double>(steps) * dt - 1.0) > 1e-9) {
        throw ValidationError("dt must divide 1");
    }

    const std::vector<double> draws = series_draws(config, stream);

    std::vector<double> times(steps + 1);
    std::vector<double> values(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) {
        // Pin the last grid point to 1.0; i*dt can land an ulp past it.
        times[i] = (i == steps) ? 1.0 : static_cast<double>(i) * dt;
        values[i] = series_value(params, draws, times[i]);
    }
    return PathGrid(std::move(times), std::move(values));
}

double path_value_at(const WienerParams& params, const SeriesConfig& config,
                     TimePoint t, const GaussianStream& stream) {
    if (t.value() > 1.0) {
        throw ValidationError("t must lie in (0, 1] for series paths");
    }
    const std::vector<double> draws = series_draws(config, stream);
    return series_value(params, draws, t.value());
}

double truncated_variance(double sigma, const SeriesConfig& config, double t) {
    detail::require_finite(sigma, "sigma");
    detail::require_finite(t, "t");
    if (sigma < 0.0) {
        throw ValidationError("sigma must be >= 0");
    }
    if (t < 0.0 || t > 1.0) {
        throw ValidationError("t must lie in [0, 1]");
    }
    long double acc = 0.0L;
    for (int n = 1; n <= config.terms(); ++n) {
        const double pin = kPi * static_cast<double>(n);
        const double term = std::sin(pin * t) / pin;
        acc += static_cast<long double>(term * term);
    }
    const double series = t * t + 2.0 * static_cast<double>(acc);
    return sigma * sigma * series;
}

} // namespace wiener
