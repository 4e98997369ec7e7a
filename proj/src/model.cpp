#include "wiener/model.hpp"

#include <cmath>

namespace wiener {

namespace detail {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw ValidationError(std::string(what) + " must be finite");
    }
}

} // namespace detail

WienerParams::WienerParams(double x0, double mu, double sigma)
    : x0_(x0), mu_(mu), sigma_(sigma) {
    detail::require_finite(x0, "x0");
    detail::require_finite(mu, "mu");
    detail::require_finite(sigma, "sigma");
    if (sigma < 0.0) {
        throw ValidationError("sigma must be >= 0");
    }
}

TimePoint::TimePoint(double t) : t_(t) {
    detail::require_finite(t, "t");
    if (t <= 0.0) {
        throw ValidationError("t must be > 0");
    }
}

MarginalLaw marginal_law(const WienerParams& params, TimePoint t) {
    return MarginalLaw{params.x0() + params.mu() * t.value(),
                       params.sigma() * params.sigma() * t.value()};
}

MarginalSample::MarginalSample(TimePoint t, std::vector<double> values)
    : t_(t), values_(std::move(values)) {
    if (values_.empty()) {
        throw ValidationError("sample must contain at least one value");
    }
    for (double v : values_) {
        detail::require_finite(v, "sample value");
    }
}

PairedSample::PairedSample(TimePoint t1, TimePoint t2,
                           std::vector<std::pair<double, double>> pairs)
    : t1_(t1), t2_(t2), pairs_(std::move(pairs)) {
    if (t1_.value() == t2_.value()) {
        throw ValidationError("t1 and t2 must differ");
    }
    if (pairs_.empty()) {
        throw ValidationError("paired sample must contain at least one pair");
    }
    for (const auto& [z1, z2] : pairs_) {
        detail::require_finite(z1, "paired sample value");
        detail::require_finite(z2, "paired sample value");
    }
}

} // namespace wiener
