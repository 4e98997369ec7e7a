#pragma once

#include <span>
#include <vector>

namespace wiener::fixture {

/// Regime the reference dataset was generated in.
inline constexpr double kX0 = 3.0;
inline constexpr double kMu = -1.0;
inline constexpr double kSigma = 2.0;
inline constexpr double kT = 0.5;

/// 100 reference observations of the process at t = 0.5 (table41), plus the
/// expected prefix-estimator values over n = 5, 10, ..., 100 computed from
/// them. Transcribed verbatim; used by the golden regression check.
std::span<const double> table41();
std::span<const double> table42_sigma2();
std::span<const double> table43_mu();

/// The n values the expected columns are tabulated at: 5, 10, ..., 100.
std::vector<int> sweep_ns();

} // namespace wiener::fixture
