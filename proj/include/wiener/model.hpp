#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wiener {

/// Thrown when a domain invariant is violated (non-finite input, empty
/// sample, degenerate time pair, ...). The CLI maps it to exit code 2.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {
void require_finite(double v, const char* what);
}

/// Parameters of the process X_t = x0 + mu*t + sigma*W_t.
///
/// sigma >= 0; sigma == 0 is the degenerate deterministic line. All fields
/// must be finite. Immutable value type.
class WienerParams {
public:
    WienerParams(double x0, double mu, double sigma);

    double x0() const noexcept { return x0_; }
    double mu() const noexcept { return mu_; }
    double sigma() const noexcept { return sigma_; }

private:
    double x0_;
    double mu_;
    double sigma_;
};

/// A strictly positive, finite observation time.
class TimePoint {
public:
    explicit TimePoint(double t);

    double value() const noexcept { return t_; }

private:
    double t_;
};

/// Marginal law of the process at time t: Normal(x0 + mu*t, sigma^2 * t).
struct MarginalLaw {
    double mean;
    double variance;
};

MarginalLaw marginal_law(const WienerParams& params, TimePoint t);

/// Observations z_1..z_n of independent trajectories at one common time t.
class MarginalSample {
public:
    MarginalSample(TimePoint t, std::vector<double> values);

    TimePoint time() const noexcept { return t_; }
    double t() const noexcept { return t_.value(); }
    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

private:
    TimePoint t_;
    std::vector<double> values_;
};

/// Observation pairs (z1_k, z2_k) of independent trajectories at two
/// distinct times t1 and t2.
class PairedSample {
public:
    PairedSample(TimePoint t1, TimePoint t2,
                 std::vector<std::pair<double, double>> pairs);

    TimePoint time1() const noexcept { return t1_; }
    TimePoint time2() const noexcept { return t2_; }
    double t1() const noexcept { return t1_.value(); }
    double t2() const noexcept { return t2_.value(); }
    const std::vector<std::pair<double, double>>& pairs() const noexcept {
        return pairs_;
    }
    std::size_t size() const noexcept { return pairs_.size(); }

private:
    TimePoint t1_;
    TimePoint t2_;
    std::vector<std::pair<double, double>> pairs_;
};

} // namespace wiener
