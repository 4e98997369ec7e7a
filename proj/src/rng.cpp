#include "wiener/rng.hpp"

#include "wiener/model.hpp"

#include <cmath>
#include <numbers>

namespace wiener {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer
std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

std::uint64_t splitmix_next(std::uint64_t& x) {
    x += kGolden;
    return mix64(x);
}

// Collapses (seed, stream_index) into one well-mixed 64-bit key so that
// nearby seeds or indices land in unrelated generator states.
std::uint64_t stream_key(Seed seed, std::uint64_t index) {
    const std::uint64_t a = mix64(seed.value + kGolden);
    const std::uint64_t b = mix64(index + 0x6A09E667F3BCC909ULL);
    return mix64(a ^ (b + kGolden));
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

// Converts to the open interval (0, 1); never 0, so log(u) is safe.
double to_unit_open(std::uint64_t x) {
    return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
}

} // namespace

namespace detail {

NormalSequence::NormalSequence(const GaussianStream& stream) noexcept {
    std::uint64_t x = stream_key(stream.seed(), stream.stream_index());
    for (auto& word : state_) {
        word = splitmix_next(x);
    }
    // xoshiro's all-zero state is absorbing; unreachable in practice but
    // cheap to rule out.
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) {
        state_[0] = kGolden;
    }
}

// xoshiro256++
std::uint64_t NormalSequence::next_u64() noexcept {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double NormalSequence::next() noexcept {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; both outputs are used, so one uniform pair yields two draws.
    const double u1 = to_unit_open(next_u64());
    const double u2 = to_unit_open(next_u64());
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

} // namespace detail

std::vector<double> draw_standard_normals(const GaussianStream& stream,
                                          std::size_t count) {
    if (count == 0) {
        throw ValidationError("count must be >= 1");
    }
    detail::NormalSequence seq(stream);
    std::vector<double> out(count);
    for (double& v : out) {
        v = seq.next();
    }
    return out;
}

} // namespace wiener
