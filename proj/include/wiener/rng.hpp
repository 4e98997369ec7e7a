#pragma once

#include <cstdint>
#include <vector>

namespace wiener {

/// Master seed for the whole run. Any 64-bit value is valid; the CLI
/// defaults to 0 (never wall-clock).
struct Seed {
    std::uint64_t value = 0;
};

/// Identifies one deterministic substream of standard Gaussian draws.
///
/// A stream is a value, not a cursor: the pair (seed, stream_index) fully
/// determines an infinite N(0,1) sequence, and every draw operation reads
/// that sequence from its beginning. Distinct indices under the same seed
/// give statistically independent sequences, which is what makes
/// order-independent parallel trajectory generation possible (trajectory k
/// always owns stream k, no matter which thread gets there first).
class GaussianStream {
public:
    GaussianStream(Seed seed, std::uint64_t stream_index) noexcept
        : seed_(seed), index_(stream_index) {}

    Seed seed() const noexcept { return seed_; }
    std::uint64_t stream_index() const noexcept { return index_; }

private:
    Seed seed_;
    std::uint64_t index_;
};

/// First `count` draws of the stream's N(0,1) sequence.
///
/// Pure: repeated calls with the same arguments return identical vectors,
/// and draw(n) is a prefix of draw(m) for n < m. count must be >= 1.
std::vector<double> draw_standard_normals(const GaussianStream& stream,
                                          std::size_t count);

namespace detail {

/// Streaming cursor over a stream's Gaussian sequence. next() yields the
/// same values, in the same order, as draw_standard_normals on the stream.
class NormalSequence {
public:
    explicit NormalSequence(const GaussianStream& stream) noexcept;

    double next() noexcept;

private:
    std::uint64_t next_u64() noexcept;

    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace detail

} // namespace wiener
