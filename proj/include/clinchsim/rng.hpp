#pragma once

#include <cstdint>
#include <random>

namespace clinchsim {

/// Deterministic random stream keyed by (master seed, stream index).
///
/// The engine is std::mt19937_64 seeded through std::seed_seq, and bounded
/// draws use Boost.Random's distributions; all three are specified
/// bit-for-bit, so a given key reproduces the same draws on every platform
/// and independently of which thread consumes the stream.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

    /// Uniform integer in [0, bound).
    std::size_t below(std::size_t bound);
    /// Fair coin.
    bool coin();
    /// Raw 64-bit draw.
    std::uint64_t next() { return engine_(); }

    [[nodiscard]] std::uint64_t master_seed() const { return seed_; }
    [[nodiscard]] std::uint64_t stream_index() const { return index_; }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
    std::uint64_t index_;
};

}  // namespace clinchsim
