#include "clinchsim/rng.hpp"

#include <stdexcept>

#include <boost/random/uniform_int_distribution.hpp>

namespace clinchsim {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : engine_(make_engine(master_seed, stream_index)), seed_(master_seed), index_(stream_index) {}

std::size_t RngStream::below(std::size_t bound) {
    if (bound == 0) throw std::invalid_argument("RngStream::below needs a positive bound");
    boost::random::uniform_int_distribution<std::size_t> dist(0, bound - 1);
    return dist(engine_);
}

bool RngStream::coin() { return (engine_() >> 63) != 0; }

}  // namespace clinchsim
