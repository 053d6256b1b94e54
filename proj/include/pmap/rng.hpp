#pragma once

#include <cstdint>
#include <random>

namespace pmap {

using Rng = std::mt19937_64;

uint64_t splitmix64(uint64_t& state);

// independent stream for (seed, index): the seed is mixed through splitmix64
// so neighbouring indices give unrelated generators
Rng stream_rng(uint64_t seed, uint64_t index);

inline double uniform01(Rng& rng) { return std::generate_canonical<double, 64>(rng); }

}  // namespace pmap
