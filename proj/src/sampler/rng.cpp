#include "pmap/rng.hpp"

namespace pmap {

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Rng stream_rng(uint64_t seed, uint64_t index) {
  uint64_t s = seed;
  uint64_t a = splitmix64(s);
  s = a ^ (index * 0xd1342543de82ef95ull + 1);
  std::seed_seq seq{static_cast<uint32_t>(splitmix64(s)), static_cast<uint32_t>(splitmix64(s)),
                    static_cast<uint32_t>(splitmix64(s)), static_cast<uint32_t>(splitmix64(s))};
  return Rng(seq);
}

}  // namespace pmap
