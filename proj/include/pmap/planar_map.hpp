#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pmap {

// Rooted planar map as a rotation system. Darts 0..2E-1, alpha pairs the two
// darts of an edge, sigma rotates counterclockwise around a vertex. The corner
// of dart d sits between sigma^{-1}(d) and d. The edgeless map has no darts.
struct PlanarMap {
  std::vector<int> alpha, sigma;
  int root = 0;

  static PlanarMap vertex();
  // alpha = (2i, 2i+1)
  static PlanarMap from_sigma(std::vector<int> sigma, int root = 0);

  int darts() const { return static_cast<int>(sigma.size()); }
  int edges() const { return darts() / 2; }
  int vertices() const;
  int faces() const;
  bool connected() const;
  bool is_planar() const;  // connected and v - e + f = 2

  std::vector<int> vertex_of() const;  // dart -> vertex id
  std::vector<int> sigma_inverse() const;

  bool has_loop() const;
  bool is_simple() const;
  bool is_nonseparable() const;
  bool is_3connected() const;

  // BFS relabelling from the root; equal codes iff isomorphic as rooted maps
  std::vector<int> canonical_code() const;
  PlanarMap canonical() const;
  PlanarMap rerooted(int d) const;

  std::string to_json() const;
  static PlanarMap from_json(const std::string& s);

  void validate() const;  // throws std::invalid_argument
};

struct CodeHash {
  size_t operator()(const std::vector<int>& v) const {
    uint64_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<uint64_t>(x + 1);
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

// U_r(M, root corner): submap induced by the vertices within graph distance r
// of the root vertex, rooted at the same corner, in canonical form
std::vector<int> neighbourhood_code(const PlanarMap& m, int r);
std::vector<int> neighbourhood_code_at(const PlanarMap& m, int dart, int r);

}  // namespace pmap
