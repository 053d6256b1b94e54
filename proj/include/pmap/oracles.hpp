#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "pmap/laws.hpp"
#include "pmap/planar_map.hpp"
#include "pmap/rational.hpp"

namespace pmap {

struct OracleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kMapEdgeCap = 5;
inline constexpr int kGraphVertexCap = 6;

struct CatalogEntry {
  PlanarMap map;  // canonical form
  bool nonseparable = false;
  bool simple = false;
  bool three_connected = false;
};

struct MapCatalog {
  int edges = 0;
  std::vector<CatalogEntry> maps;  // sorted by canonical code

  size_t count() const { return maps.size(); }
  size_t count_nonseparable() const;
  size_t count_simple() const;
  size_t count_3connected() const;
};

// every rooted planar map with exactly `edges` edges, by exhaustive search
// over rotations with alpha = (2i, 2i+1) and root dart 0
MapCatalog enumerate_rooted_planar_maps(int edges);

// 2 3^n (2n)! / (n! (n+2)!)
Integer tutte_count(int n);

struct LabelledGraph {
  int n = 0;
  uint32_t edges = 0;  // bit index of {i<j} is edge_index(i, j)

  static int edge_index(int i, int j);
  bool has(int i, int j) const;
  int edge_count() const;
  int degree(int v) const;
  bool connected() const;
  bool biconnected() const;  // K2 counts as 2-connected
  bool triconnected() const;
};

// Kuratowski: no subdivision of K5 or K3,3
bool is_planar_graph(const LabelledGraph& g);

struct GraphCounts {
  int n = 0;
  // index = number of edges
  std::vector<Integer> all, connected, biconnected, triconnected, nonplanar;
};

GraphCounts enumerate_labelled_planar_graphs(int n);

struct WalkResult {
  Rational value;           // P(xi_1 + ... + xi_n = m) over the stored support
  Rational tail_bound = 0;  // bound on the contribution of the unstored tail
  bool exact = true;
};

// distribution of S_n on 0..max_m over the stored support
std::vector<Rational> walk_distribution(const OffspringLaw& law, int n, int max_m);

// throws OracleError when tail_bound exceeds rel_tol * value
WalkResult walk_dp(const OffspringLaw& law, int n, int m,
                   const Rational& rel_tol = Rational(1, 1000000));

}  // namespace pmap
