#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmap/sampler.hpp"

namespace pmap {

struct CoreDecomposition {
  std::string level;
  long core = 0;                // size of the largest component
  std::vector<long> fragments;  // all other components, in traversal order
  int core_index = -1;          // position among all components
  bool unique = true;           // false when the maximum is shared (first one taken)

  long total() const;
};

// blocks of a map by edge count; loops are blocks of their own
CoreDecomposition extract_cores(const PlanarMap& m);
// V-level from the tree: decorations have out-degree/2 edges
CoreDecomposition extract_cores(const PlaneTree& t);

// core sizes along the chain V -> D -> Kbar -> Rbar -> Obar, each level in the
// size unit of its own series; -1 when the level exceeds the table order
struct CoreSizes {
  long map = 0, V = 0, Kbar = 0, Rbar = 0, Obar = 0;
  int d_pieces = 0;  // number of Kbar pieces in the D-structure
  bool tie = false;
};

// Tables for the levels below V at tilt t, to size `order`.
class CoreChain {
 public:
  CoreChain(const Rational& t, int order);

  // split of a D-structure of size m into Kbar pieces (sequence order)
  std::vector<int> split_d(int m, Rng& rng) const;
  // out-degrees of a Kbar-tree with k vertices
  std::vector<int> kbar_tree(int k, Rng& rng) const;
  // largest Istar piece of an Rbar-structure of size r, then its Obar part (0 if none)
  long obar_core(int r, Rng& rng, bool& tie) const;

  CoreSizes below_v(long v_edges, Rng& rng) const;

  int order() const { return order_; }
  const std::vector<long double>& d() const { return d_; }
  const std::vector<long double>& kbar() const { return kbar_; }
  const std::vector<long double>& rbar() const { return rbar_; }
  const std::vector<long double>& istar() const { return istar_; }
  const std::vector<long double>& jbar() const { return jbar_; }
  const std::vector<long double>& obar() const { return obar_; }
  long double t() const { return t_; }

 private:
  long double t_ = 1, rr_ = 0;
  int order_ = 0;
  // D, Kbar scaled by rho_Kbar^k; Rbar, Jbar, Istar, Obar by rho_R^k
  std::vector<long double> d_, kbar_, rbar_, jbar_, istar_, istar_path_, obar_, obar_link_, seq_istar_, link_;
  std::vector<std::vector<long double>> walk_;  // walk_[i][m] = [y^m] Rbar^i
};

// Obar(s y) and Istar(s y) at x = t from the 3-connected closed form
std::vector<long double> obar_scaled(long double t, long double s, int n);

struct MapCoreSample {
  std::vector<CoreSizes> sizes;
  std::vector<int> vcore;  // V-core edges per sample
};

// tree-level samples of maps with n edges; deeper levels when chain != nullptr
MapCoreSample sample_map_cores(const Rational& t, int edges, int count, uint64_t seed,
                               const CoreChain* chain = nullptr);

}  // namespace pmap
