#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmap/laws.hpp"
#include "pmap/planar_map.hpp"
#include "pmap/rng.hpp"

namespace pmap {

struct SamplerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Plane tree as its preorder out-degree sequence.
struct PlaneTree {
  std::vector<int> out;

  int size() const { return static_cast<int>(out.size()); }
  bool valid() const;  // Lukasiewicz path stays >= 0 until the last step
  std::vector<std::vector<int>> children() const;
  int max_degree() const;
  int first_max() const;  // preorder index of the first vertex of maximal out-degree
};

// Exact sampler of (X_1..X_count) i.i.d. with weights p conditioned on
// X_1 + ... + X_count = total, by halving: the sum of the first half is drawn
// from P(S_a = i) P(S_b = total - i), then both halves recursively.
class ConditionedSum {
 public:
  ConditionedSum(std::vector<long double> p, int count, int total);

  std::vector<int> sample(Rng& rng) const;
  long double probability() const;  // P(S_count = total) under p (unnormalized p gives the weight)
  int count() const { return count_; }
  int total() const { return total_; }

 private:
  void sample_into(int k, int m, Rng& rng, std::vector<int>& out) const;
  const std::vector<long double>& dist(int k) const { return dist_.at(k); }

  std::vector<long double> p_;
  int count_ = 0, total_ = 0;
  std::map<int, std::vector<long double>> dist_;
};

// gcd of {k : w_k > 0}
int support_span(const std::vector<long double>& w);

// Simply generated tree with n vertices and weights w (any positive scaling of
// the offspring law). The lattice of the support is respected: n - 1 must be a
// multiple of the span.
class TreeSampler {
 public:
  TreeSampler(std::vector<long double> w, int n);
  PlaneTree sample(Rng& rng) const;
  std::vector<int> sample_degrees(Rng& rng) const;  // exchangeable, unrotated
  int n() const { return n_; }
  int span() const { return span_; }

 private:
  int n_ = 0, span_ = 1;
  std::unique_ptr<ConditionedSum> cs_;
};

PlaneTree sample_sgt(const WeightSequence& ws, const Rational& tau, int n, uint64_t seed);

// cycle lemma: the unique rotation of a sequence with sum n - 1 that is a tree
PlaneTree rotate_to_tree(const std::vector<int>& degrees);

// V-class decorations: rooted non-separable maps with j edges weighted t^(v-1)
struct DecorationCatalog {
  Rational t = 1;
  int cap = 0;
  std::vector<std::vector<PlanarMap>> maps;  // by edge count j
  std::vector<std::vector<double>> cdf;
  std::vector<std::vector<Rational>> prob;
};

DecorationCatalog make_v_catalog(const Rational& t, int cap = 5);

struct EnrichedTree {
  PlaneTree tree;
  std::vector<PlanarMap> deco;  // deco[i] has out[i] darts
};

// one stream per vertex: stream_rng(seed, vertex index)
EnrichedTree decorate(const PlaneTree& tree, const DecorationCatalog& cat, uint64_t seed);

// children of tree vertex i are spliced into the corners of deco[i] in dart order
PlanarMap assemble_map(const EnrichedTree& et);

// all (tree, decoration) pairs for maps with n edges (small n)
std::vector<PlanarMap> assemble_all(int edges);

// uniform random rooted planar map with n edges at t = 1, or t^v-weighted
class MapSampler {
 public:
  MapSampler(const Rational& t, int edges, int cap = 5);
  PlanarMap sample(uint64_t seed, uint64_t index) const;

 private:
  int edges_;
  DecorationCatalog cat_;
  std::unique_ptr<TreeSampler> trees_;
};

// numeric omega^M law at t (radius tilt), halved: entry j is the weight of
// out-degree 2j; exact to long double rounding for j < order
std::vector<long double> vmap_law_halved(const Rational& t, int order);

}  // namespace pmap
