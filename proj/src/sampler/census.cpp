#include "pmap/census.hpp"

#include <cmath>

#include "pmap/oracles.hpp"
#include "pmap/sampler.hpp"

namespace pmap {

namespace {

Census normalize(const std::map<std::vector<int>, long>& counts, long total) {
  Census c;
  for (const auto& [k, v] : counts) c[k] = static_cast<double>(v) / static_cast<double>(total);
  return c;
}

}  // namespace

Census neighborhood_census(const PlanarMap& m, int r) {
  std::map<std::vector<int>, long> counts;
  if (m.darts() == 0) {
    counts[neighbourhood_code(m, r)] = 1;
    return normalize(counts, 1);
  }
  for (int d = 0; d < m.darts(); ++d) counts[neighbourhood_code_at(m, d, r)]++;
  return normalize(counts, m.darts());
}

Census root_census(const std::vector<PlanarMap>& maps, int r) {
  std::map<std::vector<int>, long> counts;
  for (const auto& m : maps) counts[neighbourhood_code(m, r)]++;
  return normalize(counts, static_cast<long>(maps.size()));
}

Census exact_root_census(int edges, int r) {
  std::vector<PlanarMap> maps;
  for (auto& e : enumerate_rooted_planar_maps(edges).maps) maps.push_back(e.map);
  return root_census(maps, r);
}

Census sampled_root_census(const Rational& t, int edges, int r, int count, uint64_t seed) {
  MapSampler ms(t, edges, std::min(edges, kMapEdgeCap));
  std::vector<std::vector<int>> codes(count);
#pragma omp parallel for schedule(dynamic, 256)
  for (int i = 0; i < count; ++i) codes[i] = neighbourhood_code(ms.sample(seed, i), r);
  std::map<std::vector<int>, long> counts;
  for (auto& c : codes) counts[c]++;
  return normalize(counts, count);
}

double tv_distance(const Census& a, const Census& b) {
  double s = 0;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    s += std::fabs(v - (it == b.end() ? 0.0 : it->second));
  }
  for (const auto& [k, v] : b)
    if (!a.count(k)) s += v;
  return s / 2;
}

}  // namespace pmap
