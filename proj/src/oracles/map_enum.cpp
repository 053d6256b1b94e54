#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "pmap/oracles.hpp"

namespace pmap {

size_t MapCatalog::count_nonseparable() const {
  return std::count_if(maps.begin(), maps.end(), [](const CatalogEntry& e) { return e.nonseparable; });
}
size_t MapCatalog::count_simple() const {
  return std::count_if(maps.begin(), maps.end(), [](const CatalogEntry& e) { return e.simple; });
}
size_t MapCatalog::count_3connected() const {
  return std::count_if(maps.begin(), maps.end(), [](const CatalogEntry& e) { return e.three_connected; });
}

MapCatalog enumerate_rooted_planar_maps(int edges) {
  if (edges < 0) throw OracleError("negative edge count");
  if (edges > kMapEdgeCap)
    throw OracleError("map enumeration cap is " + std::to_string(kMapEdgeCap) + " edges");
  MapCatalog cat;
  cat.edges = edges;
  if (edges == 0) {
    PlanarMap v = PlanarMap::vertex();
    cat.maps.push_back({v, true, true, false});
    return cat;
  }
  const int nd = 2 * edges;
  std::set<std::vector<int>> codes;

  // branch on sigma(0); each branch runs through the remaining permutations
#pragma omp parallel for schedule(dynamic)
  for (int s0 = 0; s0 < nd; ++s0) {
    std::set<std::vector<int>> local;
    std::vector<int> rest;
    for (int d = 0; d < nd; ++d)
      if (d != s0) rest.push_back(d);
    PlanarMap m = PlanarMap::from_sigma(std::vector<int>(nd), 0);
    do {
      m.sigma[0] = s0;
      std::copy(rest.begin(), rest.end(), m.sigma.begin() + 1);
      if (!m.is_planar()) continue;
      local.insert(m.canonical_code());
    } while (std::next_permutation(rest.begin(), rest.end()));
#pragma omp critical
    codes.insert(local.begin(), local.end());
  }

  for (const auto& code : codes) {
    PlanarMap m;
    m.sigma.resize(code[0]);
    m.alpha.resize(code[0]);
    for (int i = 0; i < code[0]; ++i) {
      m.sigma[i] = code[1 + 2 * i];
      m.alpha[i] = code[2 + 2 * i];
    }
    cat.maps.push_back({m, m.is_nonseparable(), m.is_simple(), m.is_3connected()});
  }
  return cat;
}

Integer tutte_count(int n) {
  if (n < 0) throw OracleError("negative edge count");
  Integer num = 2 * factorial(2 * n);
  Integer p3;
  mpz_ui_pow_ui(p3.get_mpz_t(), 3, n);
  Integer den = factorial(n) * factorial(n + 2);
  return Integer(num * p3 / den);
}

}  // namespace pmap
