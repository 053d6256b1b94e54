#include <bit>
#include <string>

#include "pmap/oracles.hpp"

namespace pmap {

int LabelledGraph::edge_index(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

bool LabelledGraph::has(int i, int j) const {
  return i != j && ((edges >> edge_index(i, j)) & 1u);
}

int LabelledGraph::edge_count() const { return std::popcount(edges); }

int LabelledGraph::degree(int v) const {
  int d = 0;
  for (int w = 0; w < n; ++w) d += has(v, w);
  return d;
}

namespace {

// connected after deleting the vertices in `gone` (bitmask)
bool connected_avoiding(const LabelledGraph& g, uint32_t gone) {
  uint32_t alive = ((1u << g.n) - 1) & ~gone;
  if (std::popcount(alive) <= 1) return true;
  uint32_t seen = alive & (~alive + 1);
  uint32_t frontier = seen;
  while (frontier) {
    int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    for (int w = 0; w < g.n; ++w)
      if (((alive >> w) & 1u) && !((seen >> w) & 1u) && g.has(v, w)) {
        seen |= 1u << w;
        frontier |= 1u << w;
      }
  }
  return seen == alive;
}

}  // namespace

bool LabelledGraph::connected() const { return n == 0 || connected_avoiding(*this, 0); }

bool LabelledGraph::biconnected() const {
  if (n < 2 || !connected()) return false;
  if (n == 2) return true;
  for (int v = 0; v < n; ++v)
    if (!connected_avoiding(*this, 1u << v)) return false;
  return true;
}

bool LabelledGraph::triconnected() const {
  if (n < 4 || !biconnected()) return false;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!connected_avoiding(*this, (1u << a) | (1u << b))) return false;
  return true;
}

namespace {

struct Router {
  const LabelledGraph& g;
  std::vector<std::pair<int, int>> hedges;  // edges of the pattern, on graph vertices
  uint32_t used = 0;                        // branch vertices and path interiors

  bool route(size_t k) {
    if (k == hedges.size()) return true;
    return extend(k, hedges[k].first, hedges[k].second);
  }

  // simple path from v to target through unused vertices, then the next edge
  bool extend(size_t k, int v, int target) {
    if (g.has(v, target) && route(k + 1)) return true;
    for (int w = 0; w < g.n; ++w) {
      if (((used >> w) & 1u) || !g.has(v, w)) continue;
      used |= 1u << w;
      bool ok = extend(k, w, target);
      used &= ~(1u << w);
      if (ok) return true;
    }
    return false;
  }
};

bool has_k5_subdivision(const LabelledGraph& g) {
  for (uint32_t s = 0; s < (1u << g.n); ++s) {
    if (std::popcount(s) != 5) continue;
    std::vector<int> b;
    bool deg_ok = true;
    for (int v = 0; v < g.n; ++v)
      if ((s >> v) & 1u) {
        b.push_back(v);
        deg_ok = deg_ok && g.degree(v) >= 4;
      }
    if (!deg_ok) continue;
    Router r{g, {}, s};
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) r.hedges.emplace_back(b[i], b[j]);
    if (r.route(0)) return true;
  }
  return false;
}

bool has_k33_subdivision(const LabelledGraph& g) {
  for (uint32_t s = 0; s < (1u << g.n); ++s) {
    if (std::popcount(s) != 6) continue;
    std::vector<int> b;
    bool deg_ok = true;
    for (int v = 0; v < g.n; ++v)
      if ((s >> v) & 1u) {
        b.push_back(v);
        deg_ok = deg_ok && g.degree(v) >= 3;
      }
    if (!deg_ok) continue;
    // sides {b0, b_i, b_j} and the rest
    for (int i = 1; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        std::vector<int> left{b[0], b[i], b[j]}, right;
        for (int k = 1; k < 6; ++k)
          if (k != i && k != j) right.push_back(b[k]);
        Router r{g, {}, s};
        for (int x : left)
          for (int y : right) r.hedges.emplace_back(x, y);
        if (r.route(0)) return true;
      }
  }
  return false;
}

}  // namespace

bool is_planar_graph(const LabelledGraph& g) {
  if (g.n >= 3 && g.edge_count() > 3 * g.n - 6) return false;
  return !has_k5_subdivision(g) && !has_k33_subdivision(g);
}

GraphCounts enumerate_labelled_planar_graphs(int n) {
  if (n < 1) throw OracleError("graph enumeration needs n >= 1");
  if (n > kGraphVertexCap)
    throw OracleError("graph enumeration cap is " + std::to_string(kGraphVertexCap) + " vertices");
  const int me = n * (n - 1) / 2;
  const long total = 1L << me;
  std::vector<long long> all(me + 1, 0), con(me + 1, 0), bi(me + 1, 0), tri(me + 1, 0), np(me + 1, 0);

#pragma omp parallel
  {
    std::vector<long long> la(me + 1, 0), lc(me + 1, 0), lb(me + 1, 0), lt(me + 1, 0), ln(me + 1, 0);
#pragma omp for schedule(dynamic, 256)
    for (long mask = 0; mask < total; ++mask) {
      LabelledGraph g{n, static_cast<uint32_t>(mask)};
      int e = g.edge_count();
      if (!is_planar_graph(g)) {
        ++ln[e];
        continue;
      }
      ++la[e];
      if (!g.connected()) continue;
      ++lc[e];
      if (!g.biconnected()) continue;
      ++lb[e];
      if (g.triconnected()) ++lt[e];
    }
#pragma omp critical
    for (int e = 0; e <= me; ++e) {
      all[e] += la[e];
      con[e] += lc[e];
      bi[e] += lb[e];
      tri[e] += lt[e];
      np[e] += ln[e];
    }
  }

  GraphCounts gc;
  gc.n = n;
  auto conv = [](const std::vector<long long>& v) {
    std::vector<Integer> out;
    for (long long x : v) out.emplace_back(static_cast<long>(x));
    return out;
  };
  gc.all = conv(all);
  gc.connected = conv(con);
  gc.biconnected = conv(bi);
  gc.triconnected = conv(tri);
  gc.nonplanar = conv(np);
  return gc;
}

}  // namespace pmap
