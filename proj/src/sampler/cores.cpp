#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "pmap/constants.hpp"
#include "pmap/cores.hpp"
#include "pmap/kernels.hpp"
#include "pmap/map_online.hpp"

namespace pmap {

long CoreDecomposition::total() const {
  return core + std::accumulate(fragments.begin(), fragments.end(), 0L);
}

namespace {

CoreDecomposition from_components(std::string level, const std::vector<long>& comps) {
  CoreDecomposition cd;
  cd.level = std::move(level);
  if (comps.empty()) return cd;
  auto it = std::max_element(comps.begin(), comps.end());
  cd.core = *it;
  cd.core_index = static_cast<int>(it - comps.begin());
  cd.unique = std::count(comps.begin(), comps.end(), cd.core) == 1;
  for (size_t i = 0; i < comps.size(); ++i)
    if (static_cast<int>(i) != cd.core_index) cd.fragments.push_back(comps[i]);
  return cd;
}

}  // namespace

CoreDecomposition extract_cores(const PlanarMap& m) {
  if (m.darts() == 0) return from_components("V", {});
  auto vof = m.vertex_of();
  int nv = m.vertices();
  // incident edges per vertex in rotation order, starting at the root dart
  std::vector<std::vector<int>> inc(nv);
  std::vector<char> seen(m.darts(), 0);
  std::vector<int> starts{m.root};
  for (int d = 0; d < m.darts(); ++d) starts.push_back(d);
  for (int s : starts) {
    if (seen[s]) continue;
    int d = s;
    do {
      seen[d] = 1;
      inc[vof[d]].push_back(d);
      d = m.sigma[d];
    } while (d != s);
  }
  std::vector<long> comps;
  std::vector<int> disc(nv, -1), low(nv, 0), estack;
  int timer = 0;
  auto edge_id = [&](int d) { return std::min(d, m.alpha[d]); };
  std::function<void(int, int)> dfs = [&](int u, int parent_edge) {
    disc[u] = low[u] = timer++;
    for (int d : inc[u]) {
      int e = edge_id(d), v = vof[m.alpha[d]];
      if (v == u) {
        if (d == e) comps.push_back(1);  // loop, counted once
        continue;
      }
      if (e == parent_edge) continue;
      if (disc[v] < 0) {
        estack.push_back(e);
        dfs(v, e);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          long cnt = 0;
          while (true) {
            int f = estack.back();
            estack.pop_back();
            ++cnt;
            if (f == e) break;
          }
          comps.push_back(cnt);
        }
      } else if (disc[v] < disc[u]) {
        estack.push_back(e);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  dfs(vof[m.root], -1);
  return from_components("V", comps);
}

CoreDecomposition extract_cores(const PlaneTree& t) {
  std::vector<long> comps;
  for (int d : t.out)
    if (d > 0) comps.push_back(d / 2);
  return from_components("V", comps);
}

std::vector<long double> obar_scaled(long double t, long double s, int n) {
  using poly::Poly;
  size_t N = static_cast<size_t>(n);
  Poly<long double> w(N, 0.0L);
  long double p = s;
  for (size_t k = 1; k < N; ++k) {
    w[k] = p;
    p *= t * s;
  }
  auto st = online::uv_given_w(w, t, N);
  Poly<long double> ratio(N), one_tw(N, 0.0L), one_w(N, 0.0L);
  for (size_t k = 0; k < N; ++k) ratio[k] = poly::conv_at(st.p, st.q, k);
  one_tw[0] = one_w[0] = 1;
  for (size_t k = 1; k < N; ++k) {
    one_tw[k] = t * w[k];
    one_w[k] = w[k];
  }
  auto i1 = poly::inverse(one_tw, N), i2 = poly::inverse(one_w, N);
  Poly<long double> inner(N);
  for (size_t k = 0; k < N; ++k) inner[k] = i1[k] + i2[k] - ratio[k] - (k == 0 ? 1.0L : 0.0L);
  return poly::mul(w, inner, N);
}

CoreChain::CoreChain(const Rational& t, int order) : t_(to_long_double(t)), order_(order) {
  if (order < 2) throw SamplerError("core chain order must be at least 2");
  auto mc = map_constants(to_big(t));
  long double rk = mc.value("rho_Kbar"), rr = mc.value("rho_R");
  size_t N = static_cast<size_t>(order) + 1;
  d_ = online::d_system<long double>(t_, rk, N).d;
  kbar_ = online::kbar_from_d(d_, t_);
  rbar_ = online::rbar_closed<long double>(t_, rr, N);

  // w = rr y/(1 - t rr y) is the scaled path y SEQ(t y)
  std::vector<long double> w(N + 1, 0.0L);
  long double p = rr;
  for (size_t k = 1; k <= N; ++k) {
    w[k] = p;
    p *= t_ * rr;
  }
  jbar_.assign(N, 0.0L);
  jbar_[0] = 1;
  for (size_t k = 1; k < N; ++k) jbar_[k] = w[k];
  obar_ = obar_scaled(t_, rr, order + 2);
  std::vector<long double> link(N + 1, 0.0L);  // 1 + w
  link[0] = 1;
  for (size_t k = 1; k <= N; ++k) link[k] = w[k];
  obar_link_ = poly::mul(obar_, link, N + 1);
  link_ = link;
  rr_ = rr;
  // Istar = y SEQ>=1(ty) SEQ(ty) + Obar (1 + path)/y
  istar_path_.assign(N, 0.0L);
  istar_.assign(N, 0.0L);
  for (size_t k = 2; k < N; ++k) istar_path_[k] = (k - 1) * std::pow(t_, (long double)(k - 1)) * std::pow(rr, (long double)k);
  for (size_t k = 0; k < N; ++k) istar_[k] = istar_path_[k] + obar_link_[k + 1] / rr;
  std::vector<long double> one_minus(N, 0.0L);
  one_minus[0] = 1;
  for (size_t k = 1; k < N; ++k) one_minus[k] = -istar_[k];
  seq_istar_ = poly::inverse(one_minus, N);

  walk_.resize(N);
  walk_[0].assign(N, 0.0L);
  walk_[0][0] = 1;
  for (size_t i = 1; i < N; ++i) walk_[i] = kernels::convolve(walk_[i - 1], rbar_, N);
}

namespace {

template <class F>
int draw(int lo, int hi, F weight, Rng& rng) {
  long double tot = 0;
  for (int i = lo; i <= hi; ++i) tot += weight(i);
  if (!(tot > 0)) throw SamplerError("no admissible choice in a conditional draw");
  long double u = static_cast<long double>(uniform01(rng)) * tot, acc = 0;
  int last = lo;
  for (int i = lo; i <= hi; ++i) {
    long double wi = weight(i);
    if (wi > 0) last = i;
    acc += wi;
    if (u < acc && wi > 0) return i;
  }
  return last;
}

}  // namespace

std::vector<int> CoreChain::split_d(int m, Rng& rng) const {
  if (m < 1 || m > order_) throw SamplerError("D size out of table range");
  std::vector<int> pieces;
  while (m > 0) {
    int s = draw(1, m, [&](int s) { return kbar_[s] * (s == m ? 1.0L : t_ * d_[m - s]); }, rng);
    pieces.push_back(s);
    m -= s;
  }
  return pieces;
}

std::vector<int> CoreChain::kbar_tree(int k, Rng& rng) const {
  if (k < 1 || k > order_) throw SamplerError("Kbar size out of table range");
  std::vector<int> deg;
  int rest = k - 1;
  for (int i = k; i >= 1; --i) {
    // the remaining i vertices carry out-degree sum `rest`
    int j = draw(0, rest, [&](int j) { return rbar_[j] * walk_[i - 1][rest - j]; }, rng);
    deg.push_back(j);
    rest -= j;
  }
  return rotate_to_tree(deg).out;
}

long CoreChain::obar_core(int r, Rng& rng, bool& tie) const {
  if (r < 1) return 0;
  int a = draw(0, r, [&](int a) { return jbar_[a] * seq_istar_[r - a]; }, rng);
  int rest = r - a;
  std::vector<int> pieces;
  while (rest > 0) {
    int s = draw(1, rest, [&](int s) { return istar_[s] * seq_istar_[rest - s]; }, rng);
    pieces.push_back(s);
    rest -= s;
  }
  if (pieces.empty()) return 0;
  auto it = std::max_element(pieces.begin(), pieces.end());
  int s = *it;
  if (std::count(pieces.begin(), pieces.end(), s) > 1) tie = true;
  // Obar-type piece with probability (Obar (1 + path))_{s+1} / (rr Istar_s)
  long double o_weight = obar_link_[s + 1] / rr_;
  if (static_cast<long double>(uniform01(rng)) * istar_[s] >= o_weight) return 0;
  int b = draw(1, s + 1, [&](int b) { return obar_[b] * link_[s + 1 - b]; }, rng);
  return b - 1;
}

CoreSizes CoreChain::below_v(long v_edges, Rng& rng) const {
  CoreSizes cs;
  cs.V = v_edges;
  if (v_edges < 2) return cs;
  long m = v_edges - 1;
  if (m > order_) {
    cs.Kbar = cs.Rbar = cs.Obar = -1;
    return cs;
  }
  auto pieces = split_d(static_cast<int>(m), rng);
  cs.d_pieces = static_cast<int>(pieces.size());
  auto it = std::max_element(pieces.begin(), pieces.end());
  cs.Kbar = *it;
  cs.tie = std::count(pieces.begin(), pieces.end(), *it) > 1;
  auto deg = kbar_tree(static_cast<int>(cs.Kbar), rng);
  int r = *std::max_element(deg.begin(), deg.end());
  cs.tie = cs.tie || std::count(deg.begin(), deg.end(), r) > 1;
  cs.Rbar = r;
  bool tie = false;
  cs.Obar = obar_core(r, rng, tie);
  cs.tie = cs.tie || tie;
  return cs;
}

MapCoreSample sample_map_cores(const Rational& t, int edges, int count, uint64_t seed,
                               const CoreChain* chain) {
  if (edges < 1 || count < 1) throw SamplerError("need edges >= 1 and count >= 1");
  auto h = vmap_law_halved(t, edges + 1);
  std::vector<long double> w(2 * h.size() - 1, 0.0L);
  for (size_t j = 0; j < h.size(); ++j) w[2 * j] = h[j];
  TreeSampler ts(std::move(w), 2 * edges + 1);
  MapCoreSample out;
  out.sizes.resize(count);
  out.vcore.resize(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (int i = 0; i < count; ++i) {
    Rng rng = stream_rng(seed, static_cast<uint64_t>(i));
    PlaneTree tree = ts.sample(rng);
    long v = tree.max_degree() / 2;
    CoreSizes cs;
    if (chain) cs = chain->below_v(v, rng);
    cs.map = edges;
    cs.V = v;
    cs.tie = cs.tie || std::count(tree.out.begin(), tree.out.end(), tree.max_degree()) > 1;
    out.sizes[i] = cs;
    out.vcore[i] = static_cast<int>(v);
  }
  return out;
}

}  // namespace pmap
