#include "pmap/planar_map.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pmap {

PlanarMap PlanarMap::vertex() { return PlanarMap{}; }

PlanarMap PlanarMap::from_sigma(std::vector<int> sigma, int root) {
  PlanarMap m;
  m.sigma = std::move(sigma);
  m.alpha.resize(m.sigma.size());
  for (size_t d = 0; d < m.sigma.size(); ++d) m.alpha[d] = static_cast<int>(d ^ 1u);
  m.root = root;
  return m;
}

std::vector<int> PlanarMap::sigma_inverse() const {
  std::vector<int> inv(sigma.size());
  for (size_t d = 0; d < sigma.size(); ++d) inv[sigma[d]] = static_cast<int>(d);
  return inv;
}

namespace {

int count_cycles(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int c = 0;
  for (size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++c;
    for (size_t d = s; !seen[d]; d = perm[d]) seen[d] = 1;
  }
  return c;
}

}  // namespace

int PlanarMap::vertices() const { return darts() == 0 ? 1 : count_cycles(sigma); }

int PlanarMap::faces() const {
  if (darts() == 0) return 1;
  std::vector<int> phi(sigma.size());
  for (size_t d = 0; d < sigma.size(); ++d) phi[d] = sigma[alpha[d]];
  return count_cycles(phi);
}

bool PlanarMap::connected() const {
  if (darts() == 0) return true;
  std::vector<char> seen(sigma.size(), 0);
  std::vector<int> stack{root};
  seen[root] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    for (int e : {sigma[d], alpha[d]})
      if (!seen[e]) {
        seen[e] = 1;
        ++cnt;
        stack.push_back(e);
      }
  }
  return cnt == darts();
}

bool PlanarMap::is_planar() const {
  return connected() && vertices() - edges() + faces() == 2;
}

std::vector<int> PlanarMap::vertex_of() const {
  std::vector<int> v(sigma.size(), -1);
  int id = 0;
  for (size_t s = 0; s < sigma.size(); ++s) {
    if (v[s] >= 0) continue;
    for (size_t d = s; v[d] < 0; d = sigma[d]) v[d] = id;
    ++id;
  }
  return v;
}

bool PlanarMap::has_loop() const {
  auto v = vertex_of();
  for (int d = 0; d < darts(); ++d)
    if (v[d] == v[alpha[d]]) return true;
  return false;
}

bool PlanarMap::is_simple() const {
  if (has_loop()) return false;
  auto v = vertex_of();
  std::vector<std::pair<int, int>> es;
  for (int d = 0; d < darts(); ++d)
    if (d < alpha[d]) es.emplace_back(std::min(v[d], v[alpha[d]]), std::max(v[d], v[alpha[d]]));
  std::sort(es.begin(), es.end());
  return std::adjacent_find(es.begin(), es.end()) == es.end();
}

namespace {

// connectivity of the vertex graph after deleting the vertices in `gone`
bool connected_without(const PlanarMap& m, const std::vector<int>& vof, int nv,
                       const std::vector<char>& gone) {
  std::vector<std::vector<int>> adj(nv);
  for (int d = 0; d < m.darts(); ++d) {
    int a = vof[d], b = vof[m.alpha[d]];
    if (!gone[a] && !gone[b]) adj[a].push_back(b);
  }
  int start = -1, alive = 0;
  for (int v = 0; v < nv; ++v)
    if (!gone[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive <= 1) return true;
  std::vector<char> seen(nv, 0);
  std::vector<int> st{start};
  seen[start] = 1;
  int cnt = 1;
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        st.push_back(w);
      }
  }
  return cnt == alive;
}

}  // namespace

bool PlanarMap::is_nonseparable() const {
  if (edges() <= 1) return true;
  if (has_loop()) return false;
  auto vof = vertex_of();
  int nv = vertices();
  std::vector<char> gone(nv, 0);
  for (int v = 0; v < nv; ++v) {
    gone[v] = 1;
    bool ok = connected_without(*this, vof, nv, gone);
    gone[v] = 0;
    if (!ok) return false;
  }
  return true;
}

bool PlanarMap::is_3connected() const {
  int nv = vertices();
  if (nv < 4 || !is_simple()) return false;
  auto vof = vertex_of();
  std::vector<char> gone(nv, 0);
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b) {
      gone[a] = gone[b] = 1;
      bool ok = connected_without(*this, vof, nv, gone);
      gone[a] = gone[b] = 0;
      if (!ok) return false;
    }
  return true;
}

std::vector<int> PlanarMap::canonical_code() const {
  int n = darts();
  std::vector<int> code{n};
  if (n == 0) return code;
  std::vector<int> lab(n, -1), order;
  order.reserve(n);
  lab[root] = 0;
  order.push_back(root);
  for (size_t i = 0; i < order.size(); ++i) {
    int d = order[i];
    for (int e : {sigma[d], alpha[d]})
      if (lab[e] < 0) {
        lab[e] = static_cast<int>(order.size());
        order.push_back(e);
      }
  }
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("map is not connected");
  code.reserve(1 + 2 * n);
  for (int d : order) {
    code.push_back(lab[sigma[d]]);
    code.push_back(lab[alpha[d]]);
  }
  return code;
}

PlanarMap PlanarMap::canonical() const {
  auto code = canonical_code();
  PlanarMap m;
  int n = code[0];
  m.sigma.resize(n);
  m.alpha.resize(n);
  for (int i = 0; i < n; ++i) {
    m.sigma[i] = code[1 + 2 * i];
    m.alpha[i] = code[2 + 2 * i];
  }
  m.root = 0;
  return m;
}

PlanarMap PlanarMap::rerooted(int d) const {
  PlanarMap m = *this;
  m.root = d;
  return m;
}

std::string PlanarMap::to_json() const {
  nlohmann::json j;
  j["darts"] = darts();
  j["alpha"] = alpha;
  j["sigma"] = sigma;
  j["root"] = root;
  return j.dump();
}

PlanarMap PlanarMap::from_json(const std::string& s) {
  auto j = nlohmann::json::parse(s);
  PlanarMap m;
  m.alpha = j.at("alpha").get<std::vector<int>>();
  m.sigma = j.at("sigma").get<std::vector<int>>();
  m.root = j.at("root").get<int>();
  if (j.at("darts").get<int>() != m.darts()) throw std::invalid_argument("dart count mismatch");
  m.validate();
  return m;
}

void PlanarMap::validate() const {
  int n = darts();
  if (static_cast<int>(alpha.size()) != n) throw std::invalid_argument("alpha size");
  if (n == 0) return;
  if (n % 2) throw std::invalid_argument("odd dart count");
  if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
  std::vector<char> hit(n, 0);
  for (int d = 0; d < n; ++d) {
    if (sigma[d] < 0 || sigma[d] >= n || hit[sigma[d]]) throw std::invalid_argument("sigma");
    hit[sigma[d]] = 1;
    if (alpha[d] < 0 || alpha[d] >= n || alpha[d] == d || alpha[alpha[d]] != d)
      throw std::invalid_argument("alpha must be a fixed-point-free involution");
  }
  if (!connected()) throw std::invalid_argument("map is not connected");
}

std::vector<int> neighbourhood_code_at(const PlanarMap& m, int dart, int r) {
  if (r <= 0 || m.darts() == 0) return PlanarMap::vertex().canonical_code();
  auto vof = m.vertex_of();
  int nv = m.vertices();
  std::vector<std::vector<int>> adj(nv);
  for (int d = 0; d < m.darts(); ++d) adj[vof[d]].push_back(vof[m.alpha[d]]);
  std::vector<int> dist(nv, -1);
  std::vector<int> q{vof[dart]};
  dist[vof[dart]] = 0;
  for (size_t i = 0; i < q.size(); ++i)
    for (int w : adj[q[i]])
      if (dist[w] < 0) {
        dist[w] = dist[q[i]] + 1;
        q.push_back(w);
      }
  auto in_ball = [&](int d) { return dist[vof[d]] >= 0 && dist[vof[d]] <= r; };
  std::vector<int> keep;
  std::vector<int> idx(m.darts(), -1);
  for (int d = 0; d < m.darts(); ++d)
    if (in_ball(d) && in_ball(m.alpha[d])) {
      idx[d] = static_cast<int>(keep.size());
      keep.push_back(d);
    }
  PlanarMap sub;
  sub.sigma.resize(keep.size());
  sub.alpha.resize(keep.size());
  for (size_t i = 0; i < keep.size(); ++i) {
    int d = keep[i];
    int e = m.sigma[d];
    while (idx[e] < 0) e = m.sigma[e];
    sub.sigma[i] = idx[e];
    sub.alpha[i] = idx[m.alpha[d]];
  }
  sub.root = idx[dart];
  return sub.canonical_code();
}

std::vector<int> neighbourhood_code(const PlanarMap& m, int r) {
  return neighbourhood_code_at(m, m.root, r);
}

}  // namespace pmap
