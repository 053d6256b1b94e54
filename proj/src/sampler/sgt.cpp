#include <algorithm>
#include <numeric>
#include <set>

#include "pmap/constants.hpp"
#include "pmap/kernels.hpp"
#include "pmap/map_online.hpp"
#include "pmap/sampler.hpp"

namespace pmap {

bool PlaneTree::valid() const {
  long s = 1;
  for (size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 0) return false;
    s += out[i] - 1;
    if (s <= 0 && i + 1 < out.size()) return false;
  }
  return !out.empty() && s == 0;
}

std::vector<std::vector<int>> PlaneTree::children() const {
  std::vector<std::vector<int>> ch(out.size());
  std::vector<int> stack;  // vertices with children still to attach
  for (int i = 0; i < size(); ++i) {
    if (!stack.empty()) {
      int p = stack.back();
      ch[p].push_back(i);
      if (static_cast<int>(ch[p].size()) == out[p]) stack.pop_back();
    }
    if (out[i] > 0) stack.push_back(i);
  }
  return ch;
}

int PlaneTree::max_degree() const { return out.empty() ? 0 : *std::max_element(out.begin(), out.end()); }

int PlaneTree::first_max() const {
  return static_cast<int>(std::max_element(out.begin(), out.end()) - out.begin());
}

ConditionedSum::ConditionedSum(std::vector<long double> p, int count, int total)
    : p_(std::move(p)), count_(count), total_(total) {
  if (count < 1 || total < 0) throw SamplerError("conditioned sum needs count >= 1, total >= 0");
  size_t len = static_cast<size_t>(total) + 1;
  p_.resize(std::min(p_.size(), len));
  std::set<int> sizes;
  std::vector<int> todo{count};
  while (!todo.empty()) {
    int k = todo.back();
    todo.pop_back();
    if (!sizes.insert(k).second || k == 1) continue;
    todo.push_back(k / 2);
    todo.push_back(k - k / 2);
  }
  std::vector<long double> base(p_);
  base.resize(len, 0.0L);
  for (int k : sizes) {  // increasing, so both halves exist
    if (k == 1) {
      dist_[1] = base;
      continue;
    }
    dist_[k] = kernels::convolve(dist_.at(k / 2), dist_.at(k - k / 2), len);
  }
  if (!(probability() > 0)) throw SamplerError("conditioning event has probability zero");
}

long double ConditionedSum::probability() const { return dist(count_)[total_]; }

void ConditionedSum::sample_into(int k, int m, Rng& rng, std::vector<int>& out) const {
  if (m == 0) {
    out.insert(out.end(), k, 0);
    return;
  }
  if (k == 1) {
    out.push_back(m);
    return;
  }
  int a = k / 2, b = k - a;
  const auto& da = dist(a);
  const auto& db = dist(b);
  long double tot = 0;
  for (int i = 0; i <= m; ++i) tot += da[i] * db[m - i];
  long double u = static_cast<long double>(uniform01(rng)) * tot, acc = 0;
  int pick = m;
  for (int i = 0; i <= m; ++i) {
    acc += da[i] * db[m - i];
    if (u < acc) {
      pick = i;
      break;
    }
  }
  // the rounding fallback must land on a positive-weight value
  while (da[pick] * db[m - pick] == 0 && pick > 0) --pick;
  sample_into(a, pick, rng, out);
  sample_into(b, m - pick, rng, out);
}

std::vector<int> ConditionedSum::sample(Rng& rng) const {
  std::vector<int> out;
  out.reserve(count_);
  sample_into(count_, total_, rng, out);
  return out;
}

int support_span(const std::vector<long double>& w) {
  int g = 0;
  for (size_t k = 1; k < w.size(); ++k)
    if (w[k] > 0) g = std::gcd(g, static_cast<int>(k));
  return g == 0 ? 1 : g;
}

PlaneTree rotate_to_tree(const std::vector<int>& d) {
  int n = static_cast<int>(d.size());
  long s = 0, best = 1;
  int arg = 0;
  for (int k = 1; k <= n; ++k) {
    s += d[k - 1] - 1;
    if (s < best) {
      best = s;
      arg = k;
    }
  }
  if (s != -1) throw SamplerError("degree sum is not n - 1");
  PlaneTree t;
  t.out.resize(n);
  for (int i = 0; i < n; ++i) t.out[i] = d[(arg + i) % n];
  return t;
}

TreeSampler::TreeSampler(std::vector<long double> w, int n) : n_(n) {
  if (n < 1) throw SamplerError("tree size must be positive");
  if (w.empty() || !(w[0] > 0)) throw SamplerError("weight of out-degree 0 must be positive");
  span_ = support_span(w);
  if ((n - 1) % span_ != 0)
    throw SamplerError("n - 1 = " + std::to_string(n - 1) + " is off the support lattice of span " +
                       std::to_string(span_));
  std::vector<long double> h;
  for (size_t k = 0; k < w.size(); k += span_) h.push_back(w[k]);
  cs_ = std::make_unique<ConditionedSum>(std::move(h), n, (n - 1) / span_);
}

std::vector<int> TreeSampler::sample_degrees(Rng& rng) const {
  auto d = cs_->sample(rng);
  for (int& x : d) x *= span_;
  return d;
}

PlaneTree TreeSampler::sample(Rng& rng) const { return rotate_to_tree(sample_degrees(rng)); }

PlaneTree sample_sgt(const WeightSequence& ws, const Rational& tau, int n, uint64_t seed) {
  std::vector<long double> w;
  Rational p = 1;
  for (size_t k = 0; k < ws.size() && static_cast<int>(k) < n; ++k) {
    w.push_back(to_long_double(ws.w[k] * p));
    p *= tau;
  }
  TreeSampler ts(std::move(w), n);
  Rng rng = stream_rng(seed, 0);
  return ts.sample(rng);
}

std::vector<long double> vmap_law_halved(const Rational& t, int order) {
  auto mc = map_constants(to_big(t));
  long double rho = mc.value("rho_Kbar"), tt = to_long_double(t);
  auto d = online::d_system<long double>(tt, rho, static_cast<size_t>(order)).d;
  return online::v_in_w(d, tt, rho);
}

}  // namespace pmap
