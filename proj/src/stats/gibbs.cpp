#include <algorithm>
#include <cmath>

#include "pmap/constants.hpp"
#include "pmap/map_online.hpp"
#include "pmap/stats.hpp"

namespace pmap {

namespace {

double tv(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += std::fabs(a[i] - b[i]);
  return s / 2;
}

std::vector<double> tails(const std::vector<double>& p) {
  std::vector<double> tail(p.size(), 0.0);
  double acc = 0;
  for (size_t k = p.size(); k-- > 0;) {
    acc += p[k];
    tail[k] = acc;
  }
  return tail;
}

// P(rest >= k) <= C exp(-c k/(n-k)) with C = 1 and the largest such c
void fit_bound(GibbsReport& r, const std::vector<double>& p) {
  auto tail = tails(p);
  int K = static_cast<int>(p.size()) - 1;  // last bin is the lumped rest
  r.bound_C = 1;
  r.bound_c = 1e300;
  for (int k = 1; k < K; ++k)
    if (tail[k] > 0) r.bound_c = std::min(r.bound_c, -std::log(tail[k]) * (r.n - k) / k);
  r.bound_ok = r.bound_c > 0 && r.bound_c < 1e300;
}

}  // namespace

GibbsReport gibbs_fragment_check(const Rational& t, int n) {
  if (n < 2) throw StatsError("fragment check needs n >= 2");
  if (sgn(t) <= 0) throw StatsError("tilt must be positive");
  GibbsReport r;
  r.n = n;
  size_t N = static_cast<size_t>(n) + 1;
  // exact D and Kbar at x = t
  auto d = online::d_system<Rational>(t, Rational(1), N).d;
  auto kb = online::kbar_from_d(d, t);
  std::vector<Rational> one_minus(N, Rational(0));
  one_minus[0] = 1;
  for (size_t k = 1; k < N; ++k) one_minus[k] = -t * kb[k];
  auto seq = poly::inverse(one_minus, N);
  auto seq2 = poly::mul(seq, seq, N);

  int K = (n + 1) / 2;  // rest k < n/2 has a unique core n - k
  Rational lumped = 1;
  for (int k = 0; k < K; ++k) {
    Rational pk = kb[n - k] * seq2[k] / d[n];
    r.exact.push_back(pk);
    lumped -= pk;
  }
  r.exact.push_back(lumped);

  auto mc = map_constants(to_big(t));
  long double rho = mc.value("rho_Kbar"), kr = mc.value("rho_R"), tt = to_long_double(t);
  long double norm = (1 - tt * kr) * (1 - tt * kr);
  std::vector<double> ex, li;
  long double lim_rest = 1, pw = 1;
  for (int k = 0; k < K; ++k) {
    long double q = to_long_double(seq2[k]) * pw * norm;
    li.push_back(static_cast<double>(q));
    lim_rest -= q;
    pw *= rho;
    ex.push_back(to_double(r.exact[k]));
  }
  li.push_back(static_cast<double>(std::max(lim_rest, 0.0L)));
  ex.push_back(to_double(lumped));
  for (double q : li) r.limit.push_back(Rational(q));
  r.tv = tv(ex, li);
  fit_bound(r, ex);
  return r;
}

bool gibbs_bound_holds(const GibbsReport& r, double C, double c) {
  std::vector<double> p;
  for (auto& q : r.exact) p.push_back(to_double(q));
  auto tail = tails(p);
  for (size_t k = 1; k + 1 < p.size(); ++k)
    if (tail[k] > C * std::exp(-c * static_cast<double>(k) / (r.n - static_cast<double>(k))) * (1 + 1e-12))
      return false;
  return true;
}

GibbsReport gibbs_degenerate(int n) {
  GibbsReport r;
  r.n = n;
  r.exact = {Rational(1)};
  r.limit = {Rational(1)};
  r.tv = 0;
  return r;
}

}  // namespace pmap
