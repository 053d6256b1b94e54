#include <cmath>

#include "pmap/map_online.hpp"
#include "pmap/oracles.hpp"
#include "pmap/stats.hpp"

namespace pmap {

Rational tree_count(const WeightSequence& ws, int n) {
  if (n < 1) throw StatsError("tree_count needs n >= 1");
  // pw[k][j] = [z^j] Z^k, filled one order at a time as Z_m becomes known
  std::vector<std::vector<Rational>> pw(n, std::vector<Rational>(n, Rational(0)));
  std::vector<Rational> z(n + 1, Rational(0));
  pw[0][0] = 1;
  for (int m = 1; m <= n; ++m) {
    int j = m - 1;
    for (int k = 1; k <= j; ++k) {
      Rational s = 0;
      for (int i = 1; i <= j - k + 1; ++i) s += z[i] * pw[k - 1][j - i];
      pw[k][j] = s;
    }
    Rational zm = 0;
    for (int k = 0; k <= j; ++k) zm += ws.at(k) * pw[k][j];
    z[m] = zm;
  }
  return z[n];
}

IdentityReport check_tree_identity(const WeightSequence& ws, const Rational& tau, int n) {
  if (sgn(tau) <= 0) throw StatsError("tau must be positive");
  IdentityReport r;
  r.law = ws.source;
  r.n = n;
  r.tau = tau;
  r.lhs = tree_count(ws, n);
  auto law = offspring_law(ws, tau);  // phi truncated to the stored weights
  Rational phi = 0, p = 1;
  for (size_t k = 0; k < ws.size(); ++k) {
    phi += ws.w[k] * p;
    p *= tau;
  }
  Rational walk = walk_dp(law, n, n - 1).value;
  r.rhs = pow(Rational(tau / phi), -n) * tau / n * walk;
  r.equal = r.lhs == r.rhs;
  return r;
}

OffspringLaw kbar_law_t1(int n) {
  if (n < 1) throw StatsError("law order must be positive");
  auto rb = online::rbar_closed<Rational>(Rational(1), Rational(1), static_cast<size_t>(n));
  OffspringLaw law;
  law.tau = frac(1, 5);
  law.source = "Kbar t=1";
  Rational scale = frac(20, 27), pw = 1, sum = 0, mean = 0;
  for (int k = 0; k < n; ++k) {
    Rational pk = rb[k] * pw * scale;
    law.p.push_back(pk);
    sum += pk;
    mean += k * pk;
    pw /= 5;
  }
  law.tail = 1 - sum;
  law.mean = mean;
  return law;
}

BigJumpReport bigjump_ratio(const OffspringLaw& law, const Rational& mean, int n) {
  BigJumpReport r;
  size_t positive = 0;
  for (auto& x : law.p) positive += sgn(x) > 0;
  if (positive <= 1 || mean >= 1) {
    r.applicable = false;
    r.note = "no big-jump regime: law is degenerate or not subcritical";
    return r;
  }
  Rational x = n * (1 - mean);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  r.jump = static_cast<int>(fl.get_si());
  r.point = law.at(r.jump);
  r.numerator = walk_dp(law, n, n - 1).value;
  if (is_zero(r.point)) {
    r.applicable = false;
    r.note = "jump value off the support lattice";
    return r;
  }
  r.ratio = to_double(Rational(r.numerator / (n * r.point)));
  return r;
}

}  // namespace pmap
