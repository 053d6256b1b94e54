#include <string>

#include "pmap/online.hpp"
#include "pmap/oracles.hpp"

namespace pmap {

std::vector<Rational> walk_distribution(const OffspringLaw& law, int n, int max_m) {
  if (n < 0 || max_m < 0) throw OracleError("walk_dp needs n >= 0 and m >= 0");
  if (law.p.empty()) throw OracleError("empty offspring law");
  size_t len = static_cast<size_t>(max_m) + 1;
  std::vector<Rational> p(law.p.begin(), law.p.begin() + std::min(law.p.size(), len));
  if (n == 0) {
    std::vector<Rational> out(len, Rational(0));
    out[0] = 1;
    return out;
  }
  if (!is_zero(p[0])) return poly::power(p, n, len);
  // p_0 = 0: shift out the common factor z^v
  size_t v = 0;
  while (v < p.size() && is_zero(p[v])) ++v;
  std::vector<Rational> out(len, Rational(0));
  if (v == p.size()) return out;
  size_t shift = v * static_cast<size_t>(n);
  if (shift >= len) return out;
  std::vector<Rational> q(law.p.begin() + v, law.p.end());
  auto qn = poly::power(q, n, len - shift);
  for (size_t k = 0; k + shift < len; ++k) out[k + shift] = qn[k];
  return out;
}

WalkResult walk_dp(const OffspringLaw& law, int n, int m, const Rational& rel_tol) {
  WalkResult r;
  r.value = walk_distribution(law, n, m)[m];
  // an unstored value k >= support alone forces S_n >= k
  if (is_zero(law.tail) || m < static_cast<int>(law.support())) return r;
  r.exact = false;
  r.tail_bound = 1 - pow(Rational(1 - law.tail), n);
  if (r.tail_bound > rel_tol * r.value) {
    int need = m + 1;
    throw OracleError("tail mass bound " + std::to_string(to_double(r.tail_bound)) +
                      " exceeds tolerance; store the law up to k = " + std::to_string(need - 1));
  }
  return r;
}

}  // namespace pmap
