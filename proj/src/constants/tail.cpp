#include <cmath>
#include <stdexcept>

#include "pmap/constants.hpp"

namespace pmap {

long double hurwitz_tail(long double s, long double M) {
  if (s <= 1 || M < 1) throw std::invalid_argument("hurwitz_tail needs s > 1, M >= 1");
  // push M up so the asymptotic series is accurate, summing the head directly
  long double head = 0;
  while (M < 30) {
    head += std::pow(M, -s);
    M += 1;
  }
  long double f = std::pow(M, -s);
  long double integral = std::pow(M, 1 - s) / (s - 1);
  // Bernoulli corrections B2/2!, B4/4!, B6/6! with derivatives of m^{-s}
  long double d1 = s * std::pow(M, -s - 1);
  long double d3 = s * (s + 1) * (s + 2) * std::pow(M, -s - 3);
  long double d5 = s * (s + 1) * (s + 2) * (s + 3) * (s + 4) * std::pow(M, -s - 5);
  return head + integral + f / 2 + d1 / 12 - d3 / 720 + d5 / 30240;
}

TailFit fit_power_tail(const std::vector<long double>& a, long double alpha, int window) {
  int n = static_cast<int>(a.size());
  if (n < 4) throw std::invalid_argument("too few coefficients for a tail fit");
  window = std::min(window, n - 1);
  // least squares of a_k k^alpha = c + c d / k
  long double s1 = 0, sx = 0, sxx = 0, sy = 0, sxy = 0;
  for (int k = n - window; k < n; ++k) {
    if (k <= 0) continue;
    long double x = 1.0L / k;
    long double y = a[k] * std::pow(static_cast<long double>(k), alpha);
    s1 += 1;
    sx += x;
    sxx += x * x;
    sy += y;
    sxy += x * y;
  }
  long double det = s1 * sxx - sx * sx;
  TailFit f;
  if (std::fabs(det) < 1e-300L) {
    f.c = sy / s1;
    return f;
  }
  long double c = (sxx * sy - sx * sxy) / det;
  long double cd = (s1 * sxy - sx * sy) / det;
  f.c = c;
  f.d = c != 0 ? cd / c : 0;
  return f;
}

TailSum corrected_sum(const std::vector<long double>& a, long double alpha, int moment) {
  TailSum ts;
  long double s = 0;
  for (size_t k = 0; k < a.size(); ++k) s += std::pow(static_cast<long double>(k), moment) * a[k];
  ts.fit = fit_power_tail(a, alpha);
  long double M = static_cast<long double>(a.size());
  long double e = alpha - moment;
  ts.tail = ts.fit.c * (hurwitz_tail(e, M) + ts.fit.d * hurwitz_tail(e + 1, M));
  ts.value = s + ts.tail;
  return ts;
}

long double richardson(const std::vector<long double>& r, int n, int order) {
  if (n - order < 1 || n >= static_cast<int>(r.size()))
    throw std::invalid_argument("richardson window out of range");
  long double est = 0;
  for (int j = 0; j <= order; ++j) {
    long double c = std::pow(static_cast<long double>(n - j), order) * ((j % 2) ? -1 : 1);
    for (int i = 1; i <= j; ++i) c /= i;
    for (int i = 1; i <= order - j; ++i) c /= i;
    est += c * r[n - j];
  }
  return est;
}

}  // namespace pmap
