#pragma once

// Univariate truncated series as plain coefficient vectors. Used for the
// evaluated-at-x=t runs, where y-orders in the thousands are needed.

#include <stdexcept>
#include <vector>

#include "pmap/rational.hpp"

namespace pmap::poly {

template <class T>
using Poly = std::vector<T>;

template <class T>
T coef(const Poly<T>& a, size_t k) {
  return k < a.size() ? a[k] : T(0);
}

// [z^k] a*b, both known through k
template <class T>
T conv_at(const Poly<T>& a, const Poly<T>& b, size_t k) {
  T acc(0);
  size_t lo = k + 1 > b.size() ? k + 1 - b.size() : 0;
  for (size_t i = lo; i <= k && i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    acc += a[i] * b[k - i];
  }
  return acc;
}

template <class T>
Poly<T> mul(const Poly<T>& a, const Poly<T>& b, size_t n) {
  Poly<T> r(n, T(0));
  for (size_t i = 0; i < a.size() && i < n; ++i) {
    if (is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size() && i + j < n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

template <class T>
Poly<T> add(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> r(std::max(a.size(), b.size()), T(0));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coef(a, i) + coef(b, i);
  return r;
}

template <class T>
Poly<T> inverse(const Poly<T>& a, size_t n) {
  if (a.empty() || is_zero(a[0])) throw std::domain_error("poly inverse: zero constant term");
  Poly<T> h(n, T(0));
  T inv0 = T(1) / a[0];
  for (size_t k = 0; k < n; ++k) {
    if (k == 0) {
      h[0] = inv0;
      continue;
    }
    T acc(0);
    for (size_t i = 1; i <= k && i < a.size(); ++i)
      if (!is_zero(a[i])) acc += a[i] * h[k - i];
    h[k] = -acc * inv0;
  }
  return h;
}

// exp(a) with a[0] = 0
template <class T>
Poly<T> exp(const Poly<T>& a, size_t n) {
  if (!a.empty() && !is_zero(a[0])) throw std::domain_error("poly exp: nonzero constant term");
  Poly<T> e(n, T(0));
  if (n == 0) return e;
  e[0] = T(1);
  for (size_t k = 1; k < n; ++k) {
    T acc(0);
    for (size_t j = 1; j <= k && j < a.size(); ++j)
      if (!is_zero(a[j])) acc += T(static_cast<long>(j)) * a[j] * e[k - j];
    e[k] = acc / T(static_cast<long>(k));
  }
  return e;
}

// a^p via the power recurrence; requires a[0] != 0
template <class T>
Poly<T> power(const Poly<T>& a, long p, size_t n) {
  if (a.empty() || is_zero(a[0])) throw std::domain_error("poly power: zero constant term");
  Poly<T> b(n, T(0));
  if (n == 0) return b;
  T b0(1);
  for (long i = 0; i < p; ++i) b0 *= a[0];
  b[0] = b0;
  T inv0 = T(1) / a[0];
  for (size_t k = 1; k < n; ++k) {
    T acc(0);
    for (size_t j = 1; j <= k && j < a.size(); ++j) {
      if (is_zero(a[j])) continue;
      long w = (p + 1) * static_cast<long>(j) - static_cast<long>(k);
      if (w == 0) continue;
      acc += T(w) * a[j] * b[k - j];
    }
    b[k] = acc * inv0 / T(static_cast<long>(k));
  }
  return b;
}

// f(g) with g[0] = 0, Horner
template <class T>
Poly<T> compose(const Poly<T>& f, const Poly<T>& g, size_t n) {
  if (!g.empty() && !is_zero(g[0])) throw std::domain_error("poly compose: nonzero constant term");
  Poly<T> r(n, T(0));
  for (size_t i = std::min(f.size(), n); i-- > 0;) {
    r = mul(r, g, n);
    r[0] += f[i];
  }
  return r;
}

template <class T>
Poly<T> derivative(const Poly<T>& a) {
  Poly<T> r(a.size() > 1 ? a.size() - 1 : 0, T(0));
  for (size_t k = 1; k < a.size(); ++k) r[k - 1] = T(static_cast<long>(k)) * a[k];
  return r;
}

template <class T>
T evaluate(const Poly<T>& a, const T& x) {
  T r(0);
  for (size_t k = a.size(); k-- > 0;) r = r * x + a[k];
  return r;
}

// a_k s^k
template <class T>
Poly<T> rescale(const Poly<T>& a, const T& s) {
  Poly<T> r(a.size());
  T p(1);
  for (size_t k = 0; k < a.size(); ++k) {
    r[k] = a[k] * p;
    p *= s;
  }
  return r;
}

template <class T>
Poly<long double> to_float(const Poly<T>& a) {
  Poly<long double> r(a.size());
  for (size_t k = 0; k < a.size(); ++k) {
    if constexpr (std::is_same_v<T, Rational>)
      r[k] = to_long_double(a[k]);
    else
      r[k] = static_cast<long double>(a[k]);
  }
  return r;
}

}  // namespace pmap::poly
