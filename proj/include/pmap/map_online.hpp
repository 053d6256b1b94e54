#pragma once

// Map-side series at a fixed vertex weight t, coefficient by coefficient.
// Every routine takes a scale s and returns the coefficients of f(s*y), which
// keeps floating runs near the radius of convergence inside range.

#include <vector>

#include "pmap/online.hpp"

namespace pmap::online {

using poly::Poly;

template <class T>
struct UVState {
  Poly<T> u, v;
  Poly<T> a2, b2;  // (1+u)^2, (1+v)^2
  Poly<T> s, s2, s3;
  Poly<T> p, q, pi;  // p = a2*b2, q = 1/s3, pi = 1/p
};

namespace detail {

template <class T>
void extend(UVState<T>& st, size_t k, const T& uk, const T& vk) {
  using poly::conv_at;
  st.u.push_back(uk);
  st.v.push_back(vk);
  st.s.push_back(uk + vk);
  // A = 1 + u, B = 1 + v as shifted views
  auto A = [&](size_t j) { return j == 0 ? T(1) + st.u[0] : st.u[j]; };
  auto B = [&](size_t j) { return j == 0 ? T(1) + st.v[0] : st.v[j]; };
  if (k == 0) st.s[0] = T(1) + uk + vk;
  T a2(0), b2(0);
  for (size_t j = 0; j <= k; ++j) {
    a2 += A(j) * A(k - j);
    b2 += B(j) * B(k - j);
  }
  st.a2.push_back(a2);
  st.b2.push_back(b2);
  st.s2.push_back(conv_at(st.s, st.s, k));
  st.s3.push_back(conv_at(st.s2, st.s, k));
  st.p.push_back(conv_at(st.a2, st.b2, k));
  if (k == 0) {
    st.q.push_back(T(1) / st.s3[0]);
    st.pi.push_back(T(1) / st.p[0]);
  } else {
    T acc(0), acc2(0);
    for (size_t j = 1; j <= k; ++j) {
      acc += st.s3[j] * st.q[k - j];
      acc2 += st.p[j] * st.pi[k - j];
    }
    st.q.push_back(-acc * st.q[0]);
    st.pi.push_back(-acc2 * st.pi[0]);
  }
}

}  // namespace detail

// u = t w (1+v)^2, v = w (1+u)^2 for a given w with w[0] = 0
template <class T>
UVState<T> uv_given_w(const Poly<T>& w, const T& t, size_t n) {
  UVState<T> st;
  detail::extend(st, 0, T(0), T(0));
  for (size_t k = 1; k < n; ++k) {
    T uk(0), vk(0);
    for (size_t j = 1; j <= k && j < w.size(); ++j) {
      if (is_zero(w[j])) continue;
      uk += w[j] * st.b2[k - j];
      vk += w[j] * st.a2[k - j];
    }
    detail::extend(st, k, T(t * uk), vk);
  }
  return st;
}

template <class T>
struct DState {
  Poly<T> d;
  UVState<T> uv;
};

// D = s y (1+u+v)^3/((1+u)^2 (1+v)^2), u = t D (1+v)^2, v = D (1+u)^2
template <class T>
DState<T> d_system(const T& t, const T& s, size_t n) {
  DState<T> st;
  st.d.push_back(T(0));
  detail::extend(st.uv, 0, T(0), T(0));
  Poly<T> e{T(1)};  // s3 / p
  for (size_t k = 1; k < n; ++k) {
    st.d.push_back(s * e[k - 1]);
    T uk(0), vk(0);
    for (size_t j = 1; j <= k; ++j) {
      uk += st.d[j] * st.uv.b2[k - j];
      vk += st.d[j] * st.uv.a2[k - j];
    }
    detail::extend(st.uv, k, T(t * uk), vk);
    e.push_back(poly::conv_at(st.uv.s3, st.uv.pi, k));
  }
  return st;
}

// F01bar(t, s y)
template <class T>
Poly<T> f01_bar(const T& t, const T& s, size_t n) {
  Poly<T> w(n, T(0));
  if (n > 1) w[1] = s;
  auto st = uv_given_w(w, t, n);
  Poly<T> ratio(n);  // A^2 B^2 / S^3
  for (size_t k = 0; k < n; ++k) ratio[k] = poly::conv_at(st.p, st.q, k);
  Poly<T> f(n, T(0));
  T ts = t * s;
  T pw_ts(1), pw_s(1);  // (-ts)^k, (-s)^k
  for (size_t k = 1; k < n; ++k) {
    size_t j = k - 1;
    T inner = pw_ts + pw_s - ratio[j];
    if (j == 0) inner -= T(1);
    f[k] = s * inner;
    pw_ts *= -ts;
    pw_s *= -s;
  }
  return f;
}

// Rbar(t, s y) = (1 - t s y) S^3/(A^2 B^2) at w = s y/(1 - t s y)
template <class T>
Poly<T> rbar_closed(const T& t, const T& s, size_t n) {
  Poly<T> w(n, T(0));
  T ts = t * s, p = s;
  for (size_t k = 1; k < n; ++k) {
    w[k] = p;
    p *= ts;
  }
  auto st = uv_given_w(w, t, n);
  Poly<T> r(n);  // S^3/(A^2 B^2) = s3 / p
  for (size_t k = 0; k < n; ++k) r[k] = poly::conv_at(st.s3, st.pi, k);
  Poly<T> out(n);
  for (size_t k = 0; k < n; ++k) out[k] = r[k] - (k ? ts * r[k - 1] : T(0));
  return out;
}

// Kbar = D/(1 + t D)
template <class T>
Poly<T> kbar_from_d(const Poly<T>& d, const T& t) {
  size_t n = d.size();
  Poly<T> den(n, T(0));
  den[0] = T(1);
  for (size_t k = 1; k < n; ++k) den[k] = t * d[k];
  return poly::mul(d, poly::inverse(den, n), n);
}

// V in w = z^2: V(s w) = 1 + s w + t s w (1 + D(s w)); d is already scaled
template <class T>
Poly<T> v_in_w(const Poly<T>& d, const T& t, const T& s) {
  size_t n = d.size();
  Poly<T> v(n, T(0));
  v[0] = T(1);
  if (n > 1) v[1] = s + t * s;
  for (size_t k = 2; k < n; ++k) v[k] = t * s * d[k - 1];
  return v;
}

}  // namespace pmap::online
