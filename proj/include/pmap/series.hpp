#pragma once

// Truncated bivariate power series. Coefficients of x^a y^b live in a dense
// row-major table; zero entries are skipped in the inner loops.
// LabelledX stores the already-divided EGF coefficient, so products,
// exponentials and compositions are the ordinary power-series operations.

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "pmap/rational.hpp"

namespace pmap {

enum class Convention { LabelledX, Plain };

const char* convention_name(Convention c);
Convention parse_convention(const std::string& s);

struct SeriesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
class BiSeries {
 public:
  BiSeries() : BiSeries(0, 0) {}
  BiSeries(int max_x, int max_y, Convention conv = Convention::Plain)
      : mx_(max_x), my_(max_y), conv_(conv) {
    if (max_x < 0 || max_y < 0) throw SeriesError("negative truncation order");
    c_.assign(static_cast<size_t>(mx_ + 1) * static_cast<size_t>(my_ + 1), T(0));
  }

  static BiSeries constant(const T& v, int mx, int my, Convention conv = Convention::Plain) {
    BiSeries s(mx, my, conv);
    s(0, 0) = v;
    return s;
  }
  static BiSeries monomial(int a, int b, const T& v, int mx, int my,
                           Convention conv = Convention::Plain) {
    BiSeries s(mx, my, conv);
    if (a <= mx && b <= my) s(a, b) = v;
    return s;
  }

  int max_x() const { return mx_; }
  int max_y() const { return my_; }
  Convention convention() const { return conv_; }
  void set_convention(Convention c) { conv_ = c; }

  // evaluated-at-x=t mode: max_x is 0 and x has been replaced by t
  const std::optional<Rational>& x_value() const { return xval_; }
  void set_x_value(std::optional<Rational> t) { xval_ = std::move(t); }

  bool in_range(int a, int b) const { return a >= 0 && b >= 0 && a <= mx_ && b <= my_; }
  const T& operator()(int a, int b) const { return c_[idx(a, b)]; }
  T& operator()(int a, int b) { return c_[idx(a, b)]; }
  T get(int a, int b) const { return in_range(a, b) ? c_[idx(a, b)] : T(0); }

  bool is_zero_series() const {
    return std::all_of(c_.begin(), c_.end(), [](const T& v) { return is_zero(v); });
  }

  std::vector<std::tuple<int, int, T>> nonzero() const {
    std::vector<std::tuple<int, int, T>> out;
    for (int a = 0; a <= mx_; ++a)
      for (int b = 0; b <= my_; ++b)
        if (!is_zero((*this)(a, b))) out.emplace_back(a, b, (*this)(a, b));
    return out;
  }

  std::vector<T> y_row(int a) const {
    std::vector<T> r(static_cast<size_t>(my_ + 1));
    for (int b = 0; b <= my_; ++b) r[b] = (*this)(a, b);
    return r;
  }

  bool operator==(const BiSeries& o) const {
    return mx_ == o.mx_ && my_ == o.my_ && conv_ == o.conv_ && c_ == o.c_;
  }
  bool operator!=(const BiSeries& o) const { return !(*this == o); }

  // smallest a+b where the two series differ inside the common box, -1 if none
  int first_difference(const BiSeries& o) const {
    int best = -1;
    int mx = std::min(mx_, o.mx_), my = std::min(my_, o.my_);
    for (int a = 0; a <= mx; ++a)
      for (int b = 0; b <= my; ++b)
        if ((*this)(a, b) != o(a, b) && (best < 0 || a + b < best)) best = a + b;
    return best;
  }

 private:
  size_t idx(int a, int b) const {
    return static_cast<size_t>(a) * static_cast<size_t>(my_ + 1) + static_cast<size_t>(b);
  }
  int mx_, my_;
  Convention conv_;
  std::optional<Rational> xval_;
  std::vector<T> c_;
};

using Series = BiSeries<Rational>;

namespace detail {

template <class T>
void check_compatible(const BiSeries<T>& f, const BiSeries<T>& g) {
  if (f.convention() != g.convention())
    throw SeriesError("convention mismatch between series operands");
  if (f.x_value() && g.x_value() && *f.x_value() != *g.x_value())
    throw SeriesError("operands evaluated at different x values");
}

template <class T>
std::optional<Rational> merged_x(const BiSeries<T>& f, const BiSeries<T>& g) {
  return f.x_value() ? f.x_value() : g.x_value();
}

}  // namespace detail

template <class T>
BiSeries<T> truncate(const BiSeries<T>& f, int mx, int my) {
  mx = std::min(mx, f.max_x());
  my = std::min(my, f.max_y());
  BiSeries<T> r(mx, my, f.convention());
  r.set_x_value(f.x_value());
  for (int a = 0; a <= mx; ++a)
    for (int b = 0; b <= my; ++b) r(a, b) = f(a, b);
  return r;
}

template <class T>
BiSeries<T> add(const BiSeries<T>& f, const BiSeries<T>& g) {
  detail::check_compatible(f, g);
  int mx = std::min(f.max_x(), g.max_x()), my = std::min(f.max_y(), g.max_y());
  BiSeries<T> r(mx, my, f.convention());
  r.set_x_value(detail::merged_x(f, g));
  for (int a = 0; a <= mx; ++a)
    for (int b = 0; b <= my; ++b) r(a, b) = f(a, b) + g(a, b);
  return r;
}

template <class T>
BiSeries<T> sub(const BiSeries<T>& f, const BiSeries<T>& g) {
  detail::check_compatible(f, g);
  int mx = std::min(f.max_x(), g.max_x()), my = std::min(f.max_y(), g.max_y());
  BiSeries<T> r(mx, my, f.convention());
  r.set_x_value(detail::merged_x(f, g));
  for (int a = 0; a <= mx; ++a)
    for (int b = 0; b <= my; ++b) r(a, b) = f(a, b) - g(a, b);
  return r;
}

template <class T>
BiSeries<T> scale(const BiSeries<T>& f, const T& c) {
  BiSeries<T> r = f;
  for (int a = 0; a <= f.max_x(); ++a)
    for (int b = 0; b <= f.max_y(); ++b) r(a, b) = f(a, b) * c;
  return r;
}

template <class T>
BiSeries<T> add_constant(const BiSeries<T>& f, const T& c) {
  BiSeries<T> r = f;
  r(0, 0) = r(0, 0) + c;
  return r;
}

template <class T>
BiSeries<T> mul(const BiSeries<T>& f, const BiSeries<T>& g) {
  detail::check_compatible(f, g);
  int mx = std::min(f.max_x(), g.max_x()), my = std::min(f.max_y(), g.max_y());
  BiSeries<T> r(mx, my, f.convention());
  r.set_x_value(detail::merged_x(f, g));
  for (int a1 = 0; a1 <= mx; ++a1)
    for (int b1 = 0; b1 <= my; ++b1) {
      const T& fv = f(a1, b1);
      if (is_zero(fv)) continue;
      for (int a2 = 0; a1 + a2 <= mx; ++a2)
        for (int b2 = 0; b1 + b2 <= my; ++b2) {
          const T& gv = g(a2, b2);
          if (is_zero(gv)) continue;
          r(a1 + a2, b1 + b2) += fv * gv;
        }
    }
  return r;
}

template <class T>
BiSeries<T> power(const BiSeries<T>& f, int k) {
  if (k < 0) throw SeriesError("negative power");
  BiSeries<T> r = BiSeries<T>::constant(T(1), f.max_x(), f.max_y(), f.convention());
  r.set_x_value(f.x_value());
  BiSeries<T> base = f;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return r;
}

// multiply by y^k keeping the truncation
template <class T>
BiSeries<T> shift_y(const BiSeries<T>& f, int k) {
  BiSeries<T> r(f.max_x(), f.max_y(), f.convention());
  r.set_x_value(f.x_value());
  for (int a = 0; a <= f.max_x(); ++a)
    for (int b = 0; b + k <= f.max_y(); ++b) r(a, b + k) = f(a, b);
  return r;
}

template <class T>
BiSeries<T> shift_x(const BiSeries<T>& f, int k) {
  BiSeries<T> r(f.max_x(), f.max_y(), f.convention());
  r.set_x_value(f.x_value());
  for (int a = 0; a + k <= f.max_x(); ++a)
    for (int b = 0; b <= f.max_y(); ++b) r(a + k, b) = f(a, b);
  return r;
}

// divide by y^k; the y-valuation must be at least k, truncation drops by k
template <class T>
BiSeries<T> divide_y(const BiSeries<T>& f, int k) {
  for (int a = 0; a <= f.max_x(); ++a)
    for (int b = 0; b < k && b <= f.max_y(); ++b)
      if (!is_zero(f(a, b))) throw SeriesError("divide_y: y-valuation too small");
  if (f.max_y() < k) throw SeriesError("divide_y: truncation too small");
  BiSeries<T> r(f.max_x(), f.max_y() - k, f.convention());
  r.set_x_value(f.x_value());
  for (int a = 0; a <= f.max_x(); ++a)
    for (int b = 0; b <= r.max_y(); ++b) r(a, b) = f(a, b + k);
  return r;
}

template <class T>
BiSeries<T> divide_x(const BiSeries<T>& f, int k) {
  for (int a = 0; a < k && a <= f.max_x(); ++a)
    for (int b = 0; b <= f.max_y(); ++b)
      if (!is_zero(f(a, b))) throw SeriesError("divide_x: x-valuation too small");
  if (f.max_x() < k) throw SeriesError("divide_x: truncation too small");
  BiSeries<T> r(f.max_x() - k, f.max_y(), f.convention());
  r.set_x_value(f.x_value());
  for (int a = 0; a <= r.max_x(); ++a)
    for (int b = 0; b <= f.max_y(); ++b) r(a, b) = f(a + k, b);
  return r;
}

template <class T>
BiSeries<T> inverse(const BiSeries<T>& f) {
  const T& c0 = f(0, 0);
  if (is_zero(c0)) throw SeriesError("inverse: zero constant term");
  int mx = f.max_x(), my = f.max_y();
  BiSeries<T> h(mx, my, f.convention());
  h.set_x_value(f.x_value());
  T inv0 = T(1) / c0;
  std::vector<std::pair<int, int>> nz;
  for (int i = 0; i <= mx; ++i)
    for (int j = 0; j <= my; ++j)
      if ((i || j) && !is_zero(f(i, j))) nz.emplace_back(i, j);
  for (int a = 0; a <= mx; ++a)
    for (int b = 0; b <= my; ++b) {
      if (a == 0 && b == 0) {
        h(0, 0) = inv0;
        continue;
      }
      T acc(0);
      for (auto [i, j] : nz) {
        if (i > a || j > b) continue;
        acc += f(i, j) * h(a - i, b - j);
      }
      h(a, b) = -acc * inv0;
    }
  return h;
}

template <class T>
void require_zero_constant(const BiSeries<T>& f, const char* op) {
  if (!is_zero(f(0, 0))) throw SeriesError(std::string(op) + ": nonzero constant term");
}

// SEQ(f) = 1/(1-f)
template <class T>
BiSeries<T> seq(const BiSeries<T>& f) {
  require_zero_constant(f, "seq");
  BiSeries<T> one = BiSeries<T>::constant(T(1), f.max_x(), f.max_y(), f.convention());
  one.set_x_value(f.x_value());
  return inverse(sub(one, f));
}

// SEQ_{>=k}(f) = f^k/(1-f)
template <class T>
BiSeries<T> seq_ge(const BiSeries<T>& f, int k) {
  return mul(power(f, k), seq(f));
}

// exp(f) for f with zero constant term, no convention check
template <class T>
BiSeries<T> exp_series(const BiSeries<T>& f) {
  require_zero_constant(f, "exp");
  int mx = f.max_x(), my = f.max_y();
  BiSeries<T> e(mx, my, f.convention());
  e.set_x_value(f.x_value());
  e(0, 0) = T(1);
  // row 0 via y-derivative: b E_b = sum j f_j E_{b-j}
  for (int b = 1; b <= my; ++b) {
    T acc(0);
    for (int j = 1; j <= b; ++j)
      if (!is_zero(f(0, j))) acc += T(j) * f(0, j) * e(0, b - j);
    e(0, b) = acc / T(b);
  }
  // higher rows via x-derivative: a E_{a,.} = sum_i i f_{i,.} * E_{a-i,.}
  for (int a = 1; a <= mx; ++a)
    for (int b = 0; b <= my; ++b) {
      T acc(0);
      for (int i = 1; i <= a; ++i)
        for (int j = 0; j <= b; ++j) {
          const T& fv = f(i, j);
          if (is_zero(fv)) continue;
          acc += T(i) * fv * e(a - i, b - j);
        }
      e(a, b) = acc / T(a);
    }
  return e;
}

template <class T>
BiSeries<T> set(const BiSeries<T>& f) {
  if (f.convention() != Convention::LabelledX)
    throw SeriesError("set requires the LabelledX convention");
  return exp_series(f);
}

// SET_{>=k}(f) = exp(f) - sum_{j<k} f^j/j!
template <class T>
BiSeries<T> set_ge(const BiSeries<T>& f, int k) {
  BiSeries<T> r = set(f);
  BiSeries<T> term = BiSeries<T>::constant(T(1), f.max_x(), f.max_y(), f.convention());
  term.set_x_value(f.x_value());
  for (int j = 0; j < k; ++j) {
    r = sub(r, term);
    term = scale(mul(term, f), T(T(1) / T(j + 1)));
  }
  return r;
}

template <class T>
BiSeries<T> derive_x(const BiSeries<T>& f) {
  if (f.max_x() == 0) return BiSeries<T>(0, f.max_y(), f.convention());
  BiSeries<T> r(f.max_x() - 1, f.max_y(), f.convention());
  r.set_x_value(f.x_value());
  for (int a = 0; a < f.max_x(); ++a)
    for (int b = 0; b <= f.max_y(); ++b) r(a, b) = T(a + 1) * f(a + 1, b);
  return r;
}

template <class T>
BiSeries<T> derive_y(const BiSeries<T>& f) {
  if (f.max_y() == 0) return BiSeries<T>(f.max_x(), 0, f.convention());
  BiSeries<T> r(f.max_x(), f.max_y() - 1, f.convention());
  r.set_x_value(f.x_value());
  for (int a = 0; a <= f.max_x(); ++a)
    for (int b = 0; b < f.max_y(); ++b) r(a, b) = T(b + 1) * f(a, b + 1);
  return r;
}

// antiderivative in y; const_term supplies the y^0 slice (its y>0 part is ignored)
template <class T>
BiSeries<T> integrate_y(const BiSeries<T>& f, const BiSeries<T>& const_term) {
  detail::check_compatible(f, const_term);
  BiSeries<T> r(f.max_x(), f.max_y() + 1, f.convention());
  r.set_x_value(f.x_value());
  for (int a = 0; a <= f.max_x(); ++a) {
    r(a, 0) = const_term.get(a, 0);
    for (int b = 0; b <= f.max_y(); ++b) r(a, b + 1) = f(a, b) / T(b + 1);
  }
  return r;
}

template <class T>
BiSeries<T> integrate_x(const BiSeries<T>& f, const BiSeries<T>& const_term) {
  detail::check_compatible(f, const_term);
  BiSeries<T> r(f.max_x() + 1, f.max_y(), f.convention());
  r.set_x_value(f.x_value());
  for (int b = 0; b <= f.max_y(); ++b) {
    r(0, b) = const_term.get(0, b);
    for (int a = 0; a <= f.max_x(); ++a) r(a + 1, b) = f(a, b) / T(a + 1);
  }
  return r;
}

template <class T>
int y_valuation(const BiSeries<T>& g) {
  for (int b = 0; b <= g.max_y(); ++b)
    for (int a = 0; a <= g.max_x(); ++a)
      if (!is_zero(g(a, b))) return b;
  return g.max_y() + 1;
}

template <class T>
int x_valuation(const BiSeries<T>& g) {
  for (int a = 0; a <= g.max_x(); ++a)
    for (int b = 0; b <= g.max_y(); ++b)
      if (!is_zero(g(a, b))) return a;
  return g.max_x() + 1;
}

// f(x, g(x,y)) by Horner in y. g needs zero constant term; terms of f beyond
// its y-truncation are only negligible when g has positive y-valuation.
template <class T>
BiSeries<T> substitute_y(const BiSeries<T>& f, const BiSeries<T>& g) {
  if (!is_zero(g(0, 0)))
    throw SeriesError("substitute_y: inner series has a nonzero constant term");
  if (f.max_x() > 0 && g.max_x() > 0) detail::check_compatible(f, g);
  if (y_valuation(g) < 1 && !g.is_zero_series())
    throw SeriesError("substitute_y: inner series must have positive y-valuation");
  int mx = std::min(f.max_x(), g.max_x()), my = std::min(f.max_y(), g.max_y());
  BiSeries<T> gt = truncate(g, mx, my);
  gt.set_convention(f.convention());
  auto row = [&](int b) {
    BiSeries<T> s(mx, my, f.convention());
    s.set_x_value(detail::merged_x(f, g));
    for (int a = 0; a <= mx; ++a) s(a, 0) = f(a, b);
    return s;
  };
  BiSeries<T> r = row(f.max_y());
  for (int b = f.max_y() - 1; b >= 0; --b) r = add(mul(r, gt), row(b));
  return r;
}

// f(g(x,y), y), g with positive x-valuation
template <class T>
BiSeries<T> substitute_x(const BiSeries<T>& f, const BiSeries<T>& g) {
  if (!is_zero(g(0, 0)))
    throw SeriesError("substitute_x: inner series has a nonzero constant term");
  detail::check_compatible(f, g);
  if (x_valuation(g) < 1 && !g.is_zero_series())
    throw SeriesError("substitute_x: inner series must have positive x-valuation");
  int mx = std::min(f.max_x(), g.max_x()), my = std::min(f.max_y(), g.max_y());
  BiSeries<T> gt = truncate(g, mx, my);
  auto col = [&](int a) {
    BiSeries<T> s(mx, my, f.convention());
    for (int b = 0; b <= my; ++b) s(0, b) = f(a, b);
    return s;
  };
  BiSeries<T> r = col(f.max_x());
  for (int a = f.max_x() - 1; a >= 0; --a) r = add(mul(r, gt), col(a));
  return r;
}

// y -> y^k
template <class T>
BiSeries<T> stretch_y(const BiSeries<T>& f, int k, int new_max_y) {
  BiSeries<T> r(f.max_x(), new_max_y, f.convention());
  r.set_x_value(f.x_value());
  for (int a = 0; a <= f.max_x(); ++a)
    for (int b = 0; b * k <= new_max_y; ++b) {
      if (b > f.max_y()) throw SeriesError("stretch_y: source truncation too small");
      r(a, b * k) = f(a, b);
    }
  return r;
}

// [x^a] scaled by s^a (vertex tilt)
template <class T>
BiSeries<T> scale_x(const BiSeries<T>& f, const T& s) {
  BiSeries<T> r = f;
  T p(1);
  for (int a = 0; a <= f.max_x(); ++a) {
    for (int b = 0; b <= f.max_y(); ++b) r(a, b) = f(a, b) * p;
    p = p * s;
  }
  return r;
}

// Fixed point of a contracting map: exactly max_x+max_y+1 rounds, then one
// more application must reproduce the result.
template <class T, class F>
BiSeries<T> fixed_point(F&& rhs, BiSeries<T> init, int rounds = -1) {
  if (rounds < 0) rounds = init.max_x() + init.max_y() + 1;
  BiSeries<T> cur = std::move(init);
  int last_diff = -1;
  for (int r = 0; r < rounds; ++r) {
    BiSeries<T> next = rhs(cur);
    if (next.max_x() != cur.max_x() || next.max_y() != cur.max_y())
      throw SeriesError("fixed_point: right-hand side changed the truncation");
    int d = next.first_difference(cur);
    if (d >= 0 && d <= last_diff)
      throw SeriesError("fixed_point: map is not contracting (no new coefficients fixed)");
    if (d >= 0) last_diff = d;
    cur = std::move(next);
    if (d < 0) break;
  }
  if (rhs(cur) != cur) throw SeriesError("fixed_point: result not stable after iteration bound");
  return cur;
}

template <class T, class F>
std::vector<BiSeries<T>> fixed_point_system(F&& rhs, std::vector<BiSeries<T>> init,
                                            int rounds = -1) {
  if (init.empty()) return init;
  if (rounds < 0) rounds = init[0].max_x() + init[0].max_y() + 1;
  auto cur = std::move(init);
  int last_diff = -1;
  auto diff = [](const std::vector<BiSeries<T>>& p, const std::vector<BiSeries<T>>& q) {
    int best = -1;
    for (size_t i = 0; i < p.size(); ++i) {
      int d = p[i].first_difference(q[i]);
      if (d >= 0 && (best < 0 || d < best)) best = d;
    }
    return best;
  };
  for (int r = 0; r < rounds; ++r) {
    auto next = rhs(cur);
    int d = diff(next, cur);
    if (d >= 0 && d <= last_diff)
      throw SeriesError("fixed_point_system: map is not contracting");
    if (d >= 0) last_diff = d;
    cur = std::move(next);
    if (d < 0) break;
  }
  if (diff(rhs(cur), cur) >= 0)
    throw SeriesError("fixed_point_system: result not stable after iteration bound");
  return cur;
}

// u = x y (1+v)^2, v = y (1+u)^2 with zero constant terms
std::pair<Series, Series> solve_uv_system(int max_x, int max_y);

// residual check helper used by the grammar layer
bool uv_residual_zero(const Series& u, const Series& v);

template <class T>
BiSeries<T> convert(const Series& s) {
  BiSeries<T> r(s.max_x(), s.max_y(), s.convention());
  r.set_x_value(s.x_value());
  for (int a = 0; a <= s.max_x(); ++a)
    for (int b = 0; b <= s.max_y(); ++b) {
      if constexpr (std::is_same_v<T, Rational>)
        r(a, b) = s(a, b);
      else
        r(a, b) = static_cast<T>(to_long_double(s(a, b)));
    }
  return r;
}

}  // namespace pmap
