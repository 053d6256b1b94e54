#include <doctest.h>

#include <random>

#include "pmap/grammar.hpp"
#include "pmap/map_online.hpp"

using namespace pmap;
namespace P = pmap::poly;

namespace {

P::Poly<Rational> random_poly(std::mt19937_64& rng, int n, bool zero_const) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  P::Poly<Rational> p(n);
  for (auto& c : p) c = frac(num(rng), den(rng));
  if (zero_const) p[0] = 0;
  else if (is_zero(p[0])) p[0] = 1;
  return p;
}

Series as_series(const P::Poly<Rational>& p) {
  Series s(0, static_cast<int>(p.size()) - 1);
  for (size_t k = 0; k < p.size(); ++k) s(0, static_cast<int>(k)) = p[k];
  return s;
}

void check_same(const P::Poly<Rational>& p, const Series& s) {
  for (size_t k = 0; k < p.size(); ++k) CHECK(p[k] == s.get(0, static_cast<int>(k)));
}

}  // namespace

TEST_CASE("poly operations agree with the bivariate series") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 5; ++rep) {
    auto a = random_poly(rng, 8, false), b = random_poly(rng, 8, false);
    auto z = random_poly(rng, 8, true);
    check_same(P::mul(a, b, 8), mul(as_series(a), as_series(b)));
    check_same(P::inverse(a, 8), inverse(as_series(a)));
    check_same(P::power(a, 3, 8), power(as_series(a), 3));
    check_same(P::compose(a, z, 8), substitute_y(as_series(a), as_series(z)));
  }
}

TEST_CASE("poly exp and derivative") {
  P::Poly<Rational> x{0, 1, 0, 0, 0, 0};
  auto e = P::exp(x, 6);
  for (int k = 0; k < 6; ++k) CHECK(e[k] == Rational(1) / Rational(factorial(k)));
  auto d = P::derivative(e);
  for (int k = 0; k < 5; ++k) CHECK(d[k] == e[k]);
  CHECK_THROWS(P::exp(P::Poly<Rational>{1, 1}, 3));
  CHECK_THROWS(P::inverse(P::Poly<Rational>{0, 1}, 3));
}

TEST_CASE("poly power with negative exponents") {
  P::Poly<Rational> a{1, 1};
  auto inv = P::power(a, -1, 6);
  auto ref = P::inverse(a, 6);
  for (int k = 0; k < 6; ++k) CHECK(inv[k] == ref[k]);
}

TEST_CASE("online map series match the grammar chain at x = t") {
  for (auto t : {Rational(1), frac(1, 2), Rational(3)}) {
    const int n = 14;
    auto mt = build_map_chain(t, 0, n - 1);
    auto f = online::f01_bar<Rational>(t, Rational(1), n);
    auto rb = online::rbar_closed<Rational>(t, Rational(1), n);
    auto ds = online::d_system<Rational>(t, Rational(1), n);
    auto kb = online::kbar_from_d(ds.d, t);
    for (int k = 0; k < n; ++k) {
      CHECK(f[k] == mt.F01bar.get(0, k));
      CHECK(rb[k] == mt.Rbar.get(0, k));
      CHECK(ds.d[k] == mt.D.get(0, k));
      CHECK(kb[k] == mt.Kbar.get(0, k));
    }
    auto v = online::v_in_w(ds.d, t, Rational(1));
    for (int k = 0; k < n; ++k) CHECK(v[k] == mt.V.get(0, 2 * k));
  }
}

TEST_CASE("scaled runs are rescaled exact runs") {
  Rational t = frac(2, 3), s = frac(1, 7);
  const int n = 10;
  auto d1 = online::d_system<Rational>(t, Rational(1), n).d;
  auto ds = online::d_system<Rational>(t, s, n).d;
  auto r1 = online::rbar_closed<Rational>(t, Rational(1), n);
  auto rs = online::rbar_closed<Rational>(t, s, n);
  auto f1 = online::f01_bar<Rational>(t, Rational(1), n);
  auto fs = online::f01_bar<Rational>(t, s, n);
  Rational p = 1;
  for (int k = 0; k < n; ++k) {
    CHECK(ds[k] == d1[k] * p);
    CHECK(rs[k] == r1[k] * p);
    CHECK(fs[k] == f1[k] * p);
    p *= s;
  }
}

TEST_CASE("floating run tracks the exact run") {
  const int n = 30;
  auto de = online::d_system<Rational>(Rational(1), Rational(1), n).d;
  auto dl = online::d_system<long double>(1.0L, 1.0L, n).d;
  for (int k = 1; k < n; ++k)
    CHECK(static_cast<double>(dl[k] / to_long_double(de[k])) == doctest::Approx(1.0).epsilon(1e-12));
}
