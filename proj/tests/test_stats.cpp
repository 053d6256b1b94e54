#include <doctest.h>

#include <cmath>
#include <numeric>

#include "pmap/laws.hpp"
#include "pmap/oracles.hpp"
#include "pmap/rng.hpp"
#include "pmap/stats.hpp"

using namespace pmap;

TEST_CASE("Airy density: normalization and Laplace transform") {
  const auto& h = airy_default();
  double m = h.mass(-40, 40);
  CHECK(m > 0.998);
  CHECK(m < 1.0);
  CHECK(h.normalization() == doctest::Approx(1.0).epsilon(1e-3));
  for (double lam = 0.25; lam <= 4.0; lam *= std::sqrt(2.0))
    CHECK_MESSAGE(std::fabs(h.laplace(lam) / std::exp(std::pow(lam, 1.5)) - 1) < 1e-4, lam);
}

TEST_CASE("Airy density: shape") {
  const auto& h = airy_default();
  // P(X <= 0) = 1/alpha for alpha = 3/2 with one-sided jumps
  CHECK(h.cdf(0) == doctest::Approx(2.0 / 3).epsilon(1e-5));
  CHECK(h.cdf_direct(0) == doctest::Approx(2.0 / 3).epsilon(1e-5));
  double mode = -12, best = 0;
  for (double x = -12; x < 80; x += 0.05) {
    double v = h.h(x);
    CHECK(v >= 0);
    if (v > best) {
      best = v;
      mode = x;
    }
  }
  double prev = h.h(mode);
  for (double x = mode + 0.5; x < 80; x += 0.5) {
    double v = h.h(x);
    CHECK(v < prev);
    prev = v;
  }
  CHECK(h.h(60) == doctest::Approx(h.h_asymptotic(60)).epsilon(1e-3));
  for (double p : {0.05, 0.25, 0.5, 0.75, 0.95}) CHECK(h.cdf(h.quantile(p)) == doctest::Approx(p).epsilon(1e-6));
  for (double x : {-3.0, -1.0, 0.5, 2.0, 10.0})
    CHECK(h.cdf(x) == doctest::Approx(h.cdf_direct(x)).epsilon(1e-5));
}

TEST_CASE("tree counts") {
  // Z = z (1 + Z + Z^2): Motzkin numbers
  auto ws = weights_from_list({1, 1, 1});
  std::vector<long> motz{1, 1, 2, 4, 9, 21, 51};
  for (int n = 1; n <= 7; ++n) CHECK(tree_count(ws, n) == motz[n - 1]);
  CHECK(tree_count(weights_from_list({1, 0, 1}), 3) == 1);
}

TEST_CASE("tree identity is exact") {
  auto toy = weights_from_list({1, 0, 1});
  for (int n : {1, 3, 5, 25}) {
    auto r = check_tree_identity(toy, Rational(1), n);
    CHECK(r.equal);
    CHECK(r.lhs == r.rhs);
  }
  auto r3 = check_tree_identity(toy, Rational(1), 3);
  CHECK(r3.lhs == 1);
  auto vm = weight_sequence(ClassId::Vmap, Rational(1), 60);
  auto kb = weight_sequence(ClassId::Kbar, Rational(1), 60);
  for (int n : {1, 5, 25}) {
    CHECK(check_tree_identity(vm, frac(1, 3), n).equal);
    CHECK(check_tree_identity(kb, frac(1, 5), n).equal);
  }
  auto one = check_tree_identity(kb, frac(1, 5), 1);
  CHECK(one.lhs == kb.at(0));
}

TEST_CASE("big jump ratio") {
  auto law100 = kbar_law_t1(100), law400 = kbar_law_t1(400);
  Rational mean = frac(7, 12);
  auto a = bigjump_ratio(law100, mean, 100);
  auto b = bigjump_ratio(law400, mean, 400);
  REQUIRE(a.applicable);
  REQUIRE(b.applicable);
  CHECK(std::fabs(b.ratio - 1) < 0.1);
  CHECK(std::fabs(b.ratio - 1) < std::fabs(a.ratio - 1));
  CHECK(b.jump == 166);  // floor(400 * 5/12)

  OffspringLaw det;
  det.p = {0, 1};
  det.mean = 1;
  CHECK_FALSE(bigjump_ratio(det, Rational(1), 10).applicable);
}

TEST_CASE("KS comparison") {
  const auto& h = airy_default();
  Rng rng = stream_rng(2, 0);
  const int n = 1000, N = 3000;
  const double mu = 0.4, g = 0.7;
  double scale = g * std::pow(n, 2.0 / 3);
  std::vector<long> sizes;
  for (int i = 0; i < N; ++i) sizes.push_back(std::lround(mu * n - scale * h.quantile(uniform01(rng))));
  auto fixed = llt_compare(sizes, mu, n, h, g);
  CHECK_FALSE(fixed.fitted);
  CHECK(fixed.ks < 0.04);
  auto ks = llt_compare(sizes, mu, n, h);
  CHECK(ks.fitted);
  CHECK(ks.g == doctest::Approx(g).epsilon(0.05));
  CHECK(ks.ks <= fixed.ks + 1e-12);
  auto med = llt_compare(sizes, mu, n, h, std::nullopt, ScaleFit::Median);
  CHECK(med.g == doctest::Approx(g).epsilon(0.1));

  std::vector<long> flat(100, 400);
  CHECK(llt_compare(flat, mu, n, h).ks > 0.9);
  CHECK_THROWS_AS(llt_compare(std::vector<long>(5, 1), mu, n, h), StatsError);
  CHECK(stability_ks(1.0, 0.5, 5000, 3, h) < 0.05);
  CHECK(stability_ks(0.3, 2.0, 5000, 4, h) < 0.05);
}

TEST_CASE("Gibbs fragments at the D-level") {
  auto r100 = gibbs_fragment_check(Rational(1), 100);
  auto r200 = gibbs_fragment_check(Rational(1), 200);
  auto r300 = gibbs_fragment_check(Rational(1), 300);
  CHECK(r300.tv < 0.05);
  CHECK(r200.tv < r100.tv);
  CHECK(r300.tv < r200.tv);
  for (auto* r : {&r100, &r200, &r300}) {
    Rational s = std::accumulate(r->exact.begin(), r->exact.end(), Rational(0));
    CHECK(s == 1);
  }
  CHECK(r100.bound_ok);
  CHECK(gibbs_bound_holds(r300, r100.bound_C, r100.bound_c));
  CHECK(gibbs_fragment_check(frac(1, 2), 200).tv < 0.05);
  CHECK(gibbs_degenerate(50).tv == 0);
}

TEST_CASE("histograms") {
  std::vector<double> v{-1, 0, 0.5, 1, 2, 3, 9.9, 10, 11};
  auto h = make_histogram(v, 0, 10, 5);
  long inside = std::accumulate(h.counts.begin(), h.counts.end(), 0L);
  CHECK(inside + h.below + h.above == h.samples);
  CHECK(h.samples == 9);
  CHECK(h.below == 1);
  CHECK(h.above == 1);
  CHECK(h.counts[4] == 2);
  CHECK_THROWS_AS(make_histogram(v, 1, 1, 3), StatsError);
}

TEST_CASE("largest block edges per vertex") {
  auto w = w_law_at_rhoB(2000, 40, 0.03819L);
  long double s = 0, m = 0;
  for (size_t k = 0; k < w.size(); ++k) {
    s += w[k];
    m += k * w[k];
  }
  CHECK(static_cast<double>(m / s) == doctest::Approx(0.0402).epsilon(0.05));
  auto r = alpha0_experiment(1000, 100, 5);
  CHECK(r.estimate == doctest::Approx(2.17).epsilon(0.15 / 2.17));
  CHECK(r.mean_block_vertices < 1000);
  CHECK(r.kappa == doctest::Approx(2.2629).epsilon(1e-3));
}
