#include <doctest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <map>
#include <set>

#include "pmap/census.hpp"
#include "pmap/constants.hpp"
#include "pmap/cores.hpp"
#include "pmap/kernels.hpp"
#include "pmap/laws.hpp"
#include "pmap/oracles.hpp"
#include "pmap/online.hpp"
#include "pmap/sampler.hpp"

using namespace pmap;

namespace {

double chi2_pvalue(const std::vector<double>& observed, const std::vector<double>& expected) {
  double x = 0;
  for (size_t i = 0; i < observed.size(); ++i)
    x += (observed[i] - expected[i]) * (observed[i] - expected[i]) / expected[i];
  boost::math::chi_squared dist(static_cast<double>(observed.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, x));
}

// all Lukasiewicz words of length n with letters in [0, maxd]
void plane_trees(int n, int maxd, std::vector<int>& cur, int need,
                 std::vector<std::vector<int>>& out) {
  int pos = static_cast<int>(cur.size());
  if (pos == n) {
    if (need == 0) out.push_back(cur);
    return;
  }
  if (need == 0) return;
  for (int d = 0; d <= maxd; ++d) {
    cur.push_back(d);
    plane_trees(n, maxd, cur, need - 1 + d, out);
    cur.pop_back();
  }
}

std::vector<long> sorted_blocks(const CoreDecomposition& c) {
  std::vector<long> all = c.fragments;
  all.push_back(c.core);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

TEST_CASE("conditioned sum matches the exact walk") {
  std::vector<long double> p{0.5L, 0.2L, 0.3L};
  ConditionedSum cs(p, 6, 5);
  auto law = offspring_law(weights_from_list({frac(1, 2), frac(1, 5), frac(3, 10)}), Rational(1));
  CHECK(static_cast<double>(cs.probability()) ==
        doctest::Approx(to_double(walk_dp(law, 6, 5).value)).epsilon(1e-12));
  Rng rng = stream_rng(1, 0);
  for (int i = 0; i < 200; ++i) {
    auto x = cs.sample(rng);
    REQUIRE(x.size() == 6);
    int s = 0;
    for (int v : x) {
      CHECK(v >= 0);
      CHECK(v <= 2);
      s += v;
    }
    CHECK(s == 5);
  }
}

TEST_CASE("toy law gives the cherry") {
  TreeSampler ts({1, 0, 1}, 3);
  Rng rng = stream_rng(3, 0);
  for (int i = 0; i < 10; ++i) CHECK(ts.sample(rng).out == std::vector<int>{2, 0, 0});
  CHECK(ts.span() == 2);
  CHECK_THROWS_AS(TreeSampler({1, 0, 1}, 4), SamplerError);
  auto t = sample_sgt(weights_from_list({1, 0, 1}), Rational(1), 3, 9);
  CHECK(t.out == std::vector<int>{2, 0, 0});
}

TEST_CASE("uniform plane trees: chi-square against enumeration") {
  const int n = 5;
  std::vector<std::vector<int>> trees;
  std::vector<int> cur;
  plane_trees(n, 2, cur, 1, trees);
  REQUIRE(trees.size() == 9);  // Motzkin
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < trees.size(); ++i) index[trees[i]] = static_cast<int>(i);

  TreeSampler ts({1, 1, 1}, n);
  const int N = 18000;
  std::vector<double> obs(trees.size(), 0);
  // degree marginals by position of the unrotated exchangeable sequence
  std::vector<std::vector<double>> pos(n, std::vector<double>(3, 0));
  Rng rng = stream_rng(5, 0);
  for (int i = 0; i < N; ++i) {
    auto deg = ts.sample_degrees(rng);
    for (int k = 0; k < n; ++k) pos[k][deg[k]] += 1;
    auto t = rotate_to_tree(deg);
    REQUIRE(t.valid());
    REQUIRE(index.count(t.out));
    obs[index[t.out]] += 1;
  }
  std::vector<double> expected(trees.size(), static_cast<double>(N) / trees.size());
  CHECK(chi2_pvalue(obs, expected) > 0.001);
  // every sequence in {0,1,2}^n with sum n - 1 is equally likely
  std::vector<double> marg(3, 0);
  double total = 0;
  for (int code = 0; code < 243; ++code) {
    int c = code, s = 0, first = code % 3;
    for (int k = 0; k < n; ++k, c /= 3) s += c % 3;
    if (s != n - 1) continue;
    marg[first] += 1;
    total += 1;
  }
  for (int k = 0; k < n; ++k) {
    std::vector<double> e(3);
    for (int d = 0; d < 3; ++d) e[d] = N * marg[d] / total;
    CHECK(chi2_pvalue(pos[k], e) > 0.001);
  }
}

TEST_CASE("cycle lemma") {
  std::vector<int> deg{0, 0, 3, 0, 1, 0, 0, 2};  // sum 6, not n - 1
  CHECK_THROWS(rotate_to_tree(deg));
  std::vector<int> ok{0, 2, 0, 1, 0, 3, 0, 1};
  auto t = rotate_to_tree(ok);
  CHECK(t.valid());
  CHECK(t.size() == 8);
  CHECK(t.out[0] == 3);  // rotation starts after the first minimum of the path
  CHECK(t.max_degree() == 3);
}

TEST_CASE("decoration catalog matches the oracle catalog") {
  for (auto t : {Rational(1), Rational(2), frac(1, 3)}) {
    auto cat = make_v_catalog(t, 4);
    REQUIRE(cat.maps[0].size() == 1);
    CHECK(cat.maps[0][0].darts() == 0);
    CHECK(cat.prob[0][0] == 1);
    for (int j = 1; j <= 4; ++j) {
      auto mc = enumerate_rooted_planar_maps(j);
      std::map<std::vector<int>, Rational> want;
      Rational total = 0;
      for (auto& e : mc.maps)
        if (e.nonseparable) {
          Rational w = pow(t, e.map.vertices() - 1);
          want[e.map.canonical_code()] = w;
          total += w;
        }
      REQUIRE(cat.maps[j].size() == want.size());
      for (size_t i = 0; i < cat.maps[j].size(); ++i) {
        auto code = cat.maps[j][i].canonical_code();
        REQUIRE(want.count(code));
        CHECK(cat.prob[j][i] == want[code] / total);
      }
    }
  }
  auto c1 = make_v_catalog(Rational(1), 2);
  CHECK(c1.prob[1][0] == frac(1, 2));  // loop and link
}

TEST_CASE("decoration marginals") {
  auto cat = make_v_catalog(Rational(1), 4);
  PlaneTree star;
  star.out = {8, 0, 0, 0, 0, 0, 0, 0, 0};
  const int j = 4, N = 10000;
  std::map<std::vector<int>, int> idx;
  for (size_t i = 0; i < cat.maps[j].size(); ++i) idx[cat.maps[j][i].canonical_code()] = static_cast<int>(i);
  std::vector<double> obs(cat.maps[j].size(), 0), exp(cat.maps[j].size());
  for (size_t i = 0; i < exp.size(); ++i) exp[i] = N * to_double(cat.prob[j][i]);
  for (int s = 0; s < N; ++s) {
    auto et = decorate(star, cat, static_cast<uint64_t>(s));
    REQUIRE(et.deco[0].darts() == 8);
    for (int v = 1; v < star.size(); ++v) CHECK(et.deco[v].darts() == 0);
    obs[idx.at(et.deco[0].canonical_code())] += 1;
  }
  CHECK(chi2_pvalue(obs, exp) > 0.001);

  PlaneTree big;
  big.out.assign(13, 0);
  big.out[0] = 12;
  try {
    decorate(big, cat, 1);
    FAIL("expected the cap error");
  } catch (const SamplerError& e) {
    CHECK(std::string(e.what()).find("cap is 4") != std::string::npos);
  }
}

TEST_CASE("assembly is a bijection at small sizes") {
  EnrichedTree et;
  et.tree.out = {0};
  et.deco = {PlanarMap::vertex()};
  CHECK(assemble_map(et).darts() == 0);
  for (int n = 1; n <= 4; ++n) {
    auto all = assemble_all(n);
    std::set<std::vector<int>> codes;
    for (auto& m : all) {
      CHECK(m.edges() == n);
      CHECK(m.is_planar());
      codes.insert(m.canonical_code());
    }
    CHECK(all.size() == codes.size());
    CHECK(Integer(static_cast<long>(codes.size())) == tutte_count(n));
    std::set<std::vector<int>> oracle;
    for (auto& e : enumerate_rooted_planar_maps(n).maps) oracle.insert(e.map.canonical_code());
    CHECK(codes == oracle);
  }
}

TEST_CASE("sampled maps with three edges are uniform") {
  MapSampler ms(Rational(1), 3);
  auto cat = enumerate_rooted_planar_maps(3);
  std::map<std::vector<int>, int> idx;
  for (size_t i = 0; i < cat.maps.size(); ++i) idx[cat.maps[i].map.canonical_code()] = static_cast<int>(i);
  REQUIRE(idx.size() == 54);
  const int N = 27000;
  std::vector<double> obs(54, 0), exp(54, N / 54.0);
  for (int i = 0; i < N; ++i) {
    auto m = ms.sample(17, i);
    CHECK(m.edges() == 3);
    obs[idx.at(m.canonical_code())] += 1;
  }
  CHECK(chi2_pvalue(obs, exp) > 0.001);
}

TEST_CASE("tree-level V blocks equal the blocks of the assembled map") {
  const int n = 5;
  auto cat = make_v_catalog(Rational(1), n);
  auto h = vmap_law_halved(Rational(1), n + 1);
  std::vector<long double> w(2 * h.size() - 1, 0.0L);
  for (size_t j = 0; j < h.size(); ++j) w[2 * j] = h[j];
  TreeSampler ts(w, 2 * n + 1);
  for (int i = 0; i < 300; ++i) {
    Rng rng = stream_rng(23, i);
    auto tree = ts.sample(rng);
    auto m = assemble_map(decorate(tree, cat, 1000 + i));
    auto a = extract_cores(tree), b = extract_cores(m);
    CHECK(sorted_blocks(a) == sorted_blocks(b));
    CHECK(a.total() == n);
    CHECK(b.total() == n);
  }
  // single edge: the core is the map
  auto link = PlanarMap::from_sigma({0, 1});
  auto c = extract_cores(link);
  CHECK(c.core == 1);
  CHECK(c.fragments.empty());
  CHECK(c.unique);
}

TEST_CASE("Rbar table equals Jbar SEQ(Istar)") {
  CoreChain ch(Rational(1), 60);
  auto n = ch.rbar().size();
  std::vector<long double> den(n, 0.0L);
  den[0] = 1;
  for (size_t k = 1; k < n; ++k) den[k] = -ch.istar()[k];
  auto r = poly::mul(ch.jbar(), poly::inverse(den, n), n);
  for (size_t k = 0; k < n; ++k)
    CHECK(static_cast<double>(r[k]) == doctest::Approx(static_cast<double>(ch.rbar()[k])).epsilon(1e-10));
}

TEST_CASE("core sizes are ordered along the chain") {
  CoreChain ch(Rational(1), 500);
  auto s = sample_map_cores(Rational(1), 600, 200, 5, &ch);
  for (auto& c : s.sizes) {
    CHECK(c.V <= c.map);
    CHECK(c.Kbar <= c.V);
    CHECK(c.Rbar <= c.Kbar);
    CHECK(c.Obar <= c.Rbar);
    CHECK(c.Obar >= 0);
  }
}

TEST_CASE("number of Kbar pieces in the D-structure") {
  // D = Kbar SEQ(t Kbar): the small pieces form two independent geometric
  // runs around the giant, so pieces - 1 is negative binomial with r = 2
  auto mc = map_constants(Big(1));
  double q = static_cast<double>(mc.value("Kbar_at_rhoKbar"));
  CoreChain ch(Rational(1), 600);
  const int N = 5000;
  auto s = sample_map_cores(Rational(1), 1000, N, 77, &ch);
  std::vector<double> emp(8, 0), lim(8, 0);
  for (auto& c : s.sizes) emp[std::min(c.d_pieces - 1, 7)] += 1.0 / N;
  double acc = 0;
  for (int j = 0; j < 7; ++j) {
    lim[j] = (j + 1) * std::pow(q, j) * (1 - q) * (1 - q);
    acc += lim[j];
  }
  lim[7] = 1 - acc;
  double tv = 0;
  for (int j = 0; j < 8; ++j) tv += std::fabs(emp[j] - lim[j]) / 2;
  CHECK(tv < 0.05);
}

TEST_CASE("V-core share of the edges") {
  auto s = sample_map_cores(Rational(1), 2000, 2000, 11);
  double m = 0;
  for (int v : s.vcore) m += static_cast<double>(v) / 2000;
  m /= 2000;
  CHECK(m == doctest::Approx(1.0 / 3).epsilon(0.02 * 3));
}

TEST_CASE("seeded runs are reproducible") {
  CoreChain ch(Rational(1), 200);
  auto a = sample_map_cores(Rational(1), 300, 50, 99, &ch);
  auto b = sample_map_cores(Rational(1), 300, 50, 99, &ch);
  auto c = sample_map_cores(Rational(1), 300, 50, 100, &ch);
  CHECK(a.vcore == b.vcore);
  for (size_t i = 0; i < a.sizes.size(); ++i) {
    CHECK(a.sizes[i].Kbar == b.sizes[i].Kbar);
    CHECK(a.sizes[i].Obar == b.sizes[i].Obar);
  }
  CHECK(a.vcore != c.vcore);
  MapSampler ms(Rational(1), 4);
  CHECK(ms.sample(3, 8).to_json() == ms.sample(3, 8).to_json());
}

TEST_CASE("vmap law is the tilted V sequence") {
  auto h = vmap_law_halved(Rational(1), 30);
  auto ws = weight_sequence(ClassId::Vmap, Rational(1), 60);
  long double rk = 4.0L / 27;
  for (int j = 0; j < 30; ++j)
    CHECK(static_cast<double>(h[j]) ==
          doctest::Approx(static_cast<double>(to_long_double(ws.at(2 * j)) * std::pow(rk, j))).epsilon(1e-10));
}

TEST_CASE("serial and parallel kernels agree") {
  std::vector<double> a(500), b(400);
  for (size_t i = 0; i < a.size(); ++i) a[i] = 1.0 / (1 + i);
  for (size_t i = 0; i < b.size(); ++i) b[i] = std::pow(0.99, static_cast<double>(i));
  auto s = kernels::convolve_serial(a, b, 700);
  auto p = kernels::convolve(a, b, 700);
  REQUIRE(s.size() == p.size());
  for (size_t i = 0; i < s.size(); ++i) CHECK(s[i] == doctest::Approx(p[i]).epsilon(1e-13));
  std::vector<long double> c{0.5L, 0.3L, 0.2L};
  auto ps = kernels::power_serial(c, 37, 60);
  auto pp = kernels::power(c, 37, 60);
  for (size_t i = 0; i < ps.size(); ++i)
    CHECK(static_cast<double>(ps[i]) == doctest::Approx(static_cast<double>(pp[i])).epsilon(1e-13));
  CHECK(kernels::max_threads() >= 1);
}

TEST_CASE("census basics") {
  auto maps = assemble_all(3);
  for (auto& m : maps) {
    auto c0 = neighborhood_census(m, 0);
    CHECK(c0.size() == 1);
    double s = 0;
    for (auto& [k, v] : neighborhood_census(m, 1)) s += v;
    CHECK(s == doctest::Approx(1.0));
  }
  auto ex = exact_root_census(3, 1);
  double s = 0;
  for (auto& [k, v] : ex) s += v;
  CHECK(s == doctest::Approx(1.0));
  CHECK(tv_distance(ex, ex) == 0);
  CHECK(tv_distance(ex, root_census(maps, 1)) == doctest::Approx(0.0));
  auto mc = sampled_root_census(Rational(1), 3, 1, 20000, 4);
  CHECK(tv_distance(ex, mc) < 0.05);
}
