#include <doctest.h>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "pmap/grammar.hpp"
#include "pmap/oracles.hpp"

using namespace pmap;

namespace {

bool boost_planar(const LabelledGraph& g) {
  using G = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  G bg(g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.has(i, j)) boost::add_edge(i, j, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

PlanarMap single(bool loop) {
  // loop: both darts at one vertex; link: two vertices
  return loop ? PlanarMap::from_sigma({1, 0}) : PlanarMap::from_sigma({0, 1});
}

}  // namespace

TEST_CASE("planar map basics") {
  auto v = PlanarMap::vertex();
  CHECK(v.vertices() == 1);
  CHECK(v.faces() == 1);
  CHECK(v.is_planar());
  auto loop = single(true), link = single(false);
  CHECK(loop.vertices() == 1);
  CHECK(loop.faces() == 2);
  CHECK(link.vertices() == 2);
  CHECK(link.faces() == 1);
  CHECK(loop.has_loop());
  CHECK(link.is_simple());
  CHECK(loop.is_nonseparable());
  CHECK(link.is_nonseparable());
  CHECK(loop.canonical_code() != link.canonical_code());
}

TEST_CASE("canonical code ignores dart labels") {
  auto cat = enumerate_rooted_planar_maps(3);
  for (const auto& e : cat.maps) {
    const auto& m = e.map;
    // relabel by a rotation of dart ids
    int n = m.darts();
    std::vector<int> perm(n);
    for (int d = 0; d < n; ++d) perm[d] = (d + 3) % n;
    PlanarMap r;
    r.sigma.resize(n);
    r.alpha.resize(n);
    for (int d = 0; d < n; ++d) {
      r.sigma[perm[d]] = perm[m.sigma[d]];
      r.alpha[perm[d]] = perm[m.alpha[d]];
    }
    r.root = perm[m.root];
    CHECK(r.canonical_code() == m.canonical_code());
  }
}

TEST_CASE("json round-trip and validation") {
  auto cat = enumerate_rooted_planar_maps(2);
  for (const auto& e : cat.maps) {
    auto back = PlanarMap::from_json(e.map.to_json());
    CHECK(back.canonical_code() == e.map.canonical_code());
  }
  CHECK_THROWS(PlanarMap::from_json(R"({"darts":2,"alpha":[0,1],"sigma":[0,1],"root":0})"));
  CHECK_THROWS(PlanarMap::from_json(R"({"darts":3,"alpha":[1,0],"sigma":[0,1],"root":0})"));
}

TEST_CASE("rooted map counts: exhaustive vs closed formula vs grammar") {
  const std::vector<long> expect{1, 2, 9, 54, 378, 2916, 24057, 208494, 1876446};
  for (int n = 0; n <= 8; ++n) CHECK(tutte_count(n) == expect[n]);
  auto mt = build_map_chain(Rational(1), 0, 4);
  const std::vector<int> nonsep{1, 2, 1, 2, 6};
  for (int n = 0; n <= 4; ++n) {
    auto cat = enumerate_rooted_planar_maps(n);
    CHECK(Integer(static_cast<long>(cat.count())) == tutte_count(n));
    CHECK(mt.M.get(0, 2 * n) == Rational(static_cast<long>(cat.count())));
    CHECK(cat.count_nonseparable() == static_cast<size_t>(nonsep[n]));
  }
  CHECK_THROWS_AS(enumerate_rooted_planar_maps(kMapEdgeCap + 1), OracleError);
}

TEST_CASE("non-separable counts match V") {
  auto mt = build_map_chain(Rational(1), 0, 4);
  for (int n = 0; n <= 4; ++n) {
    auto cat = enumerate_rooted_planar_maps(n);
    CHECK(mt.V.get(0, 2 * n) == Rational(static_cast<long>(cat.count_nonseparable())));
  }
}

TEST_CASE("3-connected maps") {
  // K4 has 6 edges, above the cap; nothing 3-connected below it
  for (int n = 0; n <= 4; ++n) CHECK(enumerate_rooted_planar_maps(n).count_3connected() == 0);
}

TEST_CASE("small graph classes") {
  LabelledGraph k2{2, 1u};
  CHECK(k2.connected());
  CHECK(k2.biconnected());
  LabelledGraph k5{5, (1u << 10) - 1};
  CHECK_FALSE(is_planar_graph(k5));
  LabelledGraph k33{6, 0};
  for (int a : {0, 1, 2})
    for (int b : {3, 4, 5}) k33.edges |= 1u << LabelledGraph::edge_index(a, b);
  CHECK_FALSE(is_planar_graph(k33));
  LabelledGraph k4{4, (1u << 6) - 1};
  CHECK(is_planar_graph(k4));
  CHECK(k4.triconnected());
  // K5 minus an edge is planar
  LabelledGraph k5e{5, k5.edges & ~(1u << LabelledGraph::edge_index(0, 1))};
  CHECK(is_planar_graph(k5e));
}

TEST_CASE("subdivision planarity agrees with Boyer-Myrvold") {
  for (int n = 1; n <= 6; ++n) {
    long total = 1L << (n * (n - 1) / 2);
    long step = n == 6 ? 7 : 1;
    for (long mask = 0; mask < total; mask += step) {
      LabelledGraph g{n, static_cast<uint32_t>(mask)};
      REQUIRE(is_planar_graph(g) == boost_planar(g));
    }
  }
}

TEST_CASE("only K5 is non-planar on five vertices") {
  auto gc = enumerate_labelled_planar_graphs(5);
  Integer np = 0;
  for (auto& x : gc.nonplanar) np += x;
  CHECK(np == 1);
  CHECK(gc.nonplanar[10] == 1);
}

TEST_CASE("labelled planar graph counts match G, C, B") {
  auto gt = build_graph_chain(4, 12);
  for (int n = 1; n <= 6; ++n) {
    auto gc = enumerate_labelled_planar_graphs(n);
    Integer nf = factorial(n);
    for (int e = 0; e < static_cast<int>(gc.all.size()); ++e) {
      INFO("n = " << n << ", e = " << e);
      CHECK(Rational(nf * gt.G.get(n, e)) == Rational(gc.all[e]));
      CHECK(Rational(nf * gt.C.get(n, e)) == Rational(gc.connected[e]));
      CHECK(Rational(nf * gt.B.get(n, e)) == Rational(gc.biconnected[e]));
    }
  }
  CHECK_THROWS_AS(enumerate_labelled_planar_graphs(7), OracleError);
}

TEST_CASE("walk dp small cases") {
  OffspringLaw det;
  det.p = {0, 1};
  for (int n = 1; n <= 5; ++n) CHECK(walk_dp(det, n, n).value == 1);
  auto coin = offspring_law(weights_from_list({1, 0, 1}), 1);
  CHECK(walk_dp(coin, 2, 2).value == frac(1, 2));
  CHECK(walk_dp(coin, 2, 1).value == 0);
  CHECK(walk_dp(coin, 0, 0).value == 1);
}

TEST_CASE("walk dp is associative under convolution") {
  auto law = offspring_law(weights_from_list({2, 1, 0, 3, 1}), frac(1, 2));
  int n1 = 4, n2 = 7, M = 30;
  auto a = walk_distribution(law, n1, M), b = walk_distribution(law, n2, M);
  auto c = walk_distribution(law, n1 + n2, M);
  for (int m = 0; m <= M; ++m) {
    Rational s = 0;
    for (int k = 0; k <= m; ++k) s += a[k] * b[m - k];
    CHECK(s == c[m]);
  }
}

TEST_CASE("walk dp reports the tail") {
  // a law with declared tail: exact below the support, bounded above it
  OffspringLaw law;
  law.p = {frac(1, 2), frac(1, 4), frac(1, 8)};
  law.tail = frac(1, 8);
  auto r = walk_dp(law, 3, 2);
  CHECK(r.exact);
  CHECK_THROWS_AS(walk_dp(law, 3, 4), OracleError);
  auto loose = walk_dp(law, 3, 4, Rational(100));
  CHECK_FALSE(loose.exact);
  CHECK(loose.tail_bound == 1 - pow(frac(7, 8), 3));
}
