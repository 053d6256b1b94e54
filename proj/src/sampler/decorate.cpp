#include <functional>

#include "pmap/oracles.hpp"
#include "pmap/sampler.hpp"

namespace pmap {

DecorationCatalog make_v_catalog(const Rational& t, int cap) {
  if (cap > kMapEdgeCap) throw SamplerError("decoration cap exceeds the map enumeration cap");
  DecorationCatalog cat;
  cat.t = t;
  cat.cap = cap;
  for (int j = 0; j <= cap; ++j) {
    std::vector<PlanarMap> ms;
    std::vector<Rational> w;
    for (const auto& e : enumerate_rooted_planar_maps(j).maps) {
      if (!e.nonseparable) continue;
      ms.push_back(e.map);
      w.push_back(pow(t, e.map.vertices() - 1));
    }
    Rational tot = 0;
    for (auto& x : w) tot += x;
    std::vector<double> cdf;
    std::vector<Rational> prob;
    Rational acc = 0;
    for (auto& x : w) {
      prob.push_back(Rational(x / tot));
      acc += x / tot;
      cdf.push_back(to_double(acc));
    }
    cat.maps.push_back(std::move(ms));
    cat.cdf.push_back(std::move(cdf));
    cat.prob.push_back(std::move(prob));
  }
  return cat;
}

EnrichedTree decorate(const PlaneTree& tree, const DecorationCatalog& cat, uint64_t seed) {
  EnrichedTree et;
  et.tree = tree;
  et.deco.resize(tree.size());
  for (int i = 0; i < tree.size(); ++i) {
    int d = tree.out[i];
    if (d % 2) throw SamplerError("V decorations need an even out-degree");
    int j = d / 2;
    if (j > cat.cap)
      throw SamplerError("out-degree " + std::to_string(d) + " needs a decoration with " +
                         std::to_string(j) + " edges; catalog cap is " + std::to_string(cat.cap));
    const auto& cdf = cat.cdf[j];
    size_t pick = 0;
    if (cdf.size() > 1) {
      Rng rng = stream_rng(seed, static_cast<uint64_t>(i));
      double u = uniform01(rng);
      pick = std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
      if (pick >= cdf.size()) pick = cdf.size() - 1;
    }
    et.deco[i] = cat.maps[j][pick];
  }
  return et;
}

PlanarMap assemble_map(const EnrichedTree& et) {
  const auto& tree = et.tree;
  if (static_cast<int>(et.deco.size()) != tree.size()) throw SamplerError("decoration count mismatch");
  for (int i = 0; i < tree.size(); ++i)
    if (et.deco[i].darts() != tree.out[i])
      throw SamplerError("decoration at vertex " + std::to_string(i) + " has the wrong size");
  auto ch = tree.children();
  PlanarMap m;
  std::vector<int> sinv;

  std::function<int(int)> build = [&](int v) -> int {
    const PlanarMap& b = et.deco[v];
    int k = b.darts();
    if (k == 0) return -1;
    int o = m.darts();
    m.sigma.resize(o + k);
    m.alpha.resize(o + k);
    sinv.resize(o + k);
    for (int d = 0; d < k; ++d) {
      m.sigma[o + d] = o + b.sigma[d];
      m.alpha[o + d] = o + b.alpha[d];
      sinv[o + b.sigma[d]] = o + d;
    }
    for (int d = 0; d < k; ++d) {
      int r = build(ch[v][d]);
      if (r < 0) continue;
      // corner of dart o+d: prev -> r ... last -> o+d
      int prev = sinv[o + d], last = sinv[r];
      m.sigma[prev] = r;
      sinv[r] = prev;
      m.sigma[last] = o + d;
      sinv[o + d] = last;
    }
    return o + b.root;
  };
  int r = build(0);
  m.root = r < 0 ? 0 : r;
  return m;
}

std::vector<PlanarMap> assemble_all(int edges) {
  auto cat = make_v_catalog(Rational(1), std::min(edges, kMapEdgeCap));
  int n = 2 * edges + 1;
  std::vector<PlanarMap> out;
  std::vector<int> word;
  // Lukasiewicz words with even letters
  std::function<void(long)> trees = [&](long need) {
    int pos = static_cast<int>(word.size());
    if (need == 0) {
      if (pos != n) return;
      PlaneTree t{word};
      EnrichedTree et{t, std::vector<PlanarMap>(n)};
      std::function<void(int)> choose = [&](int i) {
        if (i == n) {
          out.push_back(assemble_map(et));
          return;
        }
        for (const auto& b : cat.maps[t.out[i] / 2]) {
          et.deco[i] = b;
          choose(i + 1);
        }
      };
      choose(0);
      return;
    }
    if (pos == n) return;
    for (int d = 0; need - 1 + d <= n - pos - 1; d += 2) {
      word.push_back(d);
      trees(need - 1 + d);
      word.pop_back();
    }
  };
  trees(1);
  return out;
}

MapSampler::MapSampler(const Rational& t, int edges, int cap)
    : edges_(edges), cat_(make_v_catalog(t, cap)) {
  if (edges < 0) throw SamplerError("negative edge count");
  auto h = vmap_law_halved(t, edges + 1);
  std::vector<long double> w(2 * h.size() - 1, 0.0L);
  for (size_t j = 0; j < h.size(); ++j) w[2 * j] = h[j];
  trees_ = std::make_unique<TreeSampler>(std::move(w), 2 * edges + 1);
}

PlanarMap MapSampler::sample(uint64_t seed, uint64_t index) const {
  Rng rng = stream_rng(seed, 2 * index);
  PlaneTree t = trees_->sample(rng);
  Rng drng = stream_rng(seed, 2 * index + 1);
  uint64_t dseed = drng();
  return assemble_map(decorate(t, cat_, dseed));
}

}  // namespace pmap
