#include <algorithm>
#include <cmath>
#include <random>

#include "pmap/constants.hpp"
#include "pmap/graph_numeric.hpp"
#include "pmap/sampler.hpp"
#include "pmap/stats.hpp"

namespace pmap {

double Histogram::density(size_t i) const {
  double w = edges.at(i + 1) - edges.at(i);
  return samples ? static_cast<double>(counts.at(i)) / (static_cast<double>(samples) * w) : 0.0;
}

Histogram make_histogram(const std::vector<double>& values, double lo, double hi, int bins) {
  if (bins < 1 || !(hi > lo)) throw StatsError("histogram needs bins >= 1 and hi > lo");
  Histogram h;
  h.edges.resize(bins + 1);
  for (int i = 0; i <= bins; ++i) h.edges[i] = lo + (hi - lo) * i / bins;
  h.counts.assign(bins, 0);
  for (double v : values) {
    ++h.samples;
    if (v < lo) {
      ++h.below;
    } else if (v > hi) {
      ++h.above;
    } else {
      int b = std::min(bins - 1, static_cast<int>((v - lo) / (hi - lo) * bins));
      ++h.counts[b];
    }
  }
  return h;
}

std::vector<long double> w_law_at_rhoB(int n, int order, long double rho) {
  auto g = graph_numeric(order);
  std::vector<long double> w(n, 0);
  long double p = 1;
  int K = static_cast<int>(g.W.size());
  for (int k = 0; k < K && k < n; ++k) {
    w[k] = g.W[k] * p;
    p *= rho;
  }
  // [x^k]SET(B') rho_B^k ~ c k^{-5/2} beyond the computed range
  std::vector<long double> head(w.begin(), w.begin() + std::min(K, n));
  auto fit = fit_power_tail(head, 2.5L);
  for (int k = K; k < n; ++k)
    w[k] = fit.c * std::pow(static_cast<long double>(k), -2.5L) * (1 + fit.d / k);
  return w;
}

Alpha0Report alpha0_experiment(int n, int samples, uint64_t seed, int order) {
  if (n < 10 || samples < 1) throw StatsError("alpha0_experiment needs n >= 10 and samples >= 1");
  Alpha0Report r;
  r.n = n;
  r.samples = samples;
  auto gc = graph_constants(order);
  r.kappa = static_cast<double>(gc.value("kappa"));
  r.nu_C = static_cast<double>(gc.value("nu_C"));
  r.rho_B = static_cast<double>(gc.value("rho_B"));

  auto w = w_law_at_rhoB(n, order, gc.value("rho_B"));
  TreeSampler ts(w, n);
  // the other blocks at the giant vertex follow the same Boltzmann law
  std::discrete_distribution<int> rest(w.begin(), w.end());

  std::vector<double> est(samples), verts(samples);
  for (int i = 0; i < samples; ++i) {
    Rng rng = stream_rng(seed, static_cast<uint64_t>(i));
    auto deg = ts.sample_degrees(rng);
    int delta = *std::max_element(deg.begin(), deg.end());
    int v = std::max(2, delta - rest(rng) + 1);
    verts[i] = v;
    est[i] = r.kappa * v / n;
  }
  double m = 0, s2 = 0, mv = 0;
  for (int i = 0; i < samples; ++i) {
    m += est[i];
    mv += verts[i];
  }
  m /= samples;
  for (double e : est) s2 += (e - m) * (e - m);
  r.estimate = m;
  r.stderr_ = samples > 1 ? std::sqrt(s2 / (samples - 1) / samples) : 0;
  r.mean_block_vertices = mv / samples;
  return r;
}

}  // namespace pmap
