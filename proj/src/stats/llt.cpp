#include <algorithm>
#include <cmath>

#include "pmap/rng.hpp"
#include "pmap/stats.hpp"

namespace pmap {

double ks_distance(std::vector<double> s, const AiryDensity& h) {
  if (s.empty()) throw StatsError("no samples");
  std::sort(s.begin(), s.end());
  double n = static_cast<double>(s.size()), d = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    double F = h.cdf(s[i]);
    d = std::max({d, std::fabs((i + 1) / n - F), std::fabs(i / n - F)});
  }
  return d;
}

namespace {

double median(std::vector<double> v) {
  size_t m = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + m, v.end());
  double hi = v[m];
  if (v.size() % 2) return hi;
  double lo = *std::max_element(v.begin(), v.begin() + m);
  return (lo + hi) / 2;
}

}  // namespace

double fit_scale_ks(const std::vector<double>& dev, double scale, const AiryDensity& h) {
  auto ks_at = [&](double lg) {
    std::vector<double> x;
    x.reserve(dev.size());
    for (double d : dev) x.push_back(d / (std::exp(lg) * scale));
    return ks_distance(std::move(x), h);
  };
  // coarse scan in log g, then golden section around the best point
  double best = 1e9, arg = 0;
  for (double lg = std::log(1e-3); lg < std::log(1e3); lg += 0.1) {
    double k = ks_at(lg);
    if (k < best) {
      best = k;
      arg = lg;
    }
  }
  double a = arg - 0.1, b = arg + 0.1;
  const double phi = (std::sqrt(5.0) - 1) / 2;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = ks_at(c), fd = ks_at(d);
  for (int it = 0; it < 40; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = ks_at(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = ks_at(d);
    }
  }
  return std::exp((a + b) / 2);
}

LlrReport llt_compare(const std::vector<long>& sizes, double mu, int n, const AiryDensity& h,
                      std::optional<double> g, ScaleFit fit) {
  constexpr size_t kMinSamples = 20;
  if (sizes.size() < kMinSamples) throw StatsError("llt_compare needs at least 20 samples");
  LlrReport r;
  r.samples = static_cast<int>(sizes.size());
  r.mu = mu;
  r.n = n;
  double scale = std::pow(static_cast<double>(n), 2.0 / 3.0);
  std::vector<double> dev;
  for (long l : sizes) dev.push_back(mu * n - static_cast<double>(l));
  if (std::all_of(dev.begin(), dev.end(), [&](double x) { return x == dev[0]; })) {
    r.ks = 1;  // degenerate input: no spread to compare
    r.g = g.value_or(0);
    return r;
  }
  if (g) {
    r.g = *g;
  } else if (fit == ScaleFit::Median) {
    r.g = median(dev) / (scale * h.quantile(0.5));
    r.fitted = true;
  } else {
    r.g = fit_scale_ks(dev, scale, h);
    r.fitted = true;
  }
  if (!(r.g > 0)) {
    r.ks = 1;
    return r;
  }
  for (double& x : dev) x /= r.g * scale;
  r.ks = ks_distance(dev, h);
  return r;
}

double stability_ks(double a, double b, int count, uint64_t seed, const AiryDensity& h) {
  if (count < 1) throw StatsError("need samples");
  double c = std::pow(std::pow(a, 1.5) + std::pow(b, 1.5), 2.0 / 3.0);
  std::vector<double> s(count);
  for (int i = 0; i < count; ++i) {
    Rng rng = stream_rng(seed, i);
    double u1 = uniform01(rng), u2 = uniform01(rng);
    u1 = std::clamp(u1, 1e-12, 1 - 1e-12);
    u2 = std::clamp(u2, 1e-12, 1 - 1e-12);
    s[i] = (a * h.quantile(u1) + b * h.quantile(u2)) / c;
  }
  return ks_distance(s, h);
}

}  // namespace pmap
