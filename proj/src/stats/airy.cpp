#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "pmap/graph_numeric.hpp"
#include "pmap/stats.hpp"

namespace pmap {

namespace {

constexpr double kAlpha = 1.5;

double simpson(const std::vector<double>& f, double step, size_t lo, size_t hi) {
  // composite Simpson over [lo, hi] with a trapezoid step for odd counts
  double s = 0;
  size_t i = lo;
  for (; i + 2 <= hi; i += 2) s += step / 3 * (f[i] + 4 * f[i + 1] + f[i + 2]);
  if (i < hi) s += step / 2 * (f[i] + f[i + 1]);
  return s;
}

// Bromwich line Re(lambda) = c through the saddle of lambda x + lambda^{3/2}:
// h(x) = (1/2 pi i) int e^{lambda x + lambda^{3/2}} d lambda, and the same with
// an extra 1/lambda for the distribution function. For x < 0 the integrand has
// no cancellation on this line, unlike the Fourier line c = 0.
double bromwich(double x, bool cdf, const std::vector<long double>& gx, const std::vector<long double>& gw) {
  double c = std::max(4 * x * x / 9, 1.0);
  double c15 = std::pow(c, kAlpha);
  double width = std::min(0.25, 1.0 / (std::fabs(x) + 1));
  double s = 0;
  for (int p = 0;; ++p) {
    double panel = 0, peak = -1e300;
    for (size_t k = 0; k < gx.size(); ++k) {
      double v = (p + static_cast<double>(gx[k])) * width;
      std::complex<double> lam(c, v);
      std::complex<double> e = std::complex<double>(0, v * x) + std::pow(lam, kAlpha) - c15;
      peak = std::max(peak, e.real());
      std::complex<double> f = std::exp(e);
      if (cdf) f /= lam;
      panel += static_cast<double>(gw[k]) * width * f.real();
    }
    s += panel;
    if (peak < -46) break;
  }
  return std::exp(c * x + c15) * s / std::numbers::pi;
}

}  // namespace

AiryDensity::AiryDensity() : AiryDensity(Options{}) {}

AiryDensity::AiryDensity(Options o) : opt_(o) {
  if (!(o.grid_step > 0) || o.grid_hi <= o.grid_lo) throw StatsError("bad Airy grid");
  std::vector<long double>& gx = gx_;
  std::vector<long double>& gw = gw_;
  gauss_legendre01(o.nodes, gx, gw);
  // the phase a(u) + u x turns at rate about u^{1/2} + |x|; panels resolve
  // the fastest oscillation on the grid
  double xmax = std::max(std::fabs(o.grid_lo), std::fabs(o.grid_hi));
  double width = std::min(0.5, 2.0 / (xmax + 4));
  int panels = static_cast<int>(std::ceil(o.u_max / width));
  width = o.u_max / panels;
  for (int p = 0; p < panels; ++p)
    for (int k = 0; k < o.nodes; ++k) {
      double u = (p + static_cast<double>(gx[k])) * width;
      double a = std::pow(u, kAlpha) / std::numbers::sqrt2;
      u_.push_back(u);
      w_.push_back(static_cast<double>(gw[k]) * width);
      a_.push_back(a);
      ea_.push_back(std::exp(-a));
    }
  size_t n = static_cast<size_t>(std::llround((o.grid_hi - o.grid_lo) / o.grid_step)) + 1;
  grid_h_.resize(n);
  grid_F_.resize(n);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    double x = o.grid_lo + i * o.grid_step;
    grid_h_[i] = h(x);
    grid_F_[i] = cdf_direct(x);
  }
}

double AiryDensity::h(double x) const {
  if (x < 0) return bromwich(x, false, gx_, gw_);
  double s = 0;
  for (size_t i = 0; i < u_.size(); ++i) s += w_[i] * ea_[i] * std::cos(a_[i] + u_[i] * x);
  return s / std::numbers::pi;
}

double AiryDensity::cdf_direct(double x) const {
  if (x < 0) return bromwich(x, true, gx_, gw_);
  double s = 0;
  for (size_t i = 0; i < u_.size(); ++i) s += w_[i] * ea_[i] * std::sin(a_[i] + u_[i] * x) / u_[i];
  return 0.5 + s / std::numbers::pi;
}

double AiryDensity::h_asymptotic(double x) const {
  double s = 0, fact = 1;
  for (int k = 1; k <= 6; ++k) {
    fact *= k;
    s += ((k % 2) ? -1.0 : 1.0) / fact * std::tgamma(1 + kAlpha * k) * std::sin(std::numbers::pi * kAlpha * k) *
         std::pow(x, -1 - kAlpha * k);
  }
  return s / std::numbers::pi;
}

double AiryDensity::tail_asymptotic(double x) const {
  double s = 0, fact = 1;
  for (int k = 1; k <= 6; ++k) {
    fact *= k;
    s += ((k % 2) ? -1.0 : 1.0) / fact * std::tgamma(1 + kAlpha * k) * std::sin(std::numbers::pi * kAlpha * k) *
         std::pow(x, -kAlpha * k) / (kAlpha * k);
  }
  return s / std::numbers::pi;
}

double AiryDensity::cdf(double x) const {
  if (x <= opt_.grid_lo) return 0.0;
  if (x >= opt_.grid_hi) return 1.0 - tail_asymptotic(x);
  double pos = (x - opt_.grid_lo) / opt_.grid_step;
  size_t i = std::min(static_cast<size_t>(pos), grid_F_.size() - 2);
  double f = pos - i;
  return grid_F_[i] * (1 - f) + grid_F_[i + 1] * f;
}

double AiryDensity::quantile(double p) const {
  if (!(p > 0 && p < 1)) throw StatsError("quantile needs 0 < p < 1");
  if (p >= grid_F_.back()) {
    double lo = opt_.grid_hi, hi = opt_.grid_hi * 2;
    while (1 - tail_asymptotic(hi) < p) hi *= 2;
    for (int it = 0; it < 200; ++it) {
      double mid = (lo + hi) / 2;
      (1 - tail_asymptotic(mid) < p ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
  }
  auto it = std::lower_bound(grid_F_.begin(), grid_F_.end(), p);
  size_t i = it - grid_F_.begin();
  if (i == 0) return opt_.grid_lo;
  double f0 = grid_F_[i - 1], f1 = grid_F_[i];
  double frac = f1 > f0 ? (p - f0) / (f1 - f0) : 0;
  return opt_.grid_lo + (i - 1 + frac) * opt_.grid_step;
}

double AiryDensity::laplace(double lambda) const {
  std::vector<double> f(grid_h_.size());
  for (size_t i = 0; i < f.size(); ++i) f[i] = std::exp(-lambda * (opt_.grid_lo + i * opt_.grid_step)) * grid_h_[i];
  double s = simpson(f, opt_.grid_step, 0, f.size() - 1);
  // right tail: exp(-lambda x) times the asymptotic density, trapezoid on a coarse grid
  double x = opt_.grid_hi, step = 0.05;
  for (int k = 0; k < 4000; ++k, x += step)
    s += step * 0.5 * (std::exp(-lambda * x) * h_asymptotic(x) + std::exp(-lambda * (x + step)) * h_asymptotic(x + step));
  return s;
}

double AiryDensity::mass(double a, double b) const {
  if (b <= a) return 0;
  double lo = std::max(a, opt_.grid_lo), hi = std::min(b, opt_.grid_hi);
  double s = 0;
  if (hi > lo) {
    size_t i0 = static_cast<size_t>(std::ceil((lo - opt_.grid_lo) / opt_.grid_step - 1e-9));
    size_t i1 = static_cast<size_t>(std::floor((hi - opt_.grid_lo) / opt_.grid_step + 1e-9));
    s += simpson(grid_h_, opt_.grid_step, i0, i1);
    double x0 = opt_.grid_lo + i0 * opt_.grid_step, x1 = opt_.grid_lo + i1 * opt_.grid_step;
    s += (x0 - lo) * h((x0 + lo) / 2) + (hi - x1) * h((x1 + hi) / 2);
  }
  if (b > opt_.grid_hi) {
    double from = std::max(a, opt_.grid_hi);
    s += tail_asymptotic(from) - (std::isinf(b) ? 0.0 : tail_asymptotic(b));
  }
  return s;
}

double AiryDensity::normalization() const {
  return mass(-40, 40) + tail_asymptotic(40);
}

}  // namespace pmap

namespace pmap {

const AiryDensity& airy_default() {
  static const AiryDensity instance;
  return instance;
}

}  // namespace pmap
