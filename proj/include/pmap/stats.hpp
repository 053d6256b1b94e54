#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmap/laws.hpp"
#include "pmap/rational.hpp"

namespace pmap {

struct StatsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- map-Airy law: E[exp(-lambda X)] = exp(lambda^{3/2})

class AiryDensity {
 public:
  struct Options {
    double u_max = 16;      // e^{-u^{3/2}/sqrt 2} is below 1e-19 beyond
    int nodes = 20;         // Gauss-Legendre nodes per panel
    double grid_lo = -12, grid_hi = 80, grid_step = 0.02;
  };
  AiryDensity();
  explicit AiryDensity(Options o);

  double h(double x) const;         // quadrature on the inversion integral
  double cdf_direct(double x) const;  // Gil-Pelaez
  double cdf(double x) const;       // interpolated table, asymptotic tail beyond
  double quantile(double p) const;
  double h_asymptotic(double x) const;  // large-x expansion of the density
  double tail_asymptotic(double x) const;  // P(X > x), large x

  // integral of exp(-lambda x) h(x) over the table window plus both tails
  double laplace(double lambda) const;
  // integral of h over [a, b] by panelled quadrature
  double mass(double a, double b) const;
  // mass(-40, 40) plus the asymptotic right tail beyond 40
  double normalization() const;

 private:
  Options opt_;
  std::vector<long double> gx_, gw_;
  std::vector<double> u_, w_, ea_, a_;  // quadrature nodes on [0, u_max]
  std::vector<double> grid_h_, grid_F_;
};

// shared instance with default options, built on first use
const AiryDensity& airy_default();

// ---- exact identities

struct IdentityReport {
  Rational lhs, rhs;  // [z^n] Z and the walk side
  bool equal = false;
  std::string law;
  int n = 0;
  Rational tau;
};

// [z^n] Z with Z = z phi(Z), phi the stored weights (exact, coefficientwise)
Rational tree_count(const WeightSequence& ws, int n);

// [z^n]Z = (tau/phi(tau))^{-n} (tau/n) P(S_n = n-1) with phi truncated to ws
IdentityReport check_tree_identity(const WeightSequence& ws, const Rational& tau, int n);

struct BigJumpReport {
  bool applicable = true;
  Rational numerator;    // P(S_n = n-1)
  Rational point;        // P(xi = floor(n(1 - E xi)))
  int jump = 0;          // floor(n(1 - E xi))
  double ratio = 0;      // numerator / (n point)
  std::string note;
};

// exact walk probability against the single-jump approximation; the law's
// mean is given separately so that the untruncated mean can be used
BigJumpReport bigjump_ratio(const OffspringLaw& law, const Rational& mean, int n);

// the omega^Kbar law at t = 1, tau = rho_R = 1/5, phi(tau) = 27/20, up to k < n
OffspringLaw kbar_law_t1(int n);

// ---- local limit comparison

struct LlrReport {
  double ks = 1;
  double g = 0;        // scale used
  bool fitted = false;
  int samples = 0;
  double mu = 0;
  int n = 0;
};

enum class ScaleFit { KS, Median };

// s_i = (mu n - l_i)/(g n^{2/3}). Without g the scale is fitted: KS picks the
// g minimizing the distance, Median matches the sample median to that of X.
LlrReport llt_compare(const std::vector<long>& sizes, double mu, int n, const AiryDensity& h,
                      std::optional<double> g = std::nullopt, ScaleFit fit = ScaleFit::KS);

double fit_scale_ks(const std::vector<double>& dev, double scale, const AiryDensity& h);

double ks_distance(std::vector<double> s, const AiryDensity& h);

// a^{3/2} + b^{3/2} = c^{3/2} scaling of independent copies, checked by KS
double stability_ks(double a, double b, int count, uint64_t seed, const AiryDensity& h);

// ---- Gibbs fragments at the D-level

struct GibbsReport {
  int n = 0;
  std::vector<Rational> exact;  // P(rest = k), k < n/2, then the lumped rest
  std::vector<Rational> limit;  // same bins for the limit law
  double tv = 0;
  double bound_C = 0, bound_c = 0;  // P(rest >= k) <= C exp(-c k/(n-k))
  bool bound_ok = true;
};

GibbsReport gibbs_fragment_check(const Rational& t, int n);

// whether the exact law at r.n respects a bound fitted elsewhere
bool gibbs_bound_holds(const GibbsReport& r, double C, double c);

// degenerate case: a single admissible fragment size
GibbsReport gibbs_degenerate(int n);

// ---- histograms

struct Histogram {
  std::vector<double> edges;  // bins [edges[i], edges[i+1]), last bin closed
  std::vector<long> counts;
  long samples = 0;           // includes values outside the range
  long below = 0, above = 0;

  double density(size_t i) const;  // counts / (samples * width)
};

Histogram make_histogram(const std::vector<double>& values, double lo, double hi, int bins);

// ---- graph side

struct Alpha0Report {
  int n = 0, samples = 0;
  double estimate = 0, stderr_ = 0;
  double kappa = 0, nu_C = 0, rho_B = 0;
  double mean_block_vertices = 0;
};

// [x^k] SET(dB/dx) rho_B^k for k < n, with a fitted k^{-5/2} tail past the series order
std::vector<long double> w_law_at_rhoB(int n, int order, long double rho);

// edges of the largest block per vertex in random connected planar graphs
Alpha0Report alpha0_experiment(int n, int samples, uint64_t seed, int order = 40);

}  // namespace pmap
