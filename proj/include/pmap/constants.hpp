#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <string>
#include <vector>

#include "pmap/rational.hpp"

namespace pmap {

using Big = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<60>>;

Big to_big(const Rational& q);
long double to_ld(const Big& b);

enum class Provenance { Paper, Derived, Fitted };
std::string provenance_name(Provenance p);

struct Constant {
  std::string name;
  Big value;
  double error = 0;  // absolute error estimate
  Provenance prov = Provenance::Derived;
  std::string note;
};

struct ConstantsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConstantsReport {
  std::optional<Big> t;
  std::vector<Constant> entries;
  std::vector<std::string> flags;

  bool has(const std::string& name) const;
  const Constant& get(const std::string& name) const;
  long double value(const std::string& name) const { return to_ld(get(name).value); }
  void set(Constant c);
  void merge(const ConstantsReport& other);
};

// ---- tail sums and extrapolation (tail.cpp)

// sum_{m >= M} m^{-s} by Euler-Maclaurin, s > 1, M >= 1
long double hurwitz_tail(long double s, long double M);

// a_k ~ c k^{-alpha} (1 + d/k) fitted on the last `window` entries
struct TailFit {
  long double c = 0, d = 0;
};
TailFit fit_power_tail(const std::vector<long double>& a, long double alpha, int window = 12);

// sum_k k^moment a_k over the stored entries plus the fitted tail beyond them
struct TailSum {
  long double value = 0;
  long double tail = 0;
  TailFit fit;
};
TailSum corrected_sum(const std::vector<long double>& a, long double alpha, int moment = 0);

// order-k Richardson extrapolation in 1/n of r_{n-k}, ..., r_n
long double richardson(const std::vector<long double>& r, int n, int order);

// ---- closed forms (closed_form.cpp)

// unique root u0 > 1/3 of t = (1+u)(3u-1)^3/(16u)
Big solve_u0(const Big& t);

// u0, rho_F, E0, E2, nu_Kbar, rho_R, Rbar_at_rhoR, rho_Kbar, rho_V, V_at_rhoV,
// rho_M, nu_M, nu_M_printed, nu_K
ConstantsReport map_constants(const Big& t);

// nu_K(t) from the closed form of R(t,y) at y = rho_R
Big nu_K_graphs(const Big& t);

// R(t,y) through the closed form and through the network grammar at x = t
long double r_closed_form(long double t, long double y);
long double r_series(long double t, long double y, int order = 120);

// closed-form vs truncated-series deltas, fields named check_*
ConstantsReport series_checks(const Big& t, int order = 2000);

// ---- graph side (graph_constants.cpp)

struct GraphInputs {
  Big rho_B{"0.03819"};
  Big c_B{"0.37042e-5"};
  Big D0{"1.09417"};
  Big D2{"-0.13749"};
};

// nu_C bound in the form that reproduces the printed value, and the
// printed form literally
Big nu_C_bound(const GraphInputs& in);
Big nu_C_bound_printed(const GraphInputs& in);

// rho_B, c_B, D0, D2 (inputs and series recomputations), nu_C, nu_C_bound,
// phi_C_at_rhoB, rho_C, c_C, C_at_rhoC, c_G, rho_C_ratio, kappa, alpha0
ConstantsReport graph_constants(int order = 40, const GraphInputs& in = {});

Constant alpha0_input();

std::string report_json(const ConstantsReport& r, int digits = 30);

}  // namespace pmap
