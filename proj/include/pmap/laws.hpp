#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmap/grammar.hpp"
#include "pmap/rational.hpp"

namespace pmap {

struct LawError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WeightSequence {
  std::vector<Rational> w;
  std::string source;
  Rational t = 1;

  size_t size() const { return w.size(); }
  Rational at(size_t k) const { return k < w.size() ? w[k] : Rational(0); }
};

WeightSequence weights_from_list(const std::vector<Rational>& w, std::string source = "list");

// omega^M_k = [z^k] V(t,z), omega^Kbar_k = [y^k] Rbar(t,y),
// omega^P_k = [x^k] W(x) with W = SET(dB/dx(x,1)) (t must be 1).
WeightSequence weight_sequence(ClassId c, const Rational& t, int max_k);

// omega'_j = omega_{2j}; the tree with 2n+1 vertices and even out-degrees
// becomes a sum condition over n on the halved lattice
WeightSequence halve(const WeightSequence& ws);

// throws LawError unless omega_0 > 0 and some omega_k > 0 with k >= 2
void check_admissible(const WeightSequence& ws);

struct OffspringLaw {
  std::vector<Rational> p;
  Rational tail = 0;  // mass beyond the stored support
  Rational mean = 0;  // over the stored support
  Rational tau = 1;
  std::string source;

  Rational at(size_t k) const { return k < p.size() ? p[k] : Rational(0); }
  size_t support() const { return p.size(); }
};

// p_k = omega_k tau^k / phi(tau). With phi_tau the tail is 1 - sum p_k and
// must not exceed max_tail; without it phi is the truncated sum and tail = 0.
OffspringLaw offspring_law(const WeightSequence& ws, const Rational& tau,
                           std::optional<Rational> phi_tau = std::nullopt,
                           const Rational& max_tail = Rational(1, 1000));

struct NumericLaw {
  std::vector<double> p;
  double tail = 0;
  double mean = 0;
  std::string source;

  double at(size_t k) const { return k < p.size() ? p[k] : 0.0; }
};

NumericLaw to_numeric(const OffspringLaw& law);
// normalizes nonnegative weights; tail is carried separately
NumericLaw numeric_law(std::vector<long double> weights, long double tail, std::string source);

}  // namespace pmap
