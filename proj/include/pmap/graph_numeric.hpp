#pragma once

#include <vector>

namespace pmap {

// Univariate graph-side series at y = 1 in long double, EGF-stored in x.
struct GraphNumeric {
  int order = 0;
  std::vector<long double> N1;      // N(x,1)
  std::vector<long double> B, Bx;   // B(x,1) and dB/dx(x,1)
  std::vector<long double> By;      // dB/dy(x,1) = x^2 (1 + N(x,1))/4
  std::vector<long double> A, C, G; // A = x dC/dx
  std::vector<long double> W;       // SET(dB/dx(x,1))
};

// N(x, y) for a fixed real y up to x^order
std::vector<long double> network_series_at(long double y, int order);

// B(x,1) is integrated over y in [0,1] by Gauss-Legendre; [x^a] of the
// integrand is a polynomial in y of degree < 3a, so the rule is exact.
GraphNumeric graph_numeric(int order);

// Gauss-Legendre nodes and weights on [0,1]
void gauss_legendre01(int m, std::vector<long double>& nodes, std::vector<long double>& weights);

}  // namespace pmap
