#include <cmath>

#include "pmap/constants.hpp"
#include "pmap/graph_numeric.hpp"

namespace pmap {

namespace {

Constant make(std::string name, Big v, Provenance p, double err = 0, std::string note = "") {
  return Constant{std::move(name), std::move(v), err, p, std::move(note)};
}

// a_n x^n at x = r for n < a.size()
std::vector<long double> at_point(const std::vector<long double>& a, long double r) {
  std::vector<long double> out(a.size());
  long double p = 1;
  for (size_t n = 0; n < a.size(); ++n) {
    out[n] = a[n] * p;
    p *= r;
  }
  return out;
}

}  // namespace

Big nu_C_bound(const GraphInputs& in) {
  // d^2B/dxdy(rho_B,1) with dB/dy(x,1) = x^2 (1 + N(x,1))/4 and
  // N = D0 + D2 (1 - x/rho_B) + ...
  return in.rho_B * (1 + in.D0) / 2 - in.D2 * in.rho_B / 4;
}

Big nu_C_bound_printed(const GraphInputs& in) {
  return in.rho_B * ((1 + in.D0) / 2 - 1) - in.D2 * in.rho_B / 4;
}

Constant alpha0_input() {
  return make("alpha0", Big("2.17"), Provenance::Paper, 0.005,
              "edges of the largest block per vertex; check target only");
}

ConstantsReport graph_constants(int order, const GraphInputs& in) {
  ConstantsReport r;
  auto g = graph_numeric(order);
  long double rho = to_ld(in.rho_B), cB = to_ld(in.c_B);
  int K = order;

  r.set(make("rho_B", in.rho_B, Provenance::Paper, 1e-5));
  r.set(make("c_B", in.c_B, Provenance::Paper, 1e-10));
  r.set(make("D0", in.D0, Provenance::Paper, 1e-5));
  r.set(make("D2", in.D2, Provenance::Paper, 1e-5));

  // rho_B and c_B from the coefficients, as consistency checks
  std::vector<long double> rb(K, 0), cb(K + 1, 0);
  for (int n = 2; n < K; ++n) rb[n] = g.B[n] / g.B[n + 1];
  for (int n = 2; n <= K; ++n) cb[n] = g.B[n] * std::pow(rho, n) * std::pow((long double)n, 3.5L);
  r.set(make("rho_B_ratio", Big(richardson(rb, K - 1, 4)), Provenance::Fitted));
  r.set(make("c_B_fit", Big(richardson(cb, K, 3)), Provenance::Fitted,
             0, "sensitive to the 4-digit rho_B input"));

  // D0 = N(rho_B,1), D2 = -rho_B dN/dx(rho_B,1)
  auto np = at_point(g.N1, rho);
  auto d0 = corrected_sum(np, 2.5L, 0);
  auto d1 = corrected_sum(np, 2.5L, 1);
  r.set(make("D0_series", Big(d0.value), Provenance::Derived, std::fabs((double)d0.tail)));
  r.set(make("D2_series", Big(-d1.value), Provenance::Derived, std::fabs((double)d1.tail)));

  r.set(make("nu_C_bound", nu_C_bound(in), Provenance::Derived, 1e-6,
             "rho_B (1+D0)/2 - D2 rho_B/4"));
  r.set(make("nu_C_bound_printed", nu_C_bound_printed(in), Provenance::Paper, 1e-6,
             "printed expression evaluated literally"));

  // dB/dx(rho_B,1) with the known tail (c_B/rho_B) sum_{m > K} m^{-5/2}
  long double bx = 0;
  for (size_t n = 0; n < g.Bx.size(); ++n) bx += g.Bx[n] * std::pow(rho, (long double)n);
  long double bx_tail = cB / rho * hurwitz_tail(2.5L, (long double)g.Bx.size() + 1);
  auto bx_fit = corrected_sum(at_point(g.Bx, rho), 2.5L, 0);
  long double Bx = bx + bx_tail;
  r.set(make("Bx_at_rhoB", Big(Bx), Provenance::Derived,
             std::fabs((double)(bx_fit.value - Bx)) + (double)bx_tail));
  long double phi = std::exp(Bx);
  r.set(make("phi_C_at_rhoB", Big(phi), Provenance::Derived,
             (double)(phi * std::fabs(bx_fit.value - Bx) + phi * bx_tail)));

  // nu_C = rho_B d^2B/dx^2(rho_B,1)
  long double nc = 0;
  for (int n = 2; n <= K; ++n) nc += n * (n - 1) * g.B[n] * std::pow(rho, (long double)(n - 1));
  long double nc_tail = cB / rho * hurwitz_tail(1.5L, K + 1);
  long double nuC = nc + nc_tail;
  r.set(make("nu_C", Big(nuC), Provenance::Derived, (double)nc_tail));
  if (!(nuC < to_ld(nu_C_bound(in)))) r.flags.push_back("nu_C exceeds its bound");
  if (!(nuC < 1)) throw ConstantsError("nu_C >= 1");

  long double rhoC = rho / phi;
  r.set(make("rho_C", Big(rhoC), Provenance::Derived, (double)(rhoC * 1e-4),
             "error dominated by the 4-digit rho_B input"));
  long double cC = cB * std::pow(1 - nuC, -2.5L);
  r.set(make("c_C", Big(cC), Provenance::Derived, (double)(cC * 1e-3)));

  long double cval = 0;
  for (size_t n = 0; n < g.C.size(); ++n) cval += g.C[n] * std::pow(rhoC, (long double)n);
  long double c_tail = cC * hurwitz_tail(3.5L, (long double)g.C.size());
  r.set(make("C_at_rhoC", Big(cval + c_tail), Provenance::Derived, (double)c_tail));
  r.set(make("c_G", Big(cC * std::exp(cval + c_tail)), Provenance::Derived, (double)(cC * 1e-3)));

  // coefficient-ratio extrapolation of C(x,1)
  int L = static_cast<int>(g.C.size()) - 2;
  std::vector<long double> rc(L + 1, 0);
  for (int n = 1; n <= L; ++n) rc[n] = g.C[n] / g.C[n + 1];
  long double rr = richardson(rc, L, 5);
  long double rr2 = richardson(rc, L, 4);
  r.set(make("rho_C_ratio", Big(rr), Provenance::Fitted, (double)std::fabs(rr - rr2)));
  r.set(make("check_rho_C", Big(std::fabs(rr - rhoC) / rhoC), Provenance::Derived));

  // mean edges per vertex of 2-connected graphs: [x^n]dB/dy / (n [x^n]B)
  std::vector<long double> kap(K + 1, 0);
  for (int n = 2; n <= K; ++n) kap[n] = g.By[n] / (n * g.B[n]);
  long double kappa = richardson(kap, K, 4);
  r.set(make("kappa", Big(kappa), Provenance::Fitted,
             (double)std::fabs(kappa - richardson(kap, K, 3))));
  r.set(alpha0_input());
  return r;
}

}  // namespace pmap
