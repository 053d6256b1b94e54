#include <cmath>
#include <sstream>

#include "pmap/constants.hpp"
#include "pmap/map_online.hpp"
#include "pmap/online.hpp"

namespace pmap {

namespace {

using LVec = std::vector<long double>;

Constant make(std::string name, Big v, Provenance p = Provenance::Derived, double err = 0,
              std::string note = "") {
  return Constant{std::move(name), std::move(v), err, p, std::move(note)};
}

Big deft(const Big& u) { return (1 + u) * pow(3 * u - 1, 3) / (16 * u); }

}  // namespace

Big to_big(const Rational& q) {
  return Big(q.get_num().get_str()) / Big(q.get_den().get_str());
}

long double to_ld(const Big& b) { return b.convert_to<long double>(); }

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Paper: return "paper";
    case Provenance::Derived: return "derived";
    case Provenance::Fitted: return "fitted";
  }
  return "derived";
}

bool ConstantsReport::has(const std::string& name) const {
  for (auto& e : entries)
    if (e.name == name) return true;
  return false;
}

const Constant& ConstantsReport::get(const std::string& name) const {
  for (auto& e : entries)
    if (e.name == name) return e;
  throw ConstantsError("no constant named " + name);
}

void ConstantsReport::set(Constant c) {
  for (auto& e : entries)
    if (e.name == c.name) {
      e = std::move(c);
      return;
    }
  entries.push_back(std::move(c));
}

void ConstantsReport::merge(const ConstantsReport& other) {
  for (auto& e : other.entries) set(e);
  for (auto& f : other.flags) flags.push_back(f);
}

Big solve_u0(const Big& t) {
  if (t <= 0) throw ConstantsError("t must be positive");
  Big lo = Big(1) / 3, hi = 1;
  while (deft(hi) < t) hi *= 2;
  for (int i = 0; i < 240; ++i) {
    Big mid = (lo + hi) / 2;
    if (deft(mid) < t)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

ConstantsReport map_constants(const Big& t) {
  ConstantsReport r;
  r.t = t;
  Big u = solve_u0(t);
  if (u <= Big(1) / 3) throw ConstantsError("u0 must exceed 1/3");
  Big rhoF = 1 / ((u + 1) * (3 * u - 1));
  Big E0 = 16 * (3 * u - 1) / (27 * u * (u + 1));
  Big E2 = 16 * (3 * u * u + 1) * (3 * u - 1) / (81 * u * u * (u + 1) * (u + 1));
  Big nuKbar = (21 * u * u + 6 * u + 1) / (48 * u * u);
  Big nuKbar_e = E2 / E0 * (1 + t * rhoF) - t * rhoF;
  if (abs(nuKbar - nuKbar_e) > Big("1e-40")) throw ConstantsError("nu_Kbar forms disagree");
  Big rhoR = rhoF / (1 + t * rhoF);
  Big Rbar = (1 - t * rhoR) / E0;
  Big rhoKbar = rhoF * E0;
  Big rhoV = sqrt(rhoKbar);
  // V(w) = 1 + w + t w (1 + D(w)), D(rho_Kbar) = rho_F,
  // rho_Kbar D'(rho_Kbar) = rho_F (1 + t rho_F)/(1 - nu_Kbar)
  Big Vr = 1 + rhoKbar * (1 + t + t * rhoF);
  Big wDp = rhoF * (1 + t * rhoF) / (1 - nuKbar);
  Big nuM = 2 * (rhoKbar * (1 + t + t * rhoF) + t * rhoKbar * wDp) / Vr;
  Big nuM_printed = 2 * (1 + 19 * u + 51 * u * u + 225 * u * u * u) /
                    ((1 + u) * pow(1 + 3 * u, 3) * (1 + 9 * u));
  Big rhoM = rhoV / Vr;

  r.set(make("u0", u, Provenance::Derived, 1e-50));
  r.set(make("rho_F", rhoF, Provenance::Derived, 1e-50));
  r.set(make("E0", E0, Provenance::Derived, 1e-50));
  r.set(make("E2", E2, Provenance::Derived, 1e-50));
  r.set(make("nu_Kbar", nuKbar, Provenance::Derived, 1e-50));
  r.set(make("rho_R", rhoR, Provenance::Derived, 1e-50));
  r.set(make("Rbar_at_rhoR", Rbar, Provenance::Derived, 1e-50));
  r.set(make("rho_Kbar", rhoKbar, Provenance::Derived, 1e-50));
  r.set(make("Kbar_at_rhoKbar", rhoR, Provenance::Derived, 1e-50));
  r.set(make("D_at_rhoKbar", rhoF, Provenance::Derived, 1e-50));
  r.set(make("rho_V", rhoV, Provenance::Derived, 1e-50));
  r.set(make("V_at_rhoV", Vr, Provenance::Derived, 1e-50));
  r.set(make("rho_M", rhoM, Provenance::Derived, 1e-50));
  r.set(make("nu_M", nuM, Provenance::Derived, 1e-50,
             "from V = 1 + w + t w (1 + D); matches the series mean"));
  r.set(make("nu_M_printed", nuM_printed, Provenance::Paper, 1e-50,
             "printed rational expression in u0"));
  Big nuK = nu_K_graphs(t);
  r.set(make("nu_K", nuK, Provenance::Derived, 1e-40));

  for (const char* k : {"nu_Kbar", "nu_M", "nu_K"}) {
    Big v = r.get(k).value;
    if (!(v > 0 && v < 1)) throw ConstantsError(std::string(k) + " outside (0,1)");
  }
  return r;
}

Big nu_K_graphs(const Big& t) {
  Big u = solve_u0(t);
  Big rhoF = 1 / ((u + 1) * (3 * u - 1));
  Big E0 = 16 * (3 * u - 1) / (27 * u * (u + 1));
  Big E2 = 16 * (3 * u * u + 1) * (3 * u - 1) / (81 * u * u * (u + 1) * (u + 1));
  Big rhoR = rhoF / (1 + t * rhoF);
  Big w = rhoF;
  // Fbar01(w) = w (1/(1+tw) + 1/(1+w) - 1 - E(w)), E' = -E2/rho_F at the radius
  Big inner = 1 / (1 + t * w) + 1 / (1 + w) - 1 - E0;
  Big fbar = w * inner;
  Big fbar_d = inner + w * (-t / pow(1 + t * w, 2) - 1 / pow(1 + w, 2) + E2 / rhoF);
  Big y = rhoR;
  Big om = 1 - t * y;
  Big F = fbar / 2 + t * y * y / om;
  Big Fp = (fbar_d / 2) / (om * om) + t * y * (2 - t * y) / (om * om);
  Big eF = exp(F);
  Big dlog = Fp + 1 / y - t / om - (1 - t + eF * (t - Fp * om)) / (1 + y * (1 - t) - eF * om);
  return rhoR * dlog;
}

long double r_closed_form(long double t, long double y) {
  long double w = y / (1 - t * y);
  long double u = 0, v = 0;
  for (int i = 0; i < 100000; ++i) {
    long double nu = t * w * (1 + v) * (1 + v);
    long double nv = w * (1 + u) * (1 + u);
    bool done = std::fabs(nu - u) < 1e-19L && std::fabs(nv - v) < 1e-19L;
    u = nu;
    v = nv;
    if (done) break;
  }
  long double S = 1 + u + v;
  long double E = (1 + u) * (1 + u) * (1 + v) * (1 + v) / (S * S * S);
  long double fbar = w * (1 / (1 + t * w) + 1 / (1 + w) - 1 - E);
  long double F = fbar / 2 + t * y * y / (1 - t * y);
  long double eF = std::exp(F);
  return eF * y * (1 - t * y) / (1 + y - t * y - eF * (1 - t * y));
}

namespace {

// R(t, s Y) through O = F01(t, y/(1-ty)), L = t y^2/(1-ty),
// I* = (O + SET>=2(O+L))/y, J = SET(O+L), R = J SEQ(I*)
LVec r_grammar_scaled(long double t, long double s, size_t n) {
  size_t m = n + 2;
  auto fb = online::f01_bar<long double>(t, 1.0L, m);
  LVec f(m);
  for (size_t k = 0; k < m; ++k) f[k] = fb[k] / 2;
  LVec w(m, 0), l(m, 0);
  long double p = s;
  for (size_t k = 1; k < m; ++k) {
    w[k] = p;
    if (k >= 2) l[k] = t * w[k - 1] * s;
    p *= t * s;
  }
  LVec o = poly::compose(f, w, m);
  LVec ol(m);
  for (size_t k = 0; k < m; ++k) ol[k] = o[k] + l[k];
  LVec e = poly::exp(ol, m);
  LVec istar(n, 0);
  // (O + e - 1 - ol)/y in the scaled variable: divide by s and shift
  for (size_t k = 0; k < n; ++k) {
    long double c = o[k + 1] + e[k + 1] - ol[k + 1];
    istar[k] = c / s;
  }
  LVec den(n);
  for (size_t k = 0; k < n; ++k) den[k] = (k == 0 ? 1 : 0) - istar[k];
  LVec j(e.begin(), e.begin() + n);
  return poly::mul(j, poly::inverse(den, n), n);
}

}  // namespace

long double r_series(long double t, long double y, int order) {
  auto r = r_grammar_scaled(t, 1.0L, static_cast<size_t>(order));
  return poly::evaluate(r, y);
}

ConstantsReport series_checks(const Big& t, int order) {
  ConstantsReport mc = map_constants(t);
  ConstantsReport r;
  r.t = t;
  long double tl = to_ld(t);
  size_t n = static_cast<size_t>(order);
  long double rhoR = mc.value("rho_R"), rhoK = mc.value("rho_Kbar");

  // Rbar at rho_R and nu_Kbar
  auto rb = online::rbar_closed<long double>(tl, rhoR, n);
  auto s0 = corrected_sum(rb, 2.5L, 0), s1 = corrected_sum(rb, 2.5L, 1);
  r.set(make("series_Rbar_at_rhoR", Big(s0.value), Provenance::Derived, std::fabs((double)s0.tail)));
  r.set(make("series_nu_Kbar", Big(s1.value / s0.value), Provenance::Derived,
             std::fabs((double)(s1.tail / s0.value))));

  // V at rho_V and nu_M on the halved lattice
  auto d = online::d_system<long double>(tl, rhoK, n);
  auto v = online::v_in_w(d.d, tl, rhoK);
  auto v0 = corrected_sum(v, 2.5L, 0), v1 = corrected_sum(v, 2.5L, 1);
  r.set(make("series_V_at_rhoV", Big(v0.value), Provenance::Derived, std::fabs((double)v0.tail)));
  r.set(make("series_nu_M", Big(2 * v1.value / v0.value), Provenance::Derived,
             std::fabs((double)(2 * v1.tail / v0.value))));

  // nu_K from the network grammar at x = t, scaled to the radius
  size_t ng = std::min<size_t>(n, 600);
  auto rr = r_grammar_scaled(tl, rhoR, ng);
  auto g0 = corrected_sum(rr, 2.5L, 0), g1 = corrected_sum(rr, 2.5L, 1);
  r.set(make("series_nu_K", Big(g1.value / g0.value), Provenance::Derived,
             std::fabs((double)(g1.tail / g0.value))));

  // ratio tests: Kbar and M (through Y = w M^2 = w f(Y)^2, Lagrange)
  size_t nr = std::min<size_t>(n, 400);
  auto kb = online::kbar_from_d(online::d_system<long double>(tl, rhoK, nr).d, tl);
  std::vector<long double> ratio(nr - 1);
  for (size_t k = 1; k + 1 < nr; ++k) ratio[k] = kb[k] / kb[k + 1];
  r.set(make("ratio_rho_Kbar", Big(rhoK * richardson(ratio, static_cast<int>(nr) - 2, 3)),
             Provenance::Fitted));

  size_t nm = std::min<size_t>(n, 160);
  auto dm = online::d_system<long double>(tl, rhoK, nm + 2);
  auto f = online::v_in_w(dm.d, tl, rhoK);  // f(rho_Kbar w)
  std::vector<long double> yc(nm + 1, 0);
  for (size_t k = 1; k <= nm; ++k) {
    auto pw = poly::power(f, static_cast<long>(2 * k), k);
    yc[k] = pw[k - 1] / k;
  }
  // yc are coefficients of Y(rho_Kbar w) scaled by rho_Kbar^{-1} per order
  std::vector<long double> ry(nm, 0);
  for (size_t k = 1; k + 1 <= nm; ++k) ry[k] = yc[k] / yc[k + 1];
  long double est = richardson(ry, static_cast<int>(nm) - 1, 3) * rhoK;
  r.set(make("ratio_rho_M", Big(std::sqrt(est)), Provenance::Fitted));

  auto diff = [&](const std::string& a, const std::string& b) {
    return make("check_" + a, abs(mc.get(a).value - r.get(b).value), Provenance::Derived);
  };
  r.set(diff("Rbar_at_rhoR", "series_Rbar_at_rhoR"));
  r.set(diff("nu_Kbar", "series_nu_Kbar"));
  r.set(diff("V_at_rhoV", "series_V_at_rhoV"));
  r.set(diff("nu_M", "series_nu_M"));
  r.set(diff("nu_K", "series_nu_K"));
  r.set(make("check_rho_Kbar", abs(mc.get("rho_Kbar").value - r.get("ratio_rho_Kbar").value) /
                                   mc.get("rho_Kbar").value));
  r.set(make("check_rho_M",
             abs(mc.get("rho_M").value - r.get("ratio_rho_M").value) / mc.get("rho_M").value));
  return r;
}

std::string report_json(const ConstantsReport& r, int digits) {
  std::ostringstream os;
  os << "{";
  if (r.t) os << "\"t\": \"" << r.t->str(digits) << "\", ";
  os << "\"constants\": {";
  bool first = true;
  for (auto& e : r.entries) {
    if (!first) os << ", ";
    first = false;
    os << "\"" << e.name << "\": {\"value\": \"" << e.value.str(digits)
       << "\", \"error\": " << e.error << ", \"provenance\": \"" << provenance_name(e.prov) << "\"";
    if (!e.note.empty()) os << ", \"note\": \"" << e.note << "\"";
    os << "}";
  }
  os << "}, \"flags\": [";
  for (size_t i = 0; i < r.flags.size(); ++i) os << (i ? ", " : "") << "\"" << r.flags[i] << "\"";
  os << "]}";
  return os.str();
}

}  // namespace pmap
