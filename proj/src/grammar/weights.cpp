#include "pmap/laws.hpp"

#include "pmap/map_online.hpp"

namespace pmap {

WeightSequence weights_from_list(const std::vector<Rational>& w, std::string source) {
  WeightSequence ws;
  ws.w = w;
  for (auto& q : ws.w) q.canonicalize();
  ws.source = std::move(source);
  return ws;
}

namespace {

WeightSequence w_from_graphs(int max_k) {
  // dB/dx(x,1) to x-order max_k needs B to max_k+1, i.e. the chain at max_k-1
  int mx = std::max(max_k - 1, 0);
  auto g = build_graph_chain(mx, 3 * mx + 3);
  Series b1(max_k + 1, 0, Convention::LabelledX);
  for (int a = 0; a <= max_k + 1; ++a) {
    Rational s = 0;
    for (int m = 0; m <= g.B.max_y(); ++m) s += g.B.get(a, m);
    b1(a, 0) = s;
  }
  auto w = set(derive_x(b1));
  WeightSequence ws;
  ws.source = "W";
  for (int k = 0; k <= max_k; ++k) ws.w.push_back(w.get(k, 0));
  return ws;
}

}  // namespace

WeightSequence weight_sequence(ClassId c, const Rational& t, int max_k) {
  if (max_k < 0) throw LawError("negative truncation");
  WeightSequence ws;
  ws.t = t;
  size_t n = static_cast<size_t>(max_k) + 1;
  switch (c) {
    case ClassId::Vmap: {
      size_t nw = n / 2 + 2;
      auto d = online::d_system<Rational>(t, Rational(1), nw);
      auto v = online::v_in_w(d.d, t, Rational(1));
      ws.w.assign(n, Rational(0));
      for (size_t j = 0; 2 * j < n; ++j) ws.w[2 * j] = v[j];
      ws.source = "Vmap";
      return ws;
    }
    case ClassId::Rbar:
    case ClassId::Kbar: {
      ws.w = online::rbar_closed<Rational>(t, Rational(1), n);
      ws.source = "Kbar";
      return ws;
    }
    case ClassId::W:
      if (t != 1) throw LawError("the W sequence is defined at t = 1 only");
      ws = w_from_graphs(max_k);
      ws.t = 1;
      return ws;
    default:
      throw LawError("no weight sequence for class " + class_name(c));
  }
}

WeightSequence halve(const WeightSequence& ws) {
  WeightSequence h;
  h.source = ws.source + "/2";
  h.t = ws.t;
  for (size_t k = 0; k < ws.w.size(); k += 2) h.w.push_back(ws.w[k]);
  return h;
}

void check_admissible(const WeightSequence& ws) {
  if (ws.w.empty() || sgn(ws.w[0]) <= 0) throw LawError("omega_0 must be positive");
  for (size_t k = 0; k < ws.w.size(); ++k)
    if (sgn(ws.w[k]) < 0) throw LawError("negative weight at " + std::to_string(k));
  for (size_t k = 2; k < ws.w.size(); ++k)
    if (sgn(ws.w[k]) > 0) return;
  throw LawError("weights vanish for every k >= 2");
}

OffspringLaw offspring_law(const WeightSequence& ws, const Rational& tau,
                           std::optional<Rational> phi_tau, const Rational& max_tail) {
  check_admissible(ws);
  if (sgn(tau) <= 0) throw LawError("tilt must be positive");
  OffspringLaw law;
  law.tau = tau;
  law.source = ws.source;
  std::vector<Rational> raw(ws.w.size());
  Rational pw = 1, total = 0;
  for (size_t k = 0; k < ws.w.size(); ++k) {
    raw[k] = ws.w[k] * pw;
    total += raw[k];
    pw *= tau;
  }
  Rational phi = phi_tau ? *phi_tau : total;
  if (sgn(phi) <= 0) throw LawError("phi(tau) must be positive");
  law.p.resize(raw.size());
  Rational sum = 0;
  for (size_t k = 0; k < raw.size(); ++k) {
    law.p[k] = raw[k] / phi;
    sum += law.p[k];
    law.mean += Rational(static_cast<long>(k)) * law.p[k];
  }
  law.tail = 1 - sum;
  if (sgn(law.tail) < 0) throw LawError("phi(tau) is below the truncated sum");
  if (law.tail > max_tail)
    throw LawError("tail mass " + std::to_string(to_double(law.tail)) +
                   " exceeds tolerance; raise the truncation beyond " +
                   std::to_string(ws.w.size()));
  return law;
}

NumericLaw to_numeric(const OffspringLaw& law) {
  NumericLaw nl;
  nl.source = law.source;
  nl.p.reserve(law.p.size());
  for (auto& q : law.p) nl.p.push_back(static_cast<double>(to_long_double(q)));
  nl.tail = to_double(law.tail);
  nl.mean = to_double(law.mean);
  return nl;
}

NumericLaw numeric_law(std::vector<long double> weights, long double tail, std::string source) {
  long double s = tail;
  for (auto w : weights) {
    if (w < 0) throw LawError("negative weight");
    s += w;
  }
  if (!(s > 0)) throw LawError("empty law");
  NumericLaw nl;
  nl.source = std::move(source);
  long double mean = 0;
  for (size_t k = 0; k < weights.size(); ++k) {
    nl.p.push_back(static_cast<double>(weights[k] / s));
    mean += static_cast<long double>(k) * weights[k] / s;
  }
  nl.tail = static_cast<double>(tail / s);
  nl.mean = static_cast<double>(mean);
  return nl;
}

}  // namespace pmap
