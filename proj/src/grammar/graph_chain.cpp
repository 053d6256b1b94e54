#include "pmap/grammar.hpp"

namespace pmap {

namespace {

void require(bool ok, const std::string& what, std::vector<std::string>& log) {
  if (!ok) throw GrammarError("graph chain identity failed: " + what);
  log.push_back("ok " + what);
}

Series relabel(const Series& s, Convention c) {
  Series r = s;
  r.set_convention(c);
  return r;
}

}  // namespace

Series b_from_n(const Series& n) {
  // Q = (N+1)/(1+y); [x^(a+2) y^m]B = Q[a][m-1]/(2m)
  Series one = Series::constant(1, n.max_x(), n.max_y(), n.convention());
  Series yy = Series::monomial(0, 1, 1, n.max_x(), n.max_y(), n.convention());
  Series q = mul(add(n, one), inverse(add(one, yy)));
  Series b(n.max_x() + 2, n.max_y() + 1, n.convention());
  for (int a = 0; a <= n.max_x(); ++a)
    for (int m = 1; m <= n.max_y() + 1; ++m) b(a + 2, m) = q(a, m - 1) / Rational(2 * m);
  return b;
}

Series n_from_b(const Series& b) {
  Series by = derive_y(b);
  Series s(b.max_x() - 2, by.max_y(), b.convention());
  for (int a = 0; a <= s.max_x(); ++a)
    for (int m = 0; m <= s.max_y(); ++m) s(a, m) = 2 * by(a + 2, m);
  Series one = Series::constant(1, s.max_x(), s.max_y(), s.convention());
  Series yy = Series::monomial(0, 1, 1, s.max_x(), s.max_y(), s.convention());
  return sub(mul(add(one, yy), s), one);
}

Series a_from_b(const Series& b) {
  Series bx = derive_x(b);
  Series x = Series::monomial(1, 0, 1, b.max_x(), b.max_y(), b.convention());
  // top x-order of the padded derivative is never read through x * SET(...)
  Series bxp(b.max_x(), b.max_y(), b.convention());
  for (int a = 0; a < b.max_x(); ++a)
    for (int m = 0; m <= b.max_y(); ++m) bxp(a, m) = bx(a, m);
  return fixed_point<Rational>([&](const Series& a) { return mul(x, set(substitute_x(bxp, a))); },
                               Series(b.max_x(), b.max_y(), b.convention()));
}

Series c_from_a(const Series& a) {
  Series c(a.max_x(), a.max_y(), a.convention());
  for (int i = 1; i <= a.max_x(); ++i)
    for (int m = 0; m <= a.max_y(); ++m) c(i, m) = a(i, m) / Rational(i);
  return c;
}

GraphTable build_graph_chain(int max_x, int max_y) {
  GraphTable tb;
  tb.max_x = max_x;
  tb.max_y = max_y;
  const auto L = Convention::LabelledX;
  ChainVars hi = symbolic_vars(max_x, max_y + 1, L);
  ChainVars cv = symbolic_vars(max_x, max_y, L);

  Series fbar_hi = build_f01_bar(symbolic_vars(max_x, max_y + 1, Convention::Plain));
  tb.F01bar = truncate(fbar_hi, max_x, max_y);
  Series f01_hi = scale(relabel(fbar_hi, L), Rational(1, 2));
  tb.F01 = truncate(f01_hi, max_x, max_y);
  tb.log.push_back("F01 = F01bar/2");

  Series xh = hi.x(), yh = hi.y();
  Series xyh = mul(xh, yh);
  Series oh = substitute_y(f01_hi, mul(yh, seq(xyh)));
  Series lh = mul(yh, seq_ge(xyh, 1));
  tb.O = truncate(oh, max_x, max_y);
  tb.L = truncate(lh, max_x, max_y);
  Series zh = add(oh, lh);
  tb.Istar = divide_y(add(oh, set_ge(zh, 2)), 1);
  tb.J = truncate(set(zh), max_x, max_y);
  tb.R = mul(tb.J, seq(tb.Istar));
  tb.log.push_back("R built");

  Series x = cv.x(), y = cv.y();
  tb.K = fixed_point<Rational>([&](const Series& k) { return mul(y, substitute_y(tb.R, k)); },
                               cv.zero());
  Series xk = mul(x, tb.K);
  tb.N = mul(tb.K, seq(xk));
  require(mul(x, tb.N) == seq_ge(xk, 1), "xN = SEQ>=1(xK)", tb.log);
  tb.S = sub(tb.N, tb.K);
  tb.H = substitute_y(tb.F01, tb.N);
  tb.P = sub(tb.K, tb.H);
  Series sh = add(tb.S, tb.H);
  require(tb.P == add(mul(y, set(sh)), set_ge(sh, 2)), "P = y SET(S+H) + SET>=2(S+H)",
          tb.log);
  require(tb.S == mul(sub(tb.N, tb.S), mul(x, tb.N)), "S = (N-S) x N", tb.log);

  tb.B = b_from_n(tb.N);
  require(n_from_b(tb.B) == tb.N, "N = (1+y)(2/x^2) dB/dy - 1", tb.log);
  tb.A = a_from_b(tb.B);
  tb.C = c_from_a(tb.A);
  tb.G = set(tb.C);
  tb.log.push_back("B, C, G built");
  return tb;
}

}  // namespace pmap
