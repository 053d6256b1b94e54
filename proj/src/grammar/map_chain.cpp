#include "pmap/grammar.hpp"

namespace pmap {

namespace {

void require(bool ok, const std::string& what, std::vector<std::string>& log) {
  if (!ok) throw GrammarError("map chain identity failed: " + what);
  log.push_back("ok " + what);
}

}  // namespace

MapTable build_map_chain(std::optional<Rational> t, int max_x, int max_y) {
  if (t && sgn(*t) <= 0) throw GrammarError("tilt must be positive");
  MapTable tb;
  tb.t = t;
  tb.max_x = t ? 0 : max_x;
  tb.max_y = max_y;
  // one extra y-order so that the division by y in Istar_bar keeps max_y
  ChainVars hi = t ? evaluated_vars(*t, max_y + 1, Convention::Plain)
                   : symbolic_vars(max_x, max_y + 1, Convention::Plain);
  ChainVars cv = t ? evaluated_vars(*t, max_y, Convention::Plain)
                   : symbolic_vars(max_x, max_y, Convention::Plain);

  Series f01_hi = build_f01_bar(hi);
  tb.F01bar = truncate(f01_hi, tb.max_x, max_y);
  {
    Series x = cv.x(), y = cv.y();
    auto uv = fixed_point_system<Rational>(
        [&](const std::vector<Series>& s) {
          auto sq = [](const Series& a) {
            Series p = add_constant(a, Rational(1));
            return mul(p, p);
          };
          return std::vector<Series>{mul(mul(x, y), sq(s[1])), mul(y, sq(s[0]))};
        },
        std::vector<Series>{cv.zero(), cv.zero()});
    tb.u = uv[0];
    tb.v = uv[1];
  }
  tb.log.push_back("F01bar built");

  Series xh = hi.x(), yh = hi.y();
  Series path_h = mul(yh, seq(mul(xh, yh)));  // y SEQ(xy)
  Series obar_h = substitute_y(f01_hi, path_h);
  tb.Obar = truncate(obar_h, tb.max_x, max_y);

  Series x = cv.x(), y = cv.y(), one = cv.one();
  Series xy = mul(x, y);
  Series path = mul(y, seq(xy));
  tb.Jbar = add(one, path);
  Series istar = mul(mul(y, seq_ge(xy, 1)), seq(xy));
  istar = add(istar, truncate(divide_y(mul(obar_h, add(hi.one(), path_h)), 1), tb.max_x, max_y));
  tb.IstarBar = istar;
  tb.Rbar = mul(tb.Jbar, seq(tb.IstarBar));
  tb.log.push_back("Rbar built");

  tb.Kbar = fixed_point<Rational>([&](const Series& k) { return mul(y, substitute_y(tb.Rbar, k)); },
                                  cv.zero());
  Series xk = mul(x, tb.Kbar);
  tb.D = mul(tb.Kbar, seq(xk));
  tb.Sbar = mul(tb.Kbar, seq_ge(xk, 1));
  tb.Hbar = substitute_y(tb.F01bar, tb.D);
  tb.Pbar = sub(tb.Kbar, tb.Hbar);

  require(mul(x, tb.D) == seq_ge(xk, 1), "xD = SEQ>=1(x Kbar)", tb.log);
  require(add(add(tb.Sbar, tb.Pbar), tb.Hbar) == tb.D, "D = S + P + H", tb.log);
  require(tb.Sbar == mul(add(tb.Pbar, tb.Hbar), seq_ge(mul(x, add(tb.Pbar, tb.Hbar)), 1)),
          "S = (P+H) SEQ>=1(x(P+H))", tb.log);
  require(tb.Pbar == add(y, mul(add(add(y, tb.Hbar), tb.Sbar), tb.D)), "P = y + (y+H+S) D",
          tb.log);

  // V(x,z) = 1 + z^2 + z^2 x (1 + D(x, z^2)), z stored in the y slot
  int mz = 2 * max_y + 1;
  ChainVars zv = t ? evaluated_vars(*t, mz, Convention::Plain)
                   : symbolic_vars(max_x, mz, Convention::Plain);
  Series z = zv.y(), z2 = mul(z, z);
  Series dz = zv.lift(stretch_y(tb.D, 2, mz));
  tb.V = add(add(zv.one(), z2), mul(mul(z2, zv.x()), add_constant(dz, Rational(1))));
  tb.M = fixed_point<Rational>([&](const Series& m) { return substitute_y(tb.V, mul(z, m)); },
                               zv.one());
  tb.log.push_back("M built");
  return tb;
}

}  // namespace pmap
