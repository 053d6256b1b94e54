#include "pmap/series.hpp"

namespace pmap {

const char* convention_name(Convention c) {
  return c == Convention::LabelledX ? "LabelledX" : "Plain";
}

Convention parse_convention(const std::string& s) {
  if (s == "LabelledX") return Convention::LabelledX;
  if (s == "Plain") return Convention::Plain;
  throw SeriesError("unknown convention: " + s);
}

namespace {

Series one_plus_sq(const Series& s) {
  Series p = add_constant(s, Rational(1));
  return mul(p, p);
}

}  // namespace

std::pair<Series, Series> solve_uv_system(int max_x, int max_y) {
  Series x = Series::monomial(1, 0, Rational(1), max_x, max_y);
  Series y = Series::monomial(0, 1, Rational(1), max_x, max_y);
  Series xy = mul(x, y);
  auto rhs = [&](const std::vector<Series>& uv) {
    return std::vector<Series>{mul(xy, one_plus_sq(uv[1])), mul(y, one_plus_sq(uv[0]))};
  };
  std::vector<Series> init{Series(max_x, max_y), Series(max_x, max_y)};
  auto sol = fixed_point_system<Rational>(rhs, init);
  if (!uv_residual_zero(sol[0], sol[1])) throw SeriesError("uv system residual is not zero");
  return {sol[0], sol[1]};
}

bool uv_residual_zero(const Series& u, const Series& v) {
  Series x = Series::monomial(1, 0, Rational(1), u.max_x(), u.max_y());
  Series y = Series::monomial(0, 1, Rational(1), u.max_x(), u.max_y());
  Series ru = sub(u, mul(mul(x, y), one_plus_sq(v)));
  Series rv = sub(v, mul(y, one_plus_sq(u)));
  return ru.is_zero_series() && rv.is_zero_series();
}

}  // namespace pmap
