#include <stdexcept>

#include "pmap/grammar.hpp"

namespace pmap {

const std::vector<std::pair<ClassId, std::string>>& class_registry() {
  static const std::vector<std::pair<ClassId, std::string>> reg = {
      {ClassId::U, "u"},         {ClassId::V_uv, "v"},      {ClassId::F01bar, "F01bar"},
      {ClassId::F01, "F01"},     {ClassId::Obar, "Obar"},   {ClassId::O, "O"},
      {ClassId::IstarBar, "Istar_bar"}, {ClassId::Jbar, "Jbar"}, {ClassId::Rbar, "Rbar"},
      {ClassId::Kbar, "Kbar"},   {ClassId::D, "D"},         {ClassId::Sbar, "Sbar"},
      {ClassId::Pbar, "Pbar"},   {ClassId::Hbar, "Hbar"},   {ClassId::Vmap, "V"},
      {ClassId::M, "M"},         {ClassId::Istar, "Istar"}, {ClassId::J, "J"},
      {ClassId::R, "R"},         {ClassId::K, "K"},         {ClassId::N, "N"},
      {ClassId::B, "B"},         {ClassId::C, "C"},         {ClassId::G, "G"},
      {ClassId::S, "S"},         {ClassId::P, "P"},         {ClassId::H, "H"},
      {ClassId::L, "L"},         {ClassId::W, "W"}};
  return reg;
}

std::string class_name(ClassId c) {
  for (auto& [id, name] : class_registry())
    if (id == c) return name;
  throw std::logic_error("unregistered class id");
}

ClassId parse_class(const std::string& s) {
  for (auto& [id, name] : class_registry())
    if (name == s) return id;
  throw std::invalid_argument("unknown class id: " + s);
}

Series ChainVars::x() const {
  if (t) {
    Series s = Series::constant(*t, 0, max_y, conv);
    s.set_x_value(t);
    return s;
  }
  return Series::monomial(1, 0, 1, max_x, max_y, conv);
}

Series ChainVars::y() const { return lift(Series::monomial(0, 1, 1, t ? 0 : max_x, max_y, conv)); }
Series ChainVars::one() const { return lift(Series::constant(1, t ? 0 : max_x, max_y, conv)); }
Series ChainVars::zero() const { return lift(Series(t ? 0 : max_x, max_y, conv)); }

Series ChainVars::lift(const Series& s) const {
  Series r = s;
  r.set_convention(conv);
  if (t) r.set_x_value(t);
  return r;
}

ChainVars symbolic_vars(int max_x, int max_y, Convention conv) {
  ChainVars cv;
  cv.max_x = max_x;
  cv.max_y = max_y;
  cv.conv = conv;
  return cv;
}

ChainVars evaluated_vars(const Rational& t, int max_y, Convention conv) {
  ChainVars cv;
  cv.t = t;
  cv.max_x = 0;
  cv.max_y = max_y;
  cv.conv = conv;
  return cv;
}

namespace {

Series sq1(const Series& s) {
  Series p = add_constant(s, Rational(1));
  return mul(p, p);
}

}  // namespace

Series build_f01_bar(const ChainVars& cv) {
  Series x = cv.x(), y = cv.y(), one = cv.one();
  Series xy = mul(x, y);
  auto sol = fixed_point_system<Rational>(
      [&](const std::vector<Series>& uv) {
        return std::vector<Series>{mul(xy, sq1(uv[1])), mul(y, sq1(uv[0]))};
      },
      std::vector<Series>{cv.zero(), cv.zero()});
  const Series &u = sol[0], &v = sol[1];
  Series s = add(add(one, u), v);
  Series ratio = mul(mul(sq1(u), sq1(v)), inverse(power(s, 3)));
  Series inner = add(inverse(add(one, xy)), inverse(add(one, y)));
  inner = sub(sub(inner, one), ratio);
  return mul(y, inner);
}

std::vector<std::vector<Integer>> f01_bar_table(int max_x, int max_y) {
  // slices in y; each slice a polynomial in x truncated at degree max_x
  using P = std::vector<Integer>;
  const int X = max_x;
  auto zero = [&] { return P(X + 1); };
  auto addmul = [&](P& acc, const P& a, const P& b) {
    for (int i = 0; i <= X; ++i) {
      if (sgn(a[i]) == 0) continue;
      for (int j = 0; i + j <= X; ++j)
        if (sgn(b[j]) != 0) mpz_addmul(acc[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  };
  auto submul = [&](P& acc, const P& a, const P& b) {
    for (int i = 0; i <= X; ++i) {
      if (sgn(a[i]) == 0) continue;
      for (int j = 0; i + j <= X; ++j)
        if (sgn(b[j]) != 0) mpz_submul(acc[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  };
  const int Y = max_y;  // need ratio up to y^(Y-1)
  std::vector<P> u, v, A, B, S, S2, S3, Pr, Q, E;
  P one = zero();
  one[0] = 1;
  u.push_back(zero());
  v.push_back(zero());
  A.push_back(one);
  B.push_back(one);
  S.push_back(one);
  S2.push_back(one);
  S3.push_back(one);
  Pr.push_back(one);
  Q.push_back(one);
  E.push_back(one);
  std::vector<P> A2{one}, B2{one};
  for (int k = 1; k < Y; ++k) {
    // u_k = x [y^{k-1}] (1+v)^2, v_k = [y^{k-1}] (1+u)^2
    P uk = zero();
    for (int i = 0; i < X; ++i) uk[i + 1] = B2[k - 1][i];
    P vk = A2[k - 1];
    u.push_back(uk);
    v.push_back(vk);
    A.push_back(uk);
    B.push_back(vk);
    P sk = zero();
    for (int i = 0; i <= X; ++i) sk[i] = uk[i] + vk[i];
    S.push_back(sk);
    P a2 = zero(), b2 = zero(), s2 = zero(), s3 = zero(), pr = zero(), q = zero(), e = zero();
    for (int j = 0; j <= k; ++j) {
      addmul(a2, A[j], A[k - j]);
      addmul(b2, B[j], B[k - j]);
      addmul(s2, S[j], S[k - j]);
    }
    A2.push_back(a2);
    B2.push_back(b2);
    S2.push_back(s2);
    for (int j = 0; j <= k; ++j) addmul(s3, S2[j], S[k - j]);
    S3.push_back(s3);
    for (int j = 0; j <= k; ++j) addmul(pr, A2[j], B2[k - j]);
    Pr.push_back(pr);
    for (int j = 1; j <= k; ++j) submul(q, S3[j], Q[k - j]);
    Q.push_back(q);
    for (int j = 0; j <= k; ++j) addmul(e, Pr[j], Q[k - j]);
    E.push_back(e);
  }
  std::vector<std::vector<Integer>> out(X + 1, std::vector<Integer>(Y + 1));
  for (int b = 1; b <= Y; ++b) {
    int j = b - 1;
    // [y^j] of 1/(1+xy) + 1/(1+y) - 1 - E
    for (int a = 0; a <= X; ++a) {
      Integer c = -E[j][a];
      if (a == j) c += (j % 2 ? -1 : 1);
      if (a == 0) c += (j % 2 ? -1 : 1);
      if (j == 0 && a == 0) c -= 1;
      out[a][b] = c;
    }
  }
  return out;
}

Series f01_from_3connected(const Series& f3) {
  // (2/x^2) dF/dy
  Series d = derive_y(f3);
  Series r(f3.max_x() - 2, d.max_y(), Convention::LabelledX);
  for (int a = 0; a <= r.max_x(); ++a)
    for (int b = 0; b <= r.max_y(); ++b) r(a, b) = 2 * d(a + 2, b);
  return r;
}

}  // namespace pmap
