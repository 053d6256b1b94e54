#include "pmap/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace pmap {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational q(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + raw);
    q.canonicalize();
    return q;
  }
  // decimal with optional exponent
  std::string mant = s;
  long exp10 = 0;
  auto e = s.find_first_of("eE");
  if (e != std::string::npos) {
    mant = s.substr(0, e);
    exp10 = std::stol(s.substr(e + 1));
  }
  bool neg = false;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    neg = mant[0] == '-';
    mant = mant.substr(1);
  }
  std::string digits;
  long frac = 0;
  bool dot = false;
  for (char c : mant) {
    if (c == '.') {
      if (dot) throw std::invalid_argument("bad rational: " + raw);
      dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      if (dot) ++frac;
    } else {
      throw std::invalid_argument("bad rational: " + raw);
    }
  }
  if (digits.empty()) throw std::invalid_argument("bad rational: " + raw);
  Integer num(digits, 10);
  Integer ten = 10;
  long shift = exp10 - frac;
  Rational q(num);
  Integer p;
  mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::labs(shift)));
  if (shift >= 0)
    q *= p;
  else
    q /= p;
  if (neg) q = -q;
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) { return q.get_d(); }

long double to_long_double(const Rational& q) {
  // mpq_get_d loses range for huge numerators; split via exponents
  long en = 0, ed = 0;
  double n = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  double d = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::ldexp(static_cast<long double>(n) / d, static_cast<int>(en - ed));
}

Rational pow(const Rational& q, long e) {
  Rational r;
  unsigned long ue = static_cast<unsigned long>(std::labs(e));
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), ue);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), ue);
  r.canonicalize();
  if (e < 0) {
    if (sgn(r) == 0) throw std::domain_error("zero to a negative power");
    r = 1 / r;
  }
  return r;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace pmap
