#pragma once

#include <gmpxx.h>

#include <string>

namespace pmap {

using Rational = mpq_class;
using Integer = mpz_class;

// "num/den" with den omitted when it is 1
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// accepts "a/b", "a", and finite decimals such as "0.25" or "-1.5e-3"
Rational parse_rational(const std::string& s);

double to_double(const Rational& q);
long double to_long_double(const Rational& q);

Rational pow(const Rational& q, long e);
Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// canonicalized n/d; the two-argument mpq_class constructor does not reduce
inline Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(long double x) { return x == 0.0L; }

}  // namespace pmap
