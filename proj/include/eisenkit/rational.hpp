#ifndef EISENKIT_RATIONAL_HPP
#define EISENKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <vector>

namespace eisenkit {

// Universal exact scalar. mpq_class keeps the gcd(|num|, den) = 1, den >= 1
// invariant through canonicalization.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// v_p(q): the exponent of p in q, so that |q|_p = p^{-v_p(q)}.
// Requires q != 0 and p prime.
long rat_valuation(const Rational& q, const Integer& p);

long int_valuation(const Integer& n, const Integer& p);  // n != 0

Rational rat_pow(const Rational& q, long e);  // q != 0 when e < 0

Integer int_pow(const Integer& b, unsigned long e);

inline long floor_div(long a, long b) {
  long q = a / b, r = a % b;
  return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

}  // namespace eisenkit

#endif
