#include "eisenkit/rational.hpp"

#include "eisenkit/errors.hpp"

namespace eisenkit {

long int_valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw DomainError("int_valuation: zero input");
  Integer rest;
  return (long)mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

long rat_valuation(const Rational& q, const Integer& p) {
  if (is_zero(q)) throw DomainError("rat_valuation: zero input");
  // q is canonical, so p divides at most one of num, den.
  Integer num = q.get_num();
  if (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t()))
    return int_valuation(num, p);
  Integer den = q.get_den();
  if (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t()))
    return -int_valuation(den, p);
  return 0;
}

Rational rat_pow(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  bool inv = e < 0;
  unsigned long ue = inv ? (unsigned long)(-e) : (unsigned long)e;
  if (inv && is_zero(q)) throw DomainError("rat_pow: negative power of zero");
  Integer n = int_pow(q.get_num(), ue), d = int_pow(q.get_den(), ue);
  Rational r;
  if (inv) {
    r = Rational(d, n);
  } else {
    r = Rational(n, d);
  }
  r.canonicalize();
  return r;
}

Integer int_pow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace eisenkit
