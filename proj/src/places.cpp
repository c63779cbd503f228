#include "eisenkit/places.hpp"

#include "eisenkit/errors.hpp"
#include "eisenkit/primes.hpp"

namespace eisenkit {

Place Place::finite(const Integer& p) {
  if (!is_prime(p)) throw DomainError("Place: " + p.get_str() + " is not prime");
  return Place(p);
}

const Integer& Place::prime() const {
  if (is_infinite()) throw DomainError("Place: prime() on infinite place");
  return p_;
}

std::string Place::str() const { return is_infinite() ? "inf" : p_.get_str(); }

Rational abs_at_place_exact(const Rational& q, const Place& v) {
  if (is_zero(q)) return Rational(0);
  if (v.is_infinite()) return Rational(abs(q));
  long val = rat_valuation(q, v.prime());
  return rat_pow(Rational(v.prime()), -val);
}

LogReal abs_at_place(const Rational& q, const Place& v) {
  if (is_zero(q)) return LogReal::neg_infinity();
  if (v.is_infinite()) return LogReal::log_abs(q);
  long val = rat_valuation(q, v.prime());
  return LogReal::log_of(v.prime()).scaled(rat(-val));
}

bool product_formula_check(const Rational& q, const std::vector<Integer>& prime_support) {
  if (is_zero(q)) throw DomainError("product_formula_check: zero input");
  // Symbolic residual: q must equal (sign) * prod p^{v_p(q)} over the support.
  Rational residual = abs(q);
  for (const Integer& p : prime_support) {
    if (!is_prime(p)) throw DomainError("product_formula_check: non-prime support entry");
    long val = rat_valuation(q, p);
    residual *= rat_pow(Rational(p), -val);
  }
  return residual == 1;
}

}  // namespace eisenkit
