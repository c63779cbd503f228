#ifndef EISENKIT_PLACES_HPP
#define EISENKIT_PLACES_HPP

#include <string>
#include <vector>

#include "eisenkit/logreal.hpp"
#include "eisenkit/rational.hpp"

namespace eisenkit {

// A place of Q: either the infinite (archimedean) place or a finite place
// attached to a prime p, normalized so |p|_p = 1/p.
class Place {
 public:
  static Place infinite() { return Place(Integer(0)); }
  static Place finite(const Integer& p);  // checks primality

  bool is_infinite() const { return p_ == 0; }
  const Integer& prime() const;  // requires finite

  std::string str() const;

  // Infinite place sorts first, then primes ascending.
  friend bool operator<(const Place& a, const Place& b) {
    return a.p_ < b.p_;
  }
  friend bool operator==(const Place& a, const Place& b) {
    return a.p_ == b.p_;
  }

 private:
  explicit Place(Integer p) : p_(std::move(p)) {}
  Integer p_;  // 0 = infinite
};

// |q|_v as an exact rational (p^{-v_p(q)} at finite places, |q| at infinity).
// q = 0 gives 0.
Rational abs_at_place_exact(const Rational& q, const Place& v);

// log|q|_v; NegInf sentinel for q = 0.
LogReal abs_at_place(const Rational& q, const Place& v);

// True iff sum of log|q|_v over support + infinity vanishes identically,
// checked symbolically (q must be a unit outside the given primes for the
// formula to close; incomplete support shows up as a nonzero residual and
// yields false).
bool product_formula_check(const Rational& q, const std::vector<Integer>& prime_support);

}  // namespace eisenkit

#endif
