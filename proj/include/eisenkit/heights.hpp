#ifndef EISENKIT_HEIGHTS_HPP
#define EISENKIT_HEIGHTS_HPP

#include <set>
#include <vector>

#include "eisenkit/bipoly.hpp"
#include "eisenkit/logreal.hpp"
#include "eisenkit/places.hpp"

namespace eisenkit {

// Scale a nonzero polynomial by the unique positive rational making its
// coefficients coprime integers, with the graded-lex leading coefficient
// positive.
QBiPoly canonical_int_form(const QBiPoly& p);

// The nonzero-coefficient list of the canonical form.
std::vector<Integer> canonical_int_coeffs(const QBiPoly& p);

// Projective height over Q: log max |c_i| of the canonical coprime-integer
// coefficients. Exact up to one mpfr rounding.
LogReal height_poly(const QBiPoly& p);
LogReal height_poly_uni(const QPoly& p);

// |P|_v: max of |c|_v over the (nonzero) coefficients, as an exact rational.
Rational poly_max_abs_at_place(const QBiPoly& p, const Place& v);
Rational poly_max_abs_at_place(const QPoly& p, const Place& v);

// Affine height of a rational: log max(|num|, den).
LogReal affine_height_rational(const Rational& q);

// Primes dividing the denominator of any entry.
std::set<Integer> denominator_primes(const std::vector<Rational>& values);

std::vector<Rational> all_coeffs(const QBiPoly& p);
std::vector<Rational> all_coeffs(const QPoly& p);

}  // namespace eisenkit

#endif
