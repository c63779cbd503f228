#ifndef EISENKIT_RESULTANT_HPP
#define EISENKIT_RESULTANT_HPP

#include "eisenkit/bipoly.hpp"

namespace eisenkit {

// w-resultant of P and Q, exact, via fraction-free (Bareiss) elimination of
// the Sylvester matrix over Q[z]. Degree-0 conventions: Res(f, c) = c^{deg f},
// Res(c, d) = 1.
QPoly resultant_w(const QBiPoly& p, const QBiPoly& q);

// R_P(z) = Res_w(P, P'_w); zero iff P is not w-separable.
QPoly resultant_w_self(const QBiPoly& p);

bool is_w_separable(const QBiPoly& p);

// D(z) with p_n(z) * D(z) = +-Res_w(P, P'_w); exactness of the division is
// verified. Requires deg_w P >= 1.
QPoly discriminant_w(const QBiPoly& p);

// w-separable polynomial with the same w-roots: P divided by the subresultant
// gcd of P and P'_w over Q(z)[w], cleared of denominators, content-normalized
// with positive graded-lex leading coefficient. Requires deg_w P >= 1.
QBiPoly squarefree_part_w(const QBiPoly& p);

// gcd of two w-polynomials over Q[z] via the subresultant PRS; returned
// primitive in z with monic-normalized rational content.
Poly<QPoly> subresultant_gcd_w(Poly<QPoly> a, Poly<QPoly> b);

}  // namespace eisenkit

#endif
