#ifndef EISENKIT_ROOTS_HPP
#define EISENKIT_ROOTS_HPP

#include <vector>

#include "eisenkit/logreal.hpp"
#include "eisenkit/poly.hpp"
#include "eisenkit/real.hpp"

namespace eisenkit {

// Plain complex value at working precision (no error tracking).
struct Cpx {
  Real re, im;
  Cpx() = default;
  Cpx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Cpx operator+(const Cpx& o) const { return {re + o.re, im + o.im}; }
  Cpx operator-(const Cpx& o) const { return {re - o.re, im - o.im}; }
  Cpx operator*(const Cpx& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Cpx operator/(const Cpx& o) const {
    Real d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  Real abs2() const { return re * re + im * im; }
};

// Durand-Kerner approximations for a monic polynomial with complex
// coefficients (degrees 0..s-1 given); no certification, best effort.
std::vector<Cpx> durand_kerner_approx(const std::vector<Cpx>& monic_coeffs,
                                      int max_iter = 400);

// Complex ball: |z - (re + i*im)| <= rad.
struct CBall {
  Real re, im;
  double rad = 0.0;

  CBall() = default;
  CBall(Real r, Real i, double rd) : re(std::move(r)), im(std::move(i)), rad(rd) {}
  static CBall of(const Rational& q);

  CBall operator+(const CBall& o) const;
  CBall operator-(const CBall& o) const;
  CBall operator*(const CBall& o) const;

  double abs_upper() const;
  double abs_lower() const;  // may be <= 0 when the ball straddles 0
  // log|z| as a LogReal; requires abs_lower() > 0.
  LogReal log_abs() const;
};

struct CertifiedRoot {
  CBall ball;
  int multiplicity = 1;
  bool exact = false;  // rational root represented exactly (rad = 0)
};

// All complex roots of a nonzero rational polynomial with certified error
// radii (Durand-Kerner iteration, Weierstrass-disk a posteriori bounds on
// each squarefree factor, disjointness checked). Multiplicities come from
// Yun decomposition. Throws UnresolvedError when certification fails at the
// highest precision attempt.
std::vector<CertifiedRoot> complex_roots(const QPoly& f);

// log sigma(f): log of the smallest absolute value of a nonzero root.
// Requires f to have at least one nonzero root.
LogReal log_sigma_smallest_nonzero(const QPoly& f);

// Sum of log+ |root| over all roots with multiplicity.
LogReal log_plus_sum_roots(const QPoly& f);

}  // namespace eisenkit

#endif
