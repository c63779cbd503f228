#ifndef EISENKIT_NUMBERFIELD_HPP
#define EISENKIT_NUMBERFIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eisenkit/places.hpp"
#include "eisenkit/poly.hpp"
#include "eisenkit/roots.hpp"

namespace eisenkit {

// A declared number field Q(th), th a root of a monic integer squarefree
// modulus. Irreducibility is certified by a mod-p witness when one exists
// among the first 50 usable primes; otherwise the field runs "unverified"
// and any detected zero divisor raises.
struct NumberFieldData {
  QPoly modulus;  // monic, integer coefficients, degree >= 1, squarefree
  std::optional<unsigned long> irreducibility_witness;
  std::vector<CBall> embeddings;  // the degree() certified complex roots

  long degree() const { return modulus.degree(); }
  bool verified() const {
    return degree() == 1 || irreducibility_witness.has_value();
  }
};

using FieldPtr = std::shared_ptr<const NumberFieldData>;

FieldPtr make_field(const QPoly& modulus);
// Same modulus, embeddings recomputed at the given precision.
FieldPtr field_with_precision(const FieldPtr& f, mpfr_prec_t bits);
FieldPtr rational_field();  // Q, modulus x

// Element of Q(th) in power-basis coordinates. A null field pointer means a
// plain rational (degree-1 coordinates); mixed-field arithmetic promotes the
// rational side.
class AlgNum {
 public:
  AlgNum() : co_{Rational(0)} {}
  AlgNum(const Rational& q) : co_{q} {}  // NOLINT: implicit by design
  AlgNum(FieldPtr f, std::vector<Rational> coords);

  static AlgNum generator(const FieldPtr& f);

  const FieldPtr& field() const { return f_; }
  const std::vector<Rational>& coords() const { return co_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational as_rational() const;  // requires is_rational()

  AlgNum operator+(const AlgNum& o) const;
  AlgNum operator-(const AlgNum& o) const;
  AlgNum operator*(const AlgNum& o) const;
  AlgNum operator-() const;
  bool operator==(const AlgNum& o) const;

  AlgNum inverse() const;  // throws on zero / detected zero divisor
  AlgNum pow(long e) const;

  // Value at the j-th embedding, as a ball.
  CBall embed(size_t j) const;

  std::string str() const;  // rational or polynomial in x

 private:
  static void align(AlgNum& a, AlgNum& b);
  FieldPtr f_;  // null = rational
  std::vector<Rational> co_;
};

inline bool coeff_is_zero(const AlgNum& a) { return a.is_zero(); }
inline AlgNum coeff_inverse(const AlgNum& a) { return a.inverse(); }

using FPoly = Poly<AlgNum>;

// Monic minimal polynomial of alpha over Q (degree divides the field
// degree). Requires a verified field for non-rational alpha.
QPoly min_poly(const AlgNum& alpha);

struct NewtonPolygonNP {
  struct Vertex {
    long index;
    Rational valuation;
  };
  struct Slope {
    Rational slope;
    long length;
  };
  std::vector<Vertex> vertices;  // lower convex hull, indices increasing
  std::vector<Slope> slopes;     // strictly increasing slopes
};

// Lower hull of (i, v_p(c_i)) over the nonzero coefficients; root valuations
// are the negated slopes with multiplicities equal to the lengths.
NewtonPolygonNP newton_polygon_padic(const QPoly& h, const Integer& p);

// Exact exponent x with max |alpha'|_v = p^x over all conjugates alpha' and
// extensions of the finite place p. Requires alpha != 0.
Rational conjugate_norm_exponent_at_p(const AlgNum& alpha, const Integer& p);

// log max over all extensions of v to Q-bar of |alpha|_v. Exact at finite
// places (Newton polygon of the minimal polynomial); certified numerics at
// the infinite place. NegInf for alpha = 0.
LogReal conjugate_norm_max(const AlgNum& alpha, const Place& v);

// Affine (absolute, logarithmic) Weil height via the Mahler measure of the
// minimal polynomial. h(0) = 0.
LogReal height_algnum(const AlgNum& alpha);

struct FieldRoots {
  std::vector<std::pair<AlgNum, int>> roots;  // exact, with multiplicities
  // Numerical roots (first embedding) not matched by any exact root;
  // soundness is unconditional, completeness best-effort.
  std::vector<std::string> possibly_outside;
};

// All roots of h lying in the field of its coefficients/F: found by
// per-embedding numerics, power-basis reconstruction with rational rounding,
// then exact verification by substitution.
FieldRoots roots_in_field(const FPoly& h, const FieldPtr& f);

// Continued-fraction rational rounding with a denominator bound.
Rational rational_round(const Real& x, const Integer& den_bound);

}  // namespace eisenkit

#endif
