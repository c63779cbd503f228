#ifndef EISENKIT_SERIES_HPP
#define EISENKIT_SERIES_HPP

#include <optional>
#include <vector>

#include "eisenkit/numberfield.hpp"

namespace eisenkit {

// Truncated Laurent series over AlgNum in a formal variable t:
//   sum_{k=lo}^{prec-1} c[k-lo] t^k + O(t^prec),
// with prec = kExactPrec meaning the series is an exact Laurent polynomial.
// Arithmetic propagates the precision window: the error term of a product
// starts at eff_ord(a) + prec(b) resp. eff_ord(b) + prec(a), whichever is
// smaller, where eff_ord is the first (known-)nonzero exponent.
class LSeries {
 public:
  static constexpr long kExactPrec = 1L << 58;

  LSeries() = default;  // exact zero

  static LSeries constant(const AlgNum& a);
  static LSeries monomial(const AlgNum& a, long k);
  // exact polynomial in t^stride: p = sum p_i t^(stride*i)
  static LSeries from_poly(const Poly<AlgNum>& p, long stride = 1);
  static LSeries make(long lo, std::vector<AlgNum> coeffs, long prec);

  long prec() const { return prec_; }
  bool is_exact() const { return prec_ == kExactPrec; }
  long lo() const { return lo_; }

  // Coefficient of t^k; requires k < prec.
  AlgNum coeff(long k) const;
  std::optional<long> first_nonzero() const;
  long eff_ord() const;  // first nonzero exponent, or prec if none known

  LSeries truncated(long new_prec) const;
  // Extend the stated window with zero coefficients (Newton-step padding).
  LSeries padded_to(long new_prec) const;

  LSeries operator+(const LSeries& o) const;
  LSeries operator-(const LSeries& o) const;
  LSeries operator*(const LSeries& o) const;
  LSeries scaled(const AlgNum& f) const;
  LSeries shifted(long k) const;  // multiply by t^k

  // 1/this + O(t^to_prec); requires a known first nonzero coefficient and
  // enough stored terms.
  LSeries inverse(long to_prec) const;

  bool known_zero_through(long k) const;  // all coefficients < k vanish

 private:
  void normalize();
  long lo_ = 0;
  long prec_ = kExactPrec;
  std::vector<AlgNum> c_;
};

}  // namespace eisenkit

#endif
