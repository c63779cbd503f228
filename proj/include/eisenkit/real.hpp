#ifndef EISENKIT_REAL_HPP
#define EISENKIT_REAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace eisenkit {

// High-precision real backed by MPFR. Precision is fixed per value at
// construction time, taken from a process-wide default (settable once at
// startup, before any values are created).
class Real {
 public:
  static mpfr_prec_t default_precision();
  static void set_default_precision(mpfr_prec_t bits);

  Real();
  explicit Real(double d);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real of_long(long v);
  static Real of(const mpz_class& z);
  static Real of(const mpq_class& q);
  static Real log_of(const mpz_class& z);  // requires z > 0
  static Real log_of(const mpq_class& q);  // requires q > 0

  Real operator+(const Real& o) const;
  Real operator-(const Real& o) const;
  Real operator*(const Real& o) const;
  Real operator/(const Real& o) const;
  Real& operator+=(const Real& o);
  Real operator-() const;

  Real abs() const;
  Real sqrt() const;  // requires >= 0
  Real log() const;   // requires > 0

  Real mul_q(const mpq_class& f) const;

  static Real max(const Real& a, const Real& b);
  static Real min(const Real& a, const Real& b);

  int cmp(const Real& o) const;
  int sign() const;
  bool operator<(const Real& o) const { return cmp(o) < 0; }
  bool operator<=(const Real& o) const { return cmp(o) <= 0; }
  bool operator>(const Real& o) const { return cmp(o) > 0; }
  bool operator>=(const Real& o) const { return cmp(o) >= 0; }

  double to_double() const;
  // Deterministic decimal rendering, round-to-nearest.
  std::string str(int significant_digits = 30) const;

  mpfr_srcptr raw() const { return x_; }
  mpfr_ptr raw() { return x_; }

 private:
  mpfr_t x_;
};

}  // namespace eisenkit

#endif
