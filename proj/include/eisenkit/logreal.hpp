#ifndef EISENKIT_LOGREAL_HPP
#define EISENKIT_LOGREAL_HPP

#include <string>

#include "eisenkit/real.hpp"

namespace eisenkit {

// A quantity of the form log(x) for some x >= 0, carried in the log domain
// with an explicit absolute error bound. x = 0 is the NegInf sentinel, kept
// as an enumerated state rather than a float infinity. Addition of LogReals
// multiplies the underlying magnitudes; scaling raises to a rational power.
class LogReal {
 public:
  LogReal() : neg_inf_(false), v_(), tol_(0.0) {}

  static LogReal neg_infinity();
  static LogReal zero() { return LogReal(); }  // log 1
  static LogReal from(Real v, double tol);
  static LogReal log_of(const mpz_class& z);  // z > 0, exact input
  static LogReal log_of(const mpq_class& q);  // q > 0, exact input
  static LogReal log_abs(const mpq_class& q); // log|q|, NegInf for q = 0

  bool is_neg_inf() const { return neg_inf_; }
  const Real& value() const;  // requires finite
  double tol() const { return tol_; }

  LogReal operator+(const LogReal& o) const;
  LogReal operator-(const LogReal& o) const;  // o must be finite
  LogReal& operator+=(const LogReal& o);
  LogReal scaled(const mpq_class& f) const;   // f * this; f < 0 needs finite
  LogReal scaled_long(long f) const;

  static LogReal max(const LogReal& a, const LogReal& b);
  LogReal log_plus() const;  // max(this, 0)

  // this <= o up to combined tolerances plus extra_tol.
  bool leq(const LogReal& o, double extra_tol = 0.0) const;
  // o - this, tolerances combined; requires both finite.
  LogReal slack_to(const LogReal& o) const;

  double to_double() const;
  std::string str(int significant_digits = 30) const;

 private:
  bool neg_inf_;
  Real v_;
  double tol_;
};

}  // namespace eisenkit

#endif
