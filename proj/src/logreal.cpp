#include "eisenkit/logreal.hpp"

#include <cmath>
#include <stdexcept>

namespace eisenkit {

namespace {

// One generously rounded-up ulp of v at working precision, used as the error
// contribution of a single rounded operation.
double ulp_bound(const Real& v) {
  double a = std::fabs(v.to_double());
  if (a < 1.0) a = 1.0;
  return std::ldexp(a, -(int)(Real::default_precision() - 8));
}

}  // namespace

LogReal LogReal::neg_infinity() {
  LogReal r;
  r.neg_inf_ = true;
  return r;
}

LogReal LogReal::from(Real v, double tol) {
  LogReal r;
  r.v_ = std::move(v);
  r.tol_ = tol;
  return r;
}

LogReal LogReal::log_of(const mpz_class& z) {
  Real v = Real::log_of(z);
  double t = ulp_bound(v);
  return from(std::move(v), t);
}

LogReal LogReal::log_of(const mpq_class& q) {
  Real v = Real::log_of(q);
  double t = 2 * ulp_bound(v);
  return from(std::move(v), t);
}

LogReal LogReal::log_abs(const mpq_class& q) {
  if (q == 0) return neg_infinity();
  return log_of(mpq_class(abs(q)));
}

const Real& LogReal::value() const {
  if (neg_inf_) throw std::domain_error("LogReal: value() on NegInf sentinel");
  return v_;
}

LogReal LogReal::operator+(const LogReal& o) const {
  if (neg_inf_ || o.neg_inf_) return neg_infinity();
  Real v = v_ + o.v_;
  double t = tol_ + o.tol_ + ulp_bound(v);
  return from(std::move(v), t);
}

LogReal LogReal::operator-(const LogReal& o) const {
  if (o.neg_inf_) throw std::domain_error("LogReal: subtracting NegInf");
  if (neg_inf_) return neg_infinity();
  Real v = v_ - o.v_;
  double t = tol_ + o.tol_ + ulp_bound(v);
  return from(std::move(v), t);
}

LogReal& LogReal::operator+=(const LogReal& o) {
  *this = *this + o;
  return *this;
}

LogReal LogReal::scaled(const mpq_class& f) const {
  if (neg_inf_) {
    if (f > 0) return neg_infinity();
    if (f == 0) return zero();
    throw std::domain_error("LogReal: negative power of NegInf");
  }
  Real v = v_.mul_q(f);
  double t = tol_ * std::fabs(f.get_d()) + ulp_bound(v);
  return from(std::move(v), t);
}

LogReal LogReal::scaled_long(long f) const { return scaled(mpq_class(f)); }

LogReal LogReal::max(const LogReal& a, const LogReal& b) {
  if (a.neg_inf_) return b;
  if (b.neg_inf_) return a;
  LogReal r;
  r.v_ = Real::max(a.v_, b.v_);
  r.tol_ = std::max(a.tol_, b.tol_);
  return r;
}

LogReal LogReal::log_plus() const { return max(*this, zero()); }

bool LogReal::leq(const LogReal& o, double extra_tol) const {
  if (neg_inf_) return true;
  if (o.neg_inf_) return false;
  Real rhs = o.v_ + Real(tol_ + o.tol_ + extra_tol);
  return v_.cmp(rhs) <= 0;
}

LogReal LogReal::slack_to(const LogReal& o) const {
  if (neg_inf_ || o.neg_inf_)
    throw std::domain_error("LogReal: slack with NegInf operand");
  Real v = o.v_ - v_;
  double t = tol_ + o.tol_ + ulp_bound(v);
  return from(std::move(v), t);
}

double LogReal::to_double() const {
  if (neg_inf_) return -std::numeric_limits<double>::infinity();
  return v_.to_double();
}

std::string LogReal::str(int significant_digits) const {
  if (neg_inf_) return "-inf";
  return v_.str(significant_digits);
}

}  // namespace eisenkit
