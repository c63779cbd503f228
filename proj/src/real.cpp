#include "eisenkit/real.hpp"

#include <cassert>
#include <cstdio>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace eisenkit {

namespace {
mpfr_prec_t g_default_prec = 128;
}

mpfr_prec_t Real::default_precision() { return g_default_prec; }

void Real::set_default_precision(mpfr_prec_t bits) {
  if (bits < 64) bits = 64;
  g_default_prec = bits;
}

Real::Real() { mpfr_init2(x_, g_default_prec); mpfr_set_zero(x_, 1); }

Real::Real(double d) { mpfr_init2(x_, g_default_prec); mpfr_set_d(x_, d, MPFR_RNDN); }

Real::Real(const Real& o) {
  mpfr_init2(x_, mpfr_get_prec(o.x_));
  mpfr_set(x_, o.x_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(x_, mpfr_get_prec(o.x_));
  mpfr_swap(x_, o.x_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) mpfr_swap(x_, o.x_);
  return *this;
}

Real::~Real() { mpfr_clear(x_); }

Real Real::of_long(long v) {
  Real r;
  mpfr_set_si(r.x_, v, MPFR_RNDN);
  return r;
}

Real Real::of(const mpz_class& z) {
  Real r;
  mpfr_set_z(r.x_, z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::of(const mpq_class& q) {
  Real r;
  mpfr_set_q(r.x_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::log_of(const mpz_class& z) {
  if (z <= 0) throw std::domain_error("Real::log_of: non-positive integer");
  return of(z).log();
}

Real Real::log_of(const mpq_class& q) {
  if (q <= 0) throw std::domain_error("Real::log_of: non-positive rational");
  // log(num) - log(den) keeps each mpfr_log on an exact integer input.
  return log_of(mpq_class(q.get_num())) - log_of(mpq_class(q.get_den()));
}

Real Real::operator+(const Real& o) const {
  Real r;
  mpfr_add(r.x_, x_, o.x_, MPFR_RNDN);
  return r;
}

Real Real::operator-(const Real& o) const {
  Real r;
  mpfr_sub(r.x_, x_, o.x_, MPFR_RNDN);
  return r;
}

Real Real::operator*(const Real& o) const {
  Real r;
  mpfr_mul(r.x_, x_, o.x_, MPFR_RNDN);
  return r;
}

Real Real::operator/(const Real& o) const {
  Real r;
  mpfr_div(r.x_, x_, o.x_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& o) {
  mpfr_add(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r;
  mpfr_neg(r.x_, x_, MPFR_RNDN);
  return r;
}

Real Real::abs() const {
  Real r;
  mpfr_abs(r.x_, x_, MPFR_RNDN);
  return r;
}

Real Real::sqrt() const {
  Real r;
  mpfr_sqrt(r.x_, x_, MPFR_RNDN);
  return r;
}

Real Real::log() const {
  Real r;
  mpfr_log(r.x_, x_, MPFR_RNDN);
  return r;
}

Real Real::mul_q(const mpq_class& f) const {
  Real r;
  mpfr_mul_z(r.x_, x_, f.get_num().get_mpz_t(), MPFR_RNDN);
  mpfr_div_z(r.x_, r.x_, f.get_den().get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::max(const Real& a, const Real& b) { return a.cmp(b) >= 0 ? a : b; }
Real Real::min(const Real& a, const Real& b) { return a.cmp(b) <= 0 ? a : b; }

int Real::cmp(const Real& o) const { return mpfr_cmp(x_, o.x_); }
int Real::sign() const { return mpfr_sgn(x_); }

double Real::to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

std::string Real::str(int significant_digits) const {
  if (significant_digits < 2) significant_digits = 2;
  char fmt[32];
  std::snprintf(fmt, sizeof fmt, "%%.%dRg", significant_digits);
  std::vector<char> buf(significant_digits + 64);
  mpfr_snprintf(buf.data(), buf.size(), fmt, x_);
  return std::string(buf.data());
}

}  // namespace eisenkit
