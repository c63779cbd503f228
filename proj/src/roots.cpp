#include "eisenkit/roots.hpp"

#include <algorithm>
#include <cmath>

#include "eisenkit/errors.hpp"

namespace eisenkit {

namespace {

double slop(const Real& v) {
  double a = std::fabs(v.to_double());
  if (a < 1.0) a = 1.0;
  return std::ldexp(a, -(int)(Real::default_precision() - 8));
}

double hypot_upper(const Real& re, const Real& im) {
  Real m = (re * re + im * im).sqrt();
  double d = m.to_double();
  return d + slop(m) + 1e-300;
}

Cpx eval_monic(const std::vector<Cpx>& coeffs, const Cpx& z) {
  // coeffs for degrees 0..s-1 of a monic polynomial of degree s
  Cpx acc(Real::of_long(1), Real());
  for (int i = (int)coeffs.size() - 1; i >= 0; --i) acc = acc * z + coeffs[i];
  return acc;
}

struct DKResult {
  std::vector<CBall> balls;
  bool ok = false;
};

// Durand-Kerner on a squarefree monic polynomial given by rational
// coefficients; certification by Weierstrass disks of radius s*|W_i|.
DKResult durand_kerner(const std::vector<Rational>& monic_coeffs, mpfr_prec_t prec,
                       int max_iter) {
  size_t s = monic_coeffs.size();  // degree
  mpfr_prec_t saved = Real::default_precision();
  Real::set_default_precision(prec);
  DKResult result;
  {
    std::vector<Cpx> c(s);
    double max_abs = 0;
    for (size_t i = 0; i < s; ++i) {
      c[i] = Cpx(Real::of(monic_coeffs[i]), Real());
      max_abs = std::max(max_abs, std::fabs(c[i].re.to_double()));
    }
    double r0 = 1.0 + max_abs;
    std::vector<Cpx> z(s);
    for (size_t i = 0; i < s; ++i) {
      double ang = 2.0 * M_PI * (double)i / (double)s + 0.377;
      z[i] = Cpx(Real(r0 * std::cos(ang)), Real(r0 * std::sin(ang)));
    }
    double target = std::ldexp(1.0, -(int)(prec / 2)) * (1.0 + max_abs);
    bool converged = false;
    for (int iter = 0; iter < max_iter; ++iter) {
      double worst = 0;
      for (size_t i = 0; i < s; ++i) {
        Cpx denom(Real::of_long(1), Real());
        for (size_t j = 0; j < s; ++j)
          if (j != i) denom = denom * (z[i] - z[j]);
        Cpx w = eval_monic(c, z[i]) / denom;
        z[i] = z[i] - w;
        worst = std::max(worst, std::sqrt(std::fabs(w.abs2().to_double())));
      }
      if (worst < target) {
        converged = true;
        break;
      }
    }
    if (converged) {
      // a posteriori Weierstrass disks
      result.balls.resize(s);
      bool fine = true;
      for (size_t i = 0; i < s; ++i) {
        Cpx denom(Real::of_long(1), Real());
        for (size_t j = 0; j < s; ++j)
          if (j != i) denom = denom * (z[i] - z[j]);
        Cpx w = eval_monic(c, z[i]) / denom;
        double wr = std::sqrt(std::fabs(w.abs2().to_double()));
        double rad = (double)s * wr * 1.0000001 + std::ldexp(1.0 + max_abs, -(int)prec + 10);
        result.balls[i] = CBall(z[i].re, z[i].im, rad);
      }
      // disks pairwise disjoint -> exactly one root each
      for (size_t i = 0; i < s && fine; ++i)
        for (size_t j = i + 1; j < s && fine; ++j) {
          Real dx = result.balls[i].re - result.balls[j].re;
          Real dy = result.balls[i].im - result.balls[j].im;
          double dist = std::sqrt(std::fabs((dx * dx + dy * dy).to_double()));
          if (dist <= result.balls[i].rad + result.balls[j].rad) fine = false;
        }
      result.ok = fine;
    }
  }
  Real::set_default_precision(saved);
  if (!result.ok) result.balls.clear();
  return result;
}

}  // namespace

std::vector<Cpx> durand_kerner_approx(const std::vector<Cpx>& monic_coeffs,
                                      int max_iter) {
  size_t s = monic_coeffs.size();
  std::vector<Cpx> z(s);
  double max_abs = 0;
  for (const Cpx& c : monic_coeffs)
    max_abs = std::max(max_abs, std::sqrt(std::fabs(c.abs2().to_double())));
  double r0 = 1.0 + max_abs;
  for (size_t i = 0; i < s; ++i) {
    double ang = 2.0 * M_PI * (double)i / (double)s + 0.377;
    z[i] = Cpx(Real(r0 * std::cos(ang)), Real(r0 * std::sin(ang)));
  }
  double target = std::ldexp(1.0, -(int)(Real::default_precision() / 2)) * (1.0 + max_abs);
  for (int iter = 0; iter < max_iter; ++iter) {
    double worst = 0;
    for (size_t i = 0; i < s; ++i) {
      Cpx denom(Real::of_long(1), Real());
      for (size_t j = 0; j < s; ++j)
        if (j != i) denom = denom * (z[i] - z[j]);
      Cpx w = eval_monic(monic_coeffs, z[i]) / denom;
      z[i] = z[i] - w;
      worst = std::max(worst, std::sqrt(std::fabs(w.abs2().to_double())));
    }
    if (worst < target) break;
  }
  return z;
}

CBall CBall::of(const Rational& q) {
  CBall b;
  b.re = Real::of(q);
  b.im = Real();
  b.rad = slop(b.re);
  if (q.get_den() == 1) b.rad = 0.0;  // small integers are exact at 128 bits
  return b;
}

CBall CBall::operator+(const CBall& o) const {
  CBall r(re + o.re, im + o.im, 0.0);
  r.rad = rad + o.rad + slop(r.re) + slop(r.im);
  return r;
}

CBall CBall::operator-(const CBall& o) const {
  CBall r(re - o.re, im - o.im, 0.0);
  r.rad = rad + o.rad + slop(r.re) + slop(r.im);
  return r;
}

CBall CBall::operator*(const CBall& o) const {
  CBall r(re * o.re - im * o.im, re * o.im + im * o.re, 0.0);
  double a = hypot_upper(re, im), b = hypot_upper(o.re, o.im);
  r.rad = a * o.rad + b * rad + rad * o.rad + slop(r.re) + slop(r.im);
  return r;
}

double CBall::abs_upper() const { return hypot_upper(re, im) + rad; }

double CBall::abs_lower() const {
  Real m = (re * re + im * im).sqrt();
  return m.to_double() - slop(m) - rad;
}

LogReal CBall::log_abs() const {
  double lo = abs_lower();
  if (lo <= 0) throw UnresolvedError("CBall::log_abs: ball touches zero");
  Real mid = (re * re + im * im).sqrt();
  Real v = mid.log();
  // |log(|z|) - log(mid)| <= log(1 + rad/lo)
  double t = std::log1p((rad + slop(mid)) / lo) + 1e-30;
  return LogReal::from(std::move(v), t);
}

std::vector<CertifiedRoot> complex_roots(const QPoly& f) {
  if (f.is_zero()) throw DomainError("complex_roots: zero polynomial");
  std::vector<CertifiedRoot> out;
  if (f.degree() == 0) return out;

  // strip exact zero roots
  long zord = 0;
  while (coeff_is_zero(f.coeff((int)zord))) ++zord;
  if (zord > 0) {
    CertifiedRoot zero;
    zero.ball = CBall(Real(), Real(), 0.0);
    zero.multiplicity = (int)zord;
    zero.exact = true;
    out.push_back(zero);
  }
  std::vector<Rational> shifted(f.coeffs().begin() + zord, f.coeffs().end());
  QPoly g(std::move(shifted));
  if (g.degree() == 0) return out;

  for (auto& [fac, mult] : squarefree_decomposition(g)) {
    if (fac.degree() == 1) {
      // rational root, exact when representable in the working precision
      Rational r = -fac.coeff(0) / fac.coeff(1);
      CertifiedRoot cr;
      cr.ball.re = Real::of(r);
      cr.ball.im = Real();
      size_t bits = mpz_sizeinbase(r.get_num().get_mpz_t(), 2);
      bool den_pow2 = mpz_popcount(r.get_den().get_mpz_t()) == 1;
      cr.exact = den_pow2 && bits + 2 < (size_t)Real::default_precision();
      cr.ball.rad = cr.exact ? 0.0 : slop(cr.ball.re);
      cr.multiplicity = mult;
      out.push_back(cr);
      continue;
    }
    std::vector<Rational> mc(fac.degree());
    Rational inv_lead = 1 / fac.lead();
    for (int i = 0; i < fac.degree(); ++i) mc[i] = fac.coeff(i) * inv_lead;
    bool done = false;
    mpfr_prec_t prec = Real::default_precision();
    int iters = 256;
    for (int attempt = 0; attempt < 4 && !done; ++attempt) {
      DKResult dk = durand_kerner(mc, prec, iters);
      if (dk.ok) {
        for (CBall& b : dk.balls) {
          // account for later rounding back to the default precision
          b.rad += slop(b.re) + slop(b.im);
          CertifiedRoot cr;
          cr.ball = std::move(b);
          cr.multiplicity = mult;
          out.push_back(cr);
        }
        done = true;
      } else {
        prec *= 2;
        iters *= 2;
      }
    }
    if (!done)
      throw UnresolvedError("complex_roots: certification failed at max precision");
  }
  return out;
}

LogReal log_sigma_smallest_nonzero(const QPoly& f) {
  bool found = false;
  LogReal best;
  for (const CertifiedRoot& r : complex_roots(f)) {
    if (r.exact && r.ball.re.sign() == 0 && r.ball.im.sign() == 0) continue;  // exact 0
    LogReal la = r.ball.log_abs();
    if (!found || la.value().cmp(best.value()) < 0) {
      best = la;
      found = true;
    }
  }
  if (!found) throw DomainError("log_sigma_smallest_nonzero: no nonzero roots");
  return best;
}

LogReal log_plus_sum_roots(const QPoly& f) {
  LogReal acc = LogReal::zero();
  for (const CertifiedRoot& r : complex_roots(f)) {
    if (r.exact && r.ball.re.sign() == 0 && r.ball.im.sign() == 0) continue;
    LogReal la;
    if (r.ball.abs_lower() <= 0) {
      // Ball touches zero: fine as long as the whole ball stays inside the
      // unit disk, where log+ vanishes.
      if (r.ball.abs_upper() >= 1)
        throw UnresolvedError("log_plus_sum_roots: unresolved root modulus");
      la = LogReal::zero();
    } else {
      la = r.ball.log_abs().log_plus();
    }
    acc += la.scaled(rat(r.multiplicity));
  }
  return acc;
}

}  // namespace eisenkit
