#include "eisenkit/numberfield.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "eisenkit/errors.hpp"
#include "eisenkit/heights.hpp"
#include "eisenkit/parse.hpp"
#include "eisenkit/primes.hpp"

namespace eisenkit {

namespace {

// ---- F_p polynomial helpers for the irreducibility witness ----

using FpPoly = std::vector<uint64_t>;  // little-endian, normalized

void fp_normalize(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_from(const QPoly& g, uint64_t p) {
  FpPoly out(g.degree() + 1);
  for (int i = 0; i <= g.degree(); ++i) {
    Integer c = g.coeff(i).get_num();  // integer coefficients assumed
    Integer r = c % (long)p;
    if (r < 0) r += (long)p;
    out[i] = r.get_ui();
  }
  fp_normalize(out);
  return out;
}

// reduce x in place by a polynomial y with invertible leading coefficient
void fp_reduce(FpPoly& x, const FpPoly& y, uint64_t p) {
  uint64_t inv = 1, base = y.back(), e = p - 2;
  while (e) {
    if (e & 1) inv = (uint64_t)((__uint128_t)inv * base % p);
    base = (uint64_t)((__uint128_t)base * base % p);
    e >>= 1;
  }
  while (x.size() >= y.size()) {
    uint64_t c = (uint64_t)((__uint128_t)x.back() * inv % p);
    size_t sh = x.size() - y.size();
    if (c)
      for (size_t i = 0; i + 1 < y.size(); ++i) {
        uint64_t sub = (uint64_t)((__uint128_t)c * y[i] % p);
        x[sh + i] = (x[sh + i] + p - sub) % p;
      }
    x.pop_back();
    fp_normalize(x);
    if (x.empty()) break;
  }
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (uint64_t)((r[i + j] + (__uint128_t)a[i] * b[j]) % p);
  fp_normalize(r);
  fp_reduce(r, mod, p);
  return r;
}

FpPoly fp_powmod(FpPoly base, Integer e, const FpPoly& mod, uint64_t p) {
  FpPoly r{1};
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = fp_mulmod(r, base, mod, p);
    base = fp_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, uint64_t p) {
  while (!b.empty()) {
    fp_reduce(a, b, p);
    std::swap(a, b);
  }
  return a;
}

FpPoly fp_derivative(const FpPoly& a, uint64_t p) {
  if (a.size() <= 1) return {};
  FpPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = (__uint128_t)a[i] * (i % p) % p;
  fp_normalize(r);
  return r;
}

// g monic integer polynomial; true iff g mod p is irreducible, by the
// distinct-degree criterion.
bool irreducible_mod_p(const QPoly& g, uint64_t p) {
  FpPoly gp = fp_from(g, p);
  if (gp.size() != (size_t)g.degree() + 1) return false;  // degree dropped
  long d = g.degree();
  if (d == 1) return true;
  if (fp_gcd(gp, fp_derivative(gp, p), p).size() > 1) return false;
  FpPoly x{0, 1};
  // x^(p^d) == x mod g
  FpPoly h = x;
  for (long k = 0; k < d; ++k) h = fp_powmod(h, Integer((unsigned long)p), gp, p);
  FpPoly diff = h;
  // diff -= x
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = (diff[1] + p - 1) % p;
  fp_normalize(diff);
  if (!diff.empty()) return false;
  // gcd(x^(p^(d/q)) - x, g) = 1 for prime q | d
  for (long q = 2; q <= d; ++q) {
    if (d % q != 0) continue;
    bool isprime = true;
    for (long t = 2; t * t <= q; ++t)
      if (q % t == 0) isprime = false;
    if (!isprime) continue;
    FpPoly hq = x;
    for (long k = 0; k < d / q; ++k) hq = fp_powmod(hq, Integer((unsigned long)p), gp, p);
    FpPoly diffq = hq;
    if (diffq.size() < 2) diffq.resize(2, 0);
    diffq[1] = (diffq[1] + p - 1) % p;
    fp_normalize(diffq);
    FpPoly gg = fp_gcd(gp, diffq, p);
    if (gg.size() > 1) return false;
  }
  return true;
}

// ---- exact linear algebra over Q ----

// Solve A x = b (rows x cols, rows >= cols expected), unique solution or
// nothing. Columns are assumed independent when a solution exists.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  std::vector<size_t> pivot_row(cols, SIZE_MAX);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && sgn(a[pr][c]) == 0) ++pr;
    if (pr == rows) continue;
    std::swap(a[pr], a[r]);
    std::swap(b[pr], b[r]);
    Rational inv = 1 / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_row[c] = r;
    ++r;
  }
  // consistency of the remaining rows
  for (size_t i = r; i < rows; ++i)
    if (sgn(b[i]) != 0) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (size_t c = 0; c < cols; ++c) {
    if (pivot_row[c] == SIZE_MAX) return std::nullopt;  // underdetermined
    x[c] = b[pivot_row[c]];
  }
  return x;
}

FieldPtr g_rational_field;

}  // namespace

FieldPtr make_field(const QPoly& modulus) {
  if (modulus.degree() < 1) throw DomainError("make_field: modulus must have degree >= 1");
  if (modulus.lead() != 1) throw DomainError("make_field: modulus must be monic");
  for (const Rational& c : modulus.coeffs())
    if (c.get_den() != 1) throw DomainError("make_field: modulus must have integer coefficients");
  QPoly g = poly_gcd_monic(modulus, modulus.derivative());
  if (g.degree() > 0) throw DomainError("make_field: modulus is not squarefree");

  auto data = std::make_shared<NumberFieldData>();
  data->modulus = modulus;
  if (modulus.degree() > 1) {
    std::vector<uint64_t> ps = primes_up_to(1000);
    int tried = 0;
    for (uint64_t p : ps) {
      if (tried >= 50) break;
      FpPoly gp = fp_from(modulus, p);
      if (gp.size() != (size_t)modulus.degree() + 1) continue;  // degree drop
      FpPoly der = fp_derivative(gp, p);
      FpPoly gg = fp_gcd(gp, der, p);
      if (gg.size() > 1) continue;  // not squarefree mod p
      ++tried;
      if (irreducible_mod_p(modulus, p)) {
        data->irreducibility_witness = p;
        break;
      }
    }
  }
  std::vector<CertifiedRoot> roots = complex_roots(modulus);
  for (const CertifiedRoot& cr : roots)
    for (int t = 0; t < cr.multiplicity; ++t) data->embeddings.push_back(cr.ball);
  std::sort(data->embeddings.begin(), data->embeddings.end(),
            [](const CBall& a, const CBall& b) {
              int c = a.re.cmp(b.re);
              if (c != 0) return c < 0;
              return a.im.cmp(b.im) < 0;
            });
  if ((long)data->embeddings.size() != modulus.degree())
    throw InternalError("make_field: embedding count mismatch");
  return data;
}

FieldPtr field_with_precision(const FieldPtr& f, mpfr_prec_t bits) {
  mpfr_prec_t saved = Real::default_precision();
  Real::set_default_precision(bits);
  FieldPtr out;
  try {
    out = make_field(f->modulus);
  } catch (...) {
    Real::set_default_precision(saved);
    throw;
  }
  Real::set_default_precision(saved);
  return out;
}

FieldPtr rational_field() {
  if (!g_rational_field)
    g_rational_field = make_field(QPoly({Rational(0), Rational(1)}));  // x
  return g_rational_field;
}

AlgNum::AlgNum(FieldPtr f, std::vector<Rational> coords) : f_(std::move(f)), co_(std::move(coords)) {
  if (!f_) throw DomainError("AlgNum: null field");
  if ((long)co_.size() > f_->degree())
    throw DomainError("AlgNum: more coordinates than the field degree");
  co_.resize(f_->degree(), Rational(0));
  if (f_->degree() == 1) f_ = nullptr;  // degree-1 fields collapse to Q
  if (co_.empty()) co_.push_back(Rational(0));
}

AlgNum AlgNum::generator(const FieldPtr& f) {
  if (f->degree() == 1) return AlgNum(-f->modulus.coeff(0));
  std::vector<Rational> co(f->degree(), Rational(0));
  co[1] = 1;
  return AlgNum(f, std::move(co));
}

bool AlgNum::is_zero() const {
  for (const Rational& c : co_)
    if (sgn(c) != 0) return false;
  return true;
}

bool AlgNum::is_rational() const {
  for (size_t i = 1; i < co_.size(); ++i)
    if (sgn(co_[i]) != 0) return false;
  return true;
}

Rational AlgNum::as_rational() const {
  if (!is_rational()) throw DomainError("AlgNum::as_rational: not rational");
  return co_[0];
}

void AlgNum::align(AlgNum& a, AlgNum& b) {
  if (a.f_ == b.f_) return;
  if (!a.f_ && b.f_) {
    Rational v = a.co_[0];
    a.f_ = b.f_;
    a.co_.assign(b.f_->degree(), Rational(0));
    a.co_[0] = v;
    return;
  }
  if (a.f_ && !b.f_) {
    align(b, a);
    return;
  }
  if (a.f_->modulus == b.f_->modulus) return;  // same field, different handle
  throw DomainError("AlgNum: arithmetic across different fields");
}

AlgNum AlgNum::operator+(const AlgNum& o) const {
  AlgNum a = *this, b = o;
  align(a, b);
  for (size_t i = 0; i < a.co_.size(); ++i) a.co_[i] += b.co_[i];
  return a;
}

AlgNum AlgNum::operator-(const AlgNum& o) const {
  AlgNum a = *this, b = o;
  align(a, b);
  for (size_t i = 0; i < a.co_.size(); ++i) a.co_[i] -= b.co_[i];
  return a;
}

AlgNum AlgNum::operator-() const {
  AlgNum a = *this;
  for (Rational& c : a.co_) c = -c;
  return a;
}

AlgNum AlgNum::operator*(const AlgNum& o) const {
  AlgNum a = *this, b = o;
  align(a, b);
  if (!a.f_) {
    a.co_[0] *= b.co_[0];
    return a;
  }
  QPoly pa{std::vector<Rational>(a.co_)}, pb{std::vector<Rational>(b.co_)};
  QPoly prod = pa * pb;
  if (prod.degree() >= a.f_->degree())
    prod = poly_divrem(prod, a.f_->modulus).second;
  std::vector<Rational> co(a.f_->degree(), Rational(0));
  for (int i = 0; i <= prod.degree(); ++i) co[i] = prod.coeff(i);
  return AlgNum(a.f_, std::move(co));
}

bool AlgNum::operator==(const AlgNum& o) const {
  AlgNum a = *this, b = o;
  align(a, b);
  return a.co_ == b.co_;
}

AlgNum AlgNum::inverse() const {
  if (is_zero()) throw DomainError("AlgNum::inverse: zero");
  if (!f_) {
    AlgNum r = *this;
    r.co_[0] = 1 / r.co_[0];
    return r;
  }
  // extended Euclid in Q[x] against the modulus
  QPoly r0 = f_->modulus, r1{std::vector<Rational>(co_)};
  QPoly s0, s1 = QPoly::constant(Rational(1));  // coefficients on this element
  while (!r1.is_zero()) {
    auto [q, r2] = poly_divrem(r0, r1);
    QPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() > 0) {
    if (f_->verified())
      throw InternalError("AlgNum::inverse: zero divisor in a verified field");
    throw DomainError(
        "AlgNum::inverse: zero divisor detected; the declared modulus is reducible");
  }
  QPoly inv = s0.scaled(coeff_inverse(r0.coeff(0)));
  if (inv.degree() >= f_->degree()) inv = poly_divrem(inv, f_->modulus).second;
  std::vector<Rational> co(f_->degree(), Rational(0));
  for (int i = 0; i <= inv.degree(); ++i) co[i] = inv.coeff(i);
  return AlgNum(f_, std::move(co));
}

AlgNum AlgNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  AlgNum acc(Rational(1)), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

CBall AlgNum::embed(size_t j) const {
  if (!f_) return CBall::of(co_[0]);
  if (j >= f_->embeddings.size()) throw DomainError("AlgNum::embed: bad embedding index");
  const CBall& th = f_->embeddings[j];
  CBall acc = CBall::of(co_.back());
  for (size_t i = co_.size() - 1; i-- > 0;) acc = acc * th + CBall::of(co_[i]);
  return acc;
}

std::string AlgNum::str() const {
  if (is_rational()) return print_rational(co_[0]);
  return print_unipoly(QPoly{std::vector<Rational>(co_)}, 'x');
}

QPoly min_poly(const AlgNum& alpha) {
  if (alpha.is_rational()) return QPoly({-alpha.as_rational(), Rational(1)});
  const FieldPtr& f = alpha.field();
  if (!f->verified())
    throw DomainError("min_poly: field modulus not certified irreducible");
  long d = f->degree();
  std::vector<AlgNum> powers(d + 1);
  powers[0] = AlgNum(Rational(1));
  for (long k = 1; k <= d; ++k) powers[k] = powers[k - 1] * alpha;
  auto padded = [d](const AlgNum& x) {
    std::vector<Rational> co = x.coords();
    co.resize((size_t)d, Rational(0));
    return co;
  };
  for (long k = 1; k <= d; ++k) {
    // alpha^k = sum_j x_j alpha^j, j < k ?
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(k));
    std::vector<Rational> b(d);
    std::vector<std::vector<Rational>> pw;
    for (long j = 0; j <= k; ++j) pw.push_back(padded(powers[j]));
    for (long row = 0; row < d; ++row) {
      for (long j = 0; j < k; ++j) a[row][j] = pw[j][row];
      b[row] = pw[k][row];
    }
    auto sol = solve_linear(std::move(a), std::move(b));
    if (sol) {
      std::vector<Rational> mc(k + 1);
      for (long j = 0; j < k; ++j) mc[j] = -(*sol)[j];
      mc[k] = 1;
      return QPoly(std::move(mc));
    }
  }
  throw InternalError("min_poly: no relation found up to the field degree");
}

NewtonPolygonNP newton_polygon_padic(const QPoly& h, const Integer& p) {
  if (h.is_zero()) throw DomainError("newton_polygon_padic: zero polynomial");
  struct Pt {
    long i;
    Rational v;
  };
  std::vector<Pt> pts;
  for (int i = 0; i <= h.degree(); ++i) {
    if (coeff_is_zero(h.coeff(i))) continue;
    pts.push_back({i, rat(rat_valuation(h.coeff(i), p))});
  }
  std::vector<Pt> hull;
  for (const Pt& q : pts) {
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull[hull.size() - 1];
      // cross((b-a),(q-a)) <= 0 -> b is above or on the segment a-q
      Rational cross = rat(b.i - a.i) * (q.v - a.v) - (b.v - a.v) * rat(q.i - a.i);
      if (sgn(cross) <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(q);
  }
  NewtonPolygonNP np;
  for (const Pt& q : hull) np.vertices.push_back({q.i, q.v});
  for (size_t t = 1; t < hull.size(); ++t) {
    Rational slope = (hull[t].v - hull[t - 1].v) / rat(hull[t].i - hull[t - 1].i);
    np.slopes.push_back({slope, hull[t].i - hull[t - 1].i});
  }
  return np;
}

Rational conjugate_norm_exponent_at_p(const AlgNum& alpha, const Integer& p) {
  if (alpha.is_zero()) throw DomainError("conjugate_norm_exponent_at_p: zero");
  if (alpha.is_rational()) return rat(-rat_valuation(alpha.as_rational(), p));
  QPoly h = min_poly(alpha);
  NewtonPolygonNP np = newton_polygon_padic(h, p);
  if (np.slopes.empty()) throw InternalError("conjugate_norm_exponent_at_p: no slopes");
  return np.slopes.back().slope;  // slopes increase; max slope = -min valuation
}

LogReal conjugate_norm_max(const AlgNum& alpha, const Place& v) {
  if (alpha.is_zero()) return LogReal::neg_infinity();
  if (!v.is_infinite()) {
    Rational e = conjugate_norm_exponent_at_p(alpha, v.prime());
    return LogReal::log_of(v.prime()).scaled(e);
  }
  if (alpha.is_rational()) return LogReal::log_abs(alpha.as_rational());
  FieldPtr f = alpha.field();
  mpfr_prec_t prec = Real::default_precision();
  for (int attempt = 0; attempt < 4; ++attempt) {
    AlgNum a = alpha;
    if (attempt > 0) {
      prec *= 2;
      FieldPtr hi = field_with_precision(f, prec);
      a = AlgNum(hi, std::vector<Rational>(alpha.coords()));
    }
    bool ok = true;
    LogReal best;
    bool first = true;
    for (size_t j = 0; j < (size_t)a.field()->degree(); ++j) {
      CBall b = a.embed(j);
      if (b.abs_lower() <= 0) {
        ok = false;
        break;
      }
      LogReal la = b.log_abs();
      best = first ? la : LogReal::max(best, la);
      first = false;
    }
    if (ok) return best;
  }
  throw UnresolvedError("conjugate_norm_max: embeddings unresolved at max precision");
}

LogReal height_algnum(const AlgNum& alpha) {
  if (alpha.is_zero()) return LogReal::zero();
  if (alpha.is_rational()) return affine_height_rational(alpha.as_rational());
  QPoly h = min_poly(alpha);
  std::vector<Integer> ic = canonical_int_coeffs(h);
  Integer lead = ic.back();
  if (lead < 0) lead = -lead;
  LogReal acc = LogReal::log_of(lead) + log_plus_sum_roots(h);
  return acc.scaled(Rational(1, (long)h.degree()));
}

Rational rational_round(const Real& x, const Integer& den_bound) {
  // exact dyadic value of x
  mpz_class mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x.raw());
  Rational v(mant);
  if (e >= 0) {
    mpz_mul_2exp(mpq_numref(v.get_mpq_t()), mpq_numref(v.get_mpq_t()), (mp_bitcnt_t)e);
  } else {
    mpz_mul_2exp(mpq_denref(v.get_mpq_t()), mpq_denref(v.get_mpq_t()), (mp_bitcnt_t)(-e));
  }
  v.canonicalize();
  if (v.get_den() <= den_bound) return v;
  // continued fraction convergents
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Integer num = v.get_num(), den = v.get_den();
  while (den != 0) {
    Integer a = num / den;       // floor for positive den
    Integer r = num - a * den;   // handles negative num via floor correction
    if (r < 0) {
      a -= 1;
      r += den;
    }
    Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > den_bound) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    num = den;
    den = r;
  }
  Rational out(p1, q1);
  out.canonicalize();
  return out;
}

FieldRoots roots_in_field(const FPoly& h_in, const FieldPtr& f_in) {
  if (h_in.is_zero()) throw DomainError("roots_in_field: zero polynomial");
  FieldPtr f = f_in ? f_in : rational_field();
  long d = f->degree();
  FieldRoots out;
  FPoly h = h_in.scaled(coeff_inverse(h_in.lead()));
  // exact zero roots
  long zord = 0;
  while (coeff_is_zero(h.coeff((int)zord))) ++zord;
  if (zord > 0) out.roots.push_back({AlgNum(Rational(0)), (int)zord});
  if (zord > 0) {
    std::vector<AlgNum> c(h.coeffs().begin() + zord, h.coeffs().end());
    h = FPoly(std::move(c));
  }
  if (h.degree() == 0) return out;

  FPoly sf = h;
  {
    FPoly g = poly_gcd_monic(h, h.derivative());
    if (g.degree() > 0) sf = poly_divexact(h, g);
  }

  // per-embedding numerical roots
  long s = sf.degree();
  std::vector<std::vector<Cpx>> lists((size_t)d);
  for (long j = 0; j < d; ++j) {
    std::vector<Cpx> mc((size_t)s);
    for (long i = 0; i < s; ++i) {
      CBall b = sf.coeff((int)i).embed((size_t)j);
      mc[(size_t)i] = Cpx(b.re, b.im);
    }
    lists[(size_t)j] = durand_kerner_approx(mc);
  }

  Integer den_bound = Integer(1) << (unsigned long)(Real::default_precision() / 3);
  double tol = std::ldexp(1.0, -(int)(Real::default_precision() / 4));

  // candidate tuples (one numerical root per embedding) -> linear solve
  // against embedded powers of th -> rational rounding -> exact verification
  std::vector<AlgNum> verified;
  size_t total = 1;
  for (long j = 0; j < d; ++j) {
    total *= (size_t)s;
    if (total > 4096) break;
  }
  if (total > 4096) {
    out.possibly_outside.push_back("(search space too large; roots may be missing)");
    total = 0;
  }
  std::vector<size_t> idx((size_t)d, 0);
  for (size_t t = 0; t < total; ++t) {
    size_t rem = t;
    for (long j = 0; j < d; ++j) {
      idx[(size_t)j] = rem % (size_t)s;
      rem /= (size_t)s;
    }
    // Vandermonde solve: sum_i x_i th_j^i = r_j
    std::vector<std::vector<Cpx>> m((size_t)d, std::vector<Cpx>((size_t)d));
    std::vector<Cpx> rhs((size_t)d);
    for (long j = 0; j < d; ++j) {
      Cpx th(f->embeddings[(size_t)j].re, f->embeddings[(size_t)j].im);
      Cpx pw(Real::of_long(1), Real());
      for (long i = 0; i < d; ++i) {
        m[(size_t)j][(size_t)i] = pw;
        pw = pw * th;
      }
      rhs[(size_t)j] = lists[(size_t)j][idx[(size_t)j]];
    }
    // Gaussian elimination over Cpx
    bool singular = false;
    for (long c = 0; c < d && !singular; ++c) {
      long piv = c;
      double best = -1;
      for (long r2 = c; r2 < d; ++r2) {
        double mag = std::fabs(m[(size_t)r2][(size_t)c].abs2().to_double());
        if (mag > best) best = mag, piv = r2;
      }
      if (best <= 0) {
        singular = true;
        break;
      }
      std::swap(m[(size_t)piv], m[(size_t)c]);
      std::swap(rhs[(size_t)piv], rhs[(size_t)c]);
      for (long r2 = 0; r2 < d; ++r2) {
        if (r2 == c) continue;
        Cpx fct = m[(size_t)r2][(size_t)c] / m[(size_t)c][(size_t)c];
        for (long cc = c; cc < d; ++cc)
          m[(size_t)r2][(size_t)cc] = m[(size_t)r2][(size_t)cc] - fct * m[(size_t)c][(size_t)cc];
        rhs[(size_t)r2] = rhs[(size_t)r2] - fct * rhs[(size_t)c];
      }
    }
    if (singular) continue;
    std::vector<Rational> co((size_t)d);
    bool plausible = true;
    for (long i = 0; i < d && plausible; ++i) {
      Cpx xi = rhs[(size_t)i] / m[(size_t)i][(size_t)i];
      double scale = 1.0 + std::fabs(xi.re.to_double());
      if (std::fabs(xi.im.to_double()) > tol * scale) {
        plausible = false;
        break;
      }
      Rational rounded = rational_round(xi.re, den_bound);
      double err = std::fabs((xi.re - Real::of(rounded)).to_double());
      if (err > tol * scale) {
        plausible = false;
        break;
      }
      co[(size_t)i] = rounded;
    }
    if (!plausible) continue;
    AlgNum beta = d == 1 ? AlgNum(co[0]) : AlgNum(f, co);
    bool dup = false;
    for (const AlgNum& v : verified)
      if (v == beta) dup = true;
    if (dup) continue;
    AlgNum val = sf.eval(beta);
    if (val.is_zero()) verified.push_back(beta);
  }

  // multiplicities against the full h, deterministic order
  std::sort(verified.begin(), verified.end(), [](const AlgNum& a, const AlgNum& b) {
    return a.coords() < b.coords();
  });
  for (const AlgNum& beta : verified) {
    FPoly lin({-beta, AlgNum(Rational(1))});
    int mult = 0;
    FPoly rest = h;
    for (;;) {
      auto [q, r] = poly_divrem(rest, lin);
      if (!r.is_zero()) break;
      ++mult;
      rest = q;
      if (rest.degree() < 1) break;
    }
    if (mult == 0) throw InternalError("roots_in_field: verified root fails division");
    out.roots.push_back({beta, mult});
  }

  // unmatched first-embedding approximations
  for (long i = 0; i < s; ++i) {
    const Cpx& r = lists[0][(size_t)i];
    bool matched = false;
    for (const AlgNum& beta : verified) {
      CBall b = beta.embed(0);
      Real dx = b.re - r.re, dy = b.im - r.im;
      double dist = std::sqrt(std::fabs((dx * dx + dy * dy).to_double()));
      if (dist <= 1e4 * (b.rad + tol)) matched = true;
    }
    if (!matched)
      out.possibly_outside.push_back(r.re.str(12) +
                                     (r.im.sign() >= 0 ? "+" : "") + r.im.str(12) + "i");
  }
  return out;
}

}  // namespace eisenkit
