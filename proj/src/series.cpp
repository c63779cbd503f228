#include "eisenkit/series.hpp"

#include <algorithm>

#include "eisenkit/errors.hpp"

namespace eisenkit {

void LSeries::normalize() {
  if (prec_ >= kExactPrec) {
    prec_ = kExactPrec;
    while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
  }
  size_t drop = 0;
  while (drop < c_.size() && coeff_is_zero(c_[drop])) ++drop;
  if (drop > 0) {
    c_.erase(c_.begin(), c_.begin() + drop);
    lo_ += (long)drop;
  }
  if (!is_exact()) {
    if (lo_ > prec_) lo_ = prec_;
    c_.resize((size_t)(prec_ - lo_));
  } else if (c_.empty()) {
    lo_ = 0;
  }
}

LSeries LSeries::constant(const AlgNum& a) { return monomial(a, 0); }

LSeries LSeries::monomial(const AlgNum& a, long k) {
  LSeries s;
  s.lo_ = k;
  s.c_ = {a};
  s.prec_ = kExactPrec;
  s.normalize();
  return s;
}

LSeries LSeries::from_poly(const Poly<AlgNum>& p, long stride) {
  LSeries s;
  s.prec_ = kExactPrec;
  s.lo_ = 0;
  if (!p.is_zero()) {
    s.c_.resize((size_t)(p.degree() * stride + 1));
    for (int i = 0; i <= p.degree(); ++i) s.c_[(size_t)(i * stride)] = p.coeff(i);
  }
  s.normalize();
  return s;
}

LSeries LSeries::make(long lo, std::vector<AlgNum> coeffs, long prec) {
  LSeries s;
  s.lo_ = lo;
  s.c_ = std::move(coeffs);
  s.prec_ = prec;
  s.normalize();
  return s;
}

AlgNum LSeries::coeff(long k) const {
  if (!is_exact() && k >= prec_)
    throw UnresolvedError("LSeries::coeff: index beyond precision");
  if (k < lo_ || k >= lo_ + (long)c_.size()) return AlgNum();
  return c_[(size_t)(k - lo_)];
}

std::optional<long> LSeries::first_nonzero() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!coeff_is_zero(c_[i])) return lo_ + (long)i;
  return std::nullopt;
}

long LSeries::eff_ord() const {
  auto fn = first_nonzero();
  return fn ? *fn : prec_;
}

LSeries LSeries::truncated(long new_prec) const {
  if (new_prec >= prec_) return *this;
  LSeries s = *this;
  s.prec_ = new_prec;
  if (s.lo_ >= new_prec) {
    s.c_.clear();
    s.lo_ = new_prec;
  } else if ((long)s.c_.size() > new_prec - s.lo_) {
    s.c_.resize((size_t)(new_prec - s.lo_));
  }
  s.normalize();
  return s;
}

LSeries LSeries::padded_to(long new_prec) const {
  if (is_exact() || new_prec <= prec_) return truncated(std::min(new_prec, prec_));
  LSeries s = *this;
  s.prec_ = new_prec;
  s.normalize();
  return s;
}

LSeries LSeries::operator+(const LSeries& o) const {
  long prec = std::min(prec_, o.prec_);
  long lo = std::min(lo_, o.lo_);
  long hi = std::min(prec, std::max(lo_ + (long)c_.size(), o.lo_ + (long)o.c_.size()));
  if (hi < lo) hi = lo;
  std::vector<AlgNum> cs((size_t)(hi - lo));
  for (long k = lo; k < hi; ++k) {
    AlgNum a = (k >= lo_ && k < lo_ + (long)c_.size()) ? c_[(size_t)(k - lo_)] : AlgNum();
    AlgNum b = (k >= o.lo_ && k < o.lo_ + (long)o.c_.size()) ? o.c_[(size_t)(k - o.lo_)] : AlgNum();
    cs[(size_t)(k - lo)] = a + b;
  }
  return make(lo, std::move(cs), prec);
}

LSeries LSeries::operator-(const LSeries& o) const { return *this + o.scaled(AlgNum(Rational(-1))); }

LSeries LSeries::operator*(const LSeries& o) const {
  long ea = eff_ord(), eb = o.eff_ord();
  long prec;
  if (is_exact() && o.is_exact()) {
    prec = kExactPrec;
  } else {
    long pa = o.prec_ >= kExactPrec ? kExactPrec : ea + o.prec_;
    long pb = prec_ >= kExactPrec ? kExactPrec : eb + prec_;
    prec = std::min(pa, pb);
    prec = std::min(prec, (long)kExactPrec);
  }
  if (c_.empty() || o.c_.empty()) {
    // one factor is known-zero through its precision
    LSeries s;
    s.prec_ = prec;
    s.lo_ = std::min(prec, lo_ + o.lo_);
    s.normalize();
    return s;
  }
  long lo = lo_ + o.lo_;
  long hi = lo + (long)c_.size() + (long)o.c_.size() - 1;
  if (prec < kExactPrec) hi = std::min(hi, prec);
  std::vector<AlgNum> cs((size_t)std::max(0L, hi - lo));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (coeff_is_zero(c_[i])) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      long k = lo_ + (long)i + o.lo_ + (long)j;
      if (k - lo >= (long)cs.size()) break;
      cs[(size_t)(k - lo)] = cs[(size_t)(k - lo)] + c_[i] * o.c_[j];
    }
  }
  return make(lo, std::move(cs), prec);
}

LSeries LSeries::scaled(const AlgNum& f) const {
  LSeries s = *this;
  for (AlgNum& x : s.c_) x = x * f;
  s.normalize();
  return s;
}

LSeries LSeries::shifted(long k) const {
  LSeries s = *this;
  s.lo_ += k;
  if (!s.is_exact()) s.prec_ += k;
  return s;
}

LSeries LSeries::inverse(long to_prec) const {
  auto fn = first_nonzero();
  if (!fn) throw DomainError("LSeries::inverse: no known nonzero coefficient");
  long u = *fn;
  long len = to_prec + u;  // coefficients b_0..b_{len-1} of the t^{-u} part
  if (len <= 0) {
    LSeries s;
    s.prec_ = to_prec;
    s.lo_ = to_prec;
    s.normalize();
    return s;
  }
  if (!is_exact() && u + len > prec_)
    throw UnresolvedError("LSeries::inverse: not enough terms");
  AlgNum inv0 = coeff(u).inverse();
  std::vector<AlgNum> b((size_t)len);
  b[0] = inv0;
  for (long m = 1; m < len; ++m) {
    AlgNum acc;
    for (long i = 1; i <= m; ++i) {
      AlgNum ai = (is_exact() || u + i < prec_) ? coeff(u + i) : AlgNum();
      if (ai.is_zero()) continue;
      acc = acc + ai * b[(size_t)(m - i)];
    }
    b[(size_t)m] = -(inv0 * acc);
  }
  return make(-u, std::move(b), to_prec);
}

bool LSeries::known_zero_through(long k) const {
  if (!is_exact() && k > prec_) return false;
  for (size_t i = 0; i < c_.size(); ++i) {
    long idx = lo_ + (long)i;
    if (idx >= k) break;
    if (!coeff_is_zero(c_[i])) return false;
  }
  return true;
}

}  // namespace eisenkit
