#ifndef EISENKIT_POLY_HPP
#define EISENKIT_POLY_HPP

#include <utility>
#include <vector>

#include "eisenkit/errors.hpp"
#include "eisenkit/rational.hpp"

namespace eisenkit {

inline bool coeff_is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational coeff_inverse(const Rational& q) {
  if (sgn(q) == 0) throw DomainError("coeff_inverse: zero");
  return 1 / q;
}

// Dense univariate polynomial over a commutative coefficient ring C.
// C needs: default ctor (= 0), + - *, ==, coeff_is_zero(C).
template <class C>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<C> c) : c_(std::move(c)) { normalize(); }

  static Poly constant(C v) { return Poly(std::vector<C>{std::move(v)}); }
  static Poly monomial(C v, int deg) {
    std::vector<C> c(deg + 1);
    c[deg] = std::move(v);
    return Poly(std::move(c));
  }

  int degree() const { return (int)c_.size() - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }

  C coeff(int i) const {
    if (i < 0 || i >= (int)c_.size()) return C();
    return c_[i];
  }
  const C& lead() const {
    if (is_zero()) throw DomainError("Poly::lead: zero polynomial");
    return c_.back();
  }
  const std::vector<C>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const {
    std::vector<C> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff((int)i) + o.coeff((int)i);
    return Poly(std::move(r));
  }
  Poly operator-(const Poly& o) const {
    std::vector<C> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff((int)i) - o.coeff((int)i);
    return Poly(std::move(r));
  }
  Poly operator-() const {
    std::vector<C> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = C() - c_[i];
    return Poly(std::move(r));
  }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<C> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return Poly(std::move(r));
  }
  Poly scaled(const C& f) const {
    std::vector<C> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * f;
    return Poly(std::move(r));
  }
  bool operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == o.c_[i])) return false;
    return true;
  }

  Poly derivative() const {
    if (degree() < 1) return Poly();
    std::vector<C> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = mul_int(c_[i], (long)i);
    return Poly(std::move(r));
  }

  template <class X>
  X eval(const X& x) const {
    X acc = X();
    for (int i = degree(); i >= 0; --i) acc = acc * x + X(c_[i]);
    return acc;
  }

  // reverse of coefficients: x^deg * P(1/x)
  Poly reversed() const {
    std::vector<C> r(c_.rbegin(), c_.rend());
    return Poly(std::move(r));
  }

 private:
  static C mul_int(const C& v, long k) {
    // repeated doubling; k >= 0 here
    C acc = C();
    C base = v;
    long e = k;
    while (e) {
      if (e & 1) acc = acc + base;
      base = base + base;
      e >>= 1;
    }
    return acc;
  }
  void normalize() {
    while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<C> c_;
};

template <class C>
bool coeff_is_zero(const Poly<C>& p) {
  return p.is_zero();
}

using QPoly = Poly<Rational>;

// Field-coefficient division with remainder: a = q*b + r, deg r < deg b.
template <class C>
std::pair<Poly<C>, Poly<C>> poly_divrem(const Poly<C>& a, const Poly<C>& b) {
  if (b.is_zero()) throw DomainError("poly_divrem: division by zero polynomial");
  Poly<C> r = a;
  std::vector<C> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
  C inv_lead = coeff_inverse(b.lead());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int d = r.degree() - b.degree();
    C f = r.lead() * inv_lead;
    q[d] = f;
    r = r - Poly<C>::monomial(f, d) * b;
  }
  return {Poly<C>(std::move(q)), std::move(r)};
}

template <class C>
Poly<C> poly_divexact(const Poly<C>& a, const Poly<C>& b) {
  auto [q, r] = poly_divrem(a, b);
  if (!r.is_zero()) throw InternalError("poly_divexact: inexact division");
  return q;
}

// Monic gcd via Euclid over a coefficient field.
template <class C>
Poly<C> poly_gcd_monic(Poly<C> a, Poly<C> b) {
  while (!b.is_zero()) {
    auto [q, r] = poly_divrem(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(coeff_inverse(a.lead()));
}

// (mu, gamma): order of vanishing at 0 and the lowest nonzero coefficient.
std::pair<long, Rational> lowest_term(const QPoly& r);

// Primitive integer form of a rational-coefficient polynomial: coefficients
// scaled by one positive rational so they become coprime integers with
// positive leading coefficient.
std::vector<Integer> canonical_int_coeffs(const QPoly& p);

// Squarefree decomposition (Yun): list of (factor, multiplicity) with
// factors pairwise coprime, squarefree, monic.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f);

}  // namespace eisenkit

#endif
