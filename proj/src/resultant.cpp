#include "eisenkit/resultant.hpp"

#include <vector>

#include "eisenkit/heights.hpp"

namespace eisenkit {

namespace {

using WPoly = Poly<QPoly>;  // polynomial in w over Q[z]

QPoly bareiss_det(std::vector<std::vector<QPoly>> m) {
  size_t k = m.size();
  if (k == 0) return QPoly::constant(Rational(1));
  int sign = 1;
  QPoly denom = QPoly::constant(Rational(1));
  for (size_t c = 0; c + 1 < k; ++c) {
    size_t piv = c;
    while (piv < k && m[piv][c].is_zero()) ++piv;
    if (piv == k) return QPoly();
    if (piv != c) {
      std::swap(m[piv], m[c]);
      sign = -sign;
    }
    for (size_t i = c + 1; i < k; ++i) {
      for (size_t j = c + 1; j < k; ++j) {
        QPoly t = m[c][c] * m[i][j] - m[i][c] * m[c][j];
        m[i][j] = poly_divexact(t, denom);
      }
      m[i][c] = QPoly();
    }
    denom = m[c][c];
  }
  QPoly det = m[k - 1][k - 1];
  return sign < 0 ? -det : det;
}

QPoly qpoly_pow(const QPoly& b, long e) {
  QPoly acc = QPoly::constant(Rational(1));
  for (long i = 0; i < e; ++i) acc = acc * b;
  return acc;
}

// Pseudo-remainder: lc(b)^{deg a - deg b + 1} a mod b, all over Q[z].
WPoly pseudo_rem(const WPoly& a, const WPoly& b) {
  QPoly d = b.lead();
  long e = a.degree() - b.degree() + 1;
  WPoly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    WPoly s = WPoly::monomial(r.lead(), r.degree() - b.degree()) * b;
    r = r.scaled(d) - s;
    --e;
  }
  for (long i = 0; i < e; ++i) r = r.scaled(d);
  return r;
}

QPoly content_z(const WPoly& a) {
  QPoly g;
  for (const QPoly& c : a.coeffs()) g = poly_gcd_monic(g, c);
  return g;
}

WPoly divide_content(const WPoly& a, const QPoly& cont) {
  std::vector<QPoly> out(a.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) {
    if (a.coeffs()[i].is_zero())
      out[i] = QPoly();
    else
      out[i] = poly_divexact(a.coeffs()[i], cont);
  }
  return WPoly(std::move(out));
}

WPoly primitive_part(const WPoly& a) {
  if (a.is_zero()) return a;
  return divide_content(a, content_z(a));
}

// Long division in w over Q[z], exact by assumption (checked).
WPoly divexact_w(const WPoly& a, const WPoly& b) {
  WPoly r = a;
  std::vector<QPoly> q(a.degree() - b.degree() + 1);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    QPoly f = poly_divexact(r.lead(), b.lead());
    long d = r.degree() - b.degree();
    q[d] = f;
    r = r - WPoly::monomial(f, d) * b;
  }
  if (!r.is_zero()) throw InternalError("divexact_w: inexact division");
  return WPoly(std::move(q));
}

}  // namespace

QPoly resultant_w(const QBiPoly& p, const QBiPoly& q) {
  if (p.is_zero() || q.is_zero())
    throw DomainError("resultant_w: zero polynomial");
  WPoly a = p.w_major(), b = q.w_major();
  long na = a.degree(), nb = b.degree();
  if (na == 0 && nb == 0) return QPoly::constant(Rational(1));
  if (nb == 0) return qpoly_pow(b.coeff(0), na);
  if (na == 0) return qpoly_pow(a.coeff(0), nb);
  size_t k = (size_t)(na + nb);
  std::vector<std::vector<QPoly>> m(k, std::vector<QPoly>(k));
  for (long r = 0; r < nb; ++r)
    for (long t = 0; t <= na; ++t) m[r][r + t] = a.coeff((int)(na - t));
  for (long r = 0; r < na; ++r)
    for (long t = 0; t <= nb; ++t) m[nb + r][r + t] = b.coeff((int)(nb - t));
  return bareiss_det(std::move(m));
}

QPoly resultant_w_self(const QBiPoly& p) {
  if (p.degree_w() < 1)
    throw DomainError("resultant_w_self: needs positive w-degree");
  return resultant_w(p, p.derivative_w());
}

bool is_w_separable(const QBiPoly& p) {
  if (p.is_zero()) return false;
  if (p.degree_w() < 1) return true;
  return !resultant_w_self(p).is_zero();
}

QPoly discriminant_w(const QBiPoly& p) {
  if (p.degree_w() < 1) throw DomainError("discriminant_w: needs deg_w >= 1");
  QPoly res = resultant_w_self(p);
  QPoly pn = p.w_major().lead();
  if (res.is_zero()) return QPoly();
  return poly_divexact(res, pn);
}

Poly<QPoly> subresultant_gcd_w(Poly<QPoly> a, Poly<QPoly> b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  if (a.degree() < b.degree()) std::swap(a, b);
  a = primitive_part(a);
  b = primitive_part(b);
  QPoly g = QPoly::constant(Rational(1));
  QPoly h = QPoly::constant(Rational(1));
  for (;;) {
    long delta = a.degree() - b.degree();
    WPoly r = pseudo_rem(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) return WPoly::constant(QPoly::constant(Rational(1)));
    // r / (g h^delta), exact by the subresultant theory
    QPoly div = g * qpoly_pow(h, delta);
    a = b;
    b = divide_content(r, div);
    g = a.lead();
    if (delta > 0) h = poly_divexact(qpoly_pow(g, delta), qpoly_pow(h, delta - 1));
  }
  if (b.degree() == 0) return WPoly::constant(QPoly::constant(Rational(1)));
  return primitive_part(b);
}

QBiPoly squarefree_part_w(const QBiPoly& p) {
  if (p.degree_w() < 1) throw DomainError("squarefree_part_w: needs deg_w >= 1");
  WPoly a = p.w_major();
  WPoly da = p.derivative_w().w_major();
  WPoly g = subresultant_gcd_w(a, da);
  QBiPoly out;
  if (g.degree() == 0) {
    out = p;
  } else {
    WPoly quot = divexact_w(primitive_part(a), g);
    out = QBiPoly::from_w_major(quot);
  }
  return canonical_int_form(out);
}

}  // namespace eisenkit
