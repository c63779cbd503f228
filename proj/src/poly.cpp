#include "eisenkit/poly.hpp"

namespace eisenkit {

std::pair<long, Rational> lowest_term(const QPoly& r) {
  if (r.is_zero()) throw DomainError("lowest_term: zero polynomial");
  for (long i = 0; i <= r.degree(); ++i)
    if (!coeff_is_zero(r.coeff(i))) return {i, r.coeff(i)};
  throw InternalError("lowest_term: unnormalized polynomial");
}

std::vector<Integer> canonical_int_coeffs(const QPoly& p) {
  if (p.is_zero()) throw DomainError("canonical_int_coeffs: zero polynomial");
  Integer den_lcm = 1;
  for (const Rational& c : p.coeffs())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Integer> out(p.coeffs().size());
  Integer content = 0;
  for (size_t i = 0; i < out.size(); ++i) {
    Rational v = p.coeffs()[i] * den_lcm;
    out[i] = v.get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
  }
  int lead_sign = sgn(out.back());
  for (Integer& c : out) {
    c /= content;
    if (lead_sign < 0) c = -c;
  }
  return out;
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f) {
  std::vector<std::pair<QPoly, int>> out;
  if (f.degree() < 1) return out;
  QPoly a = f.scaled(coeff_inverse(f.lead()));
  QPoly g = poly_gcd_monic(a, a.derivative());
  QPoly b = poly_divexact(a, g);
  QPoly c = poly_divexact(a.derivative(), g);
  QPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() >= 1) {
    QPoly fac = poly_gcd_monic(b, d);
    if (fac.degree() >= 1) out.emplace_back(fac, i);
    b = poly_divexact(b, fac);
    c = poly_divexact(d, fac);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace eisenkit
