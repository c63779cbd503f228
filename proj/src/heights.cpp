#include "eisenkit/heights.hpp"

#include "eisenkit/errors.hpp"
#include "eisenkit/primes.hpp"

namespace eisenkit {

namespace {

// graded-lex leading monomial: total degree first, then z-exponent.
std::pair<long, long> leading_monomial(const QBiPoly& p) {
  std::pair<long, long> best{-1, -1};
  bool first = true;
  for (auto& [k, v] : p.monomials()) {
    (void)v;
    long t = k.first + k.second, bt = best.first + best.second;
    if (first || t > bt || (t == bt && k.first > best.first)) best = k, first = false;
  }
  return best;
}

}  // namespace

QBiPoly canonical_int_form(const QBiPoly& p) {
  if (p.is_zero()) throw DomainError("canonical_int_form: zero polynomial");
  Integer den_lcm = 1;
  for (auto& [k, v] : p.monomials()) {
    (void)k;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  }
  Integer content = 0;
  for (auto& [k, v] : p.monomials()) {
    (void)k;
    Integer c = Rational(v * den_lcm).get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  }
  Rational f(den_lcm, content);
  f.canonicalize();
  auto lead = leading_monomial(p);
  if (sgn(p.coeff(lead.first, lead.second)) < 0) f = -f;
  return p.scaled(f);
}

std::vector<Integer> canonical_int_coeffs(const QBiPoly& p) {
  QBiPoly c = canonical_int_form(p);
  std::vector<Integer> out;
  out.reserve(c.term_count());
  for (auto& [k, v] : c.monomials()) {
    (void)k;
    out.push_back(v.get_num());
  }
  return out;
}

LogReal height_poly(const QBiPoly& p) {
  std::vector<Integer> cs = canonical_int_coeffs(p);
  Integer mx = 0;
  for (const Integer& c : cs) {
    Integer a = abs(c);
    if (a > mx) mx = a;
  }
  return LogReal::log_of(mx);
}

LogReal height_poly_uni(const QPoly& p) {
  QBiPoly b;
  for (int i = 0; i <= p.degree(); ++i) b.add_term(i, 0, p.coeff(i));
  return height_poly(b);
}

Rational poly_max_abs_at_place(const QBiPoly& p, const Place& v) {
  if (p.is_zero()) throw DomainError("poly_max_abs_at_place: zero polynomial");
  Rational mx(0);
  for (auto& [k, c] : p.monomials()) {
    (void)k;
    Rational a = abs_at_place_exact(c, v);
    if (a > mx) mx = a;
  }
  return mx;
}

Rational poly_max_abs_at_place(const QPoly& p, const Place& v) {
  QBiPoly b;
  for (int i = 0; i <= p.degree(); ++i) b.add_term(i, 0, p.coeff(i));
  return poly_max_abs_at_place(b, v);
}

LogReal affine_height_rational(const Rational& q) {
  Integer n = abs(q.get_num());
  Integer mx = n > q.get_den() ? n : Integer(q.get_den());
  if (mx == 0) return LogReal::zero();  // h(0) = 0
  return LogReal::log_of(mx);
}

std::set<Integer> denominator_primes(const std::vector<Rational>& values) {
  std::set<Integer> out;
  for (const Rational& q : values) {
    Integer d = q.get_den();
    if (d == 1) continue;
    for (auto& [p, e] : factor(d)) {
      (void)e;
      out.insert(p);
    }
  }
  return out;
}

std::vector<Rational> all_coeffs(const QBiPoly& p) {
  std::vector<Rational> out;
  out.reserve(p.term_count());
  for (auto& [k, v] : p.monomials()) {
    (void)k;
    out.push_back(v);
  }
  return out;
}

std::vector<Rational> all_coeffs(const QPoly& p) {
  std::vector<Rational> out;
  for (int i = 0; i <= p.degree(); ++i)
    if (!coeff_is_zero(p.coeff(i))) out.push_back(p.coeff(i));
  return out;
}

}  // namespace eisenkit
