#include "eisenkit/bipoly.hpp"

namespace eisenkit {

std::pair<QBiPoly, NormalizationRecord> k_normalize(const QBiPoly& p, long k) {
  if (p.is_zero()) throw DomainError("k_normalize: zero polynomial");
  // Substitute w -> z^k w; exponents (i, j) -> (i + k j, j).
  long min_z = 0;
  bool first = true;
  for (auto& [key, v] : p.monomials()) {
    (void)v;
    long ze = key.first + k * key.second;
    if (first || ze < min_z) min_z = ze, first = false;
  }
  QBiPoly shifted;
  for (auto& [key, v] : p.monomials())
    shifted.add_term(key.first + k * key.second - min_z, key.second, v);

  Rational lead = shifted.at_z_zero().lead();
  Rational scaling = 1 / lead;
  NormalizationRecord rec;
  rec.z_power_stripped = -min_z;
  rec.k = k;
  rec.scaling = scaling;
  return {shifted.scaled(scaling), rec};
}

QBiPoly translate_w(const QBiPoly& p, const Rational& alpha) {
  long n = p.degree_w();
  // binomial(j, t) alpha^{j-t} table
  std::vector<std::vector<Rational>> binom(n + 1);
  for (long j = 0; j <= n; ++j) {
    binom[j].resize(j + 1);
    for (long t = 0; t <= j; ++t) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), j, t);
      binom[j][t] = Rational(b) * rat_pow(alpha, j - t);
    }
  }
  QBiPoly r;
  for (auto& [key, v] : p.monomials())
    for (long t = 0; t <= key.second; ++t)
      r.add_term(key.first, t, v * binom[key.second][t]);
  return r;
}

}  // namespace eisenkit
