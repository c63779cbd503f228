#ifndef EISENKIT_BIPOLY_HPP
#define EISENKIT_BIPOLY_HPP

#include <map>
#include <utility>

#include "eisenkit/poly.hpp"

namespace eisenkit {

// Sparse bivariate polynomial P(z,w); monomial map (z-exp, w-exp) -> coeff
// with no stored zeros.
template <class C>
class BiPoly {
 public:
  using Key = std::pair<long, long>;

  BiPoly() = default;

  void add_term(long ze, long we, const C& v) {
    if (coeff_is_zero(v)) return;
    auto it = m_.find({ze, we});
    if (it == m_.end()) {
      m_.emplace(Key{ze, we}, v);
    } else {
      it->second = it->second + v;
      if (coeff_is_zero(it->second)) m_.erase(it);
    }
  }

  C coeff(long ze, long we) const {
    auto it = m_.find({ze, we});
    return it == m_.end() ? C() : it->second;
  }

  bool is_zero() const { return m_.empty(); }
  const std::map<Key, C>& monomials() const { return m_; }
  size_t term_count() const { return m_.size(); }

  long degree_z() const {
    long d = -1;
    for (auto& [k, v] : m_) d = std::max(d, k.first);
    return d;
  }
  long degree_w() const {
    long d = -1;
    for (auto& [k, v] : m_) d = std::max(d, k.second);
    return d;
  }
  long ord_z() const {
    if (is_zero()) throw DomainError("BiPoly::ord_z: zero polynomial");
    long d = m_.begin()->first.first;
    for (auto& [k, v] : m_) d = std::min(d, k.first);
    return d;
  }
  long ord_w() const {
    if (is_zero()) throw DomainError("BiPoly::ord_w: zero polynomial");
    long d = m_.begin()->first.second;
    for (auto& [k, v] : m_) d = std::min(d, k.second);
    return d;
  }

  BiPoly operator+(const BiPoly& o) const {
    BiPoly r = *this;
    for (auto& [k, v] : o.m_) r.add_term(k.first, k.second, v);
    return r;
  }
  BiPoly operator-(const BiPoly& o) const {
    BiPoly r = *this;
    for (auto& [k, v] : o.m_) r.add_term(k.first, k.second, C() - v);
    return r;
  }
  BiPoly operator*(const BiPoly& o) const {
    BiPoly r;
    for (auto& [ka, va] : m_)
      for (auto& [kb, vb] : o.m_)
        r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
    return r;
  }
  bool operator==(const BiPoly& o) const {
    if (m_.size() != o.m_.size()) return false;
    for (auto& [k, v] : m_) {
      auto it = o.m_.find(k);
      if (it == o.m_.end() || !(it->second == v)) return false;
    }
    return true;
  }

  BiPoly scaled(const C& f) const {
    BiPoly r;
    for (auto& [k, v] : m_) r.add_term(k.first, k.second, v * f);
    return r;
  }

  BiPoly derivative_w() const {
    BiPoly r;
    for (auto& [k, v] : m_) {
      if (k.second == 0) continue;
      C acc = C();
      for (long t = 0; t < k.second; ++t) acc = acc + v;
      r.add_term(k.first, k.second - 1, acc);
    }
    return r;
  }

  Poly<C> at_z_zero() const {
    std::vector<C> c;
    for (auto& [k, v] : m_) {
      if (k.first != 0) continue;
      if ((long)c.size() <= k.second) c.resize(k.second + 1);
      c[k.second] = v;
    }
    return Poly<C>(std::move(c));
  }

  // P as a polynomial in w with coefficients in C[z].
  Poly<Poly<C>> w_major() const {
    long n = degree_w();
    if (n < 0) return Poly<Poly<C>>();
    std::vector<std::vector<C>> cs(n + 1);
    for (auto& [k, v] : m_) {
      auto& col = cs[k.second];
      if ((long)col.size() <= k.first) col.resize(k.first + 1);
      col[k.first] = v;
    }
    std::vector<Poly<C>> out(n + 1);
    for (long j = 0; j <= n; ++j) out[j] = Poly<C>(std::move(cs[j]));
    return Poly<Poly<C>>(std::move(out));
  }

  static BiPoly from_w_major(const Poly<Poly<C>>& p) {
    BiPoly r;
    for (int j = 0; j <= p.degree(); ++j) {
      Poly<C> col = p.coeff(j);
      for (int i = 0; i <= col.degree(); ++i) r.add_term(i, j, col.coeff(i));
    }
    return r;
  }

  // Multiply by z^d; d < 0 requires ord_z >= -d.
  BiPoly shift_z(long d) const {
    BiPoly r;
    for (auto& [k, v] : m_) {
      if (k.first + d < 0) throw DomainError("BiPoly::shift_z: negative exponent");
      r.add_term(k.first + d, k.second, v);
    }
    return r;
  }

  BiPoly div_w(long d) const {
    BiPoly r;
    for (auto& [k, v] : m_) {
      if (k.second - d < 0) throw DomainError("BiPoly::div_w: negative exponent");
      r.add_term(k.first, k.second - d, v);
    }
    return r;
  }

  // P(z, w0): a polynomial in z.
  Poly<C> eval_w(const C& w0) const {
    long n = degree_w();
    Poly<Poly<C>> wm = w_major();
    Poly<C> acc;
    for (long j = n; j >= 0; --j) acc = acc.scaled(w0) + wm.coeff(j);
    return acc;
  }

 private:
  std::map<Key, C> m_;
};

using QBiPoly = BiPoly<Rational>;

template <class C>
bool coeff_is_zero(const BiPoly<C>& p) {
  return p.is_zero();
}

// Record of the moderate normalization z^N P(z, z^k w) / scaling.
struct NormalizationRecord {
  long z_power_stripped = 0;  // N
  long k = 0;
  Rational scaling = Rational(1);  // applied factor: P_norm = scaling * z^N P(z, z^k w)
};

// The k-normalization: strips the z-power so the result is not divisible by
// z, then scales so the w-polynomial at z = 0 is monic. The nonzero
// coefficient multiset is that of P times the single scaling factor.
std::pair<QBiPoly, NormalizationRecord> k_normalize(const QBiPoly& p, long k);

// P(z, w + alpha), exact binomial expansion.
QBiPoly translate_w(const QBiPoly& p, const Rational& alpha);

}  // namespace eisenkit

#endif
