#ifndef EISENKIT_PUISEUX_HPP
#define EISENKIT_PUISEUX_HPP

#include <optional>
#include <string>
#include <vector>

#include "eisenkit/bipoly.hpp"
#include "eisenkit/series.hpp"

namespace eisenkit {

// Truncated branch f(z) = sum_{k=kappa}^{K} a_k z^{k/e} (+ tail unless exact).
struct PuiseuxSeries {
  FieldPtr field;
  long e = 1;
  long kappa = 0;
  long K = -1;               // stored indices kappa..K
  std::vector<AlgNum> a;     // a[i] = a_{kappa+i}
  bool exact = false;        // no tail: all coefficients beyond K vanish
  bool kappa_minimal = false;

  AlgNum coeff(long k) const;  // zero below kappa and, for exact series, above K
  bool is_zero() const;
  LSeries as_lseries() const;  // in t = z^{1/e}
};

struct UnrealizedBranch {
  long e_partial = 1;
  long kappa_partial = 0;
  std::string characteristic_poly;
  long count = 0;    // number of Puiseux solutions this entry stands for
  bool uncertain = false;  // numeric reconstruction was inconclusive
};

struct BranchSet {
  std::vector<PuiseuxSeries> branches;
  std::vector<UnrealizedBranch> unrealized;
  bool complete = false;  // all n series realized in the declared field
  long n = 0;
};

// The unique power series f with f(0) = a0 and P(z, f) = 0, under the
// regular-case conditions P(0, a0) = 0 and P'_w(0, a0) != 0 (checked
// exactly). Quadratic Newton lifting; the final residue is verified.
PuiseuxSeries expand_regular(const QBiPoly& p, const AlgNum& a0, long K);

// Full Newton-polygon branch enumeration over the declared field. P must be
// w-separable; a leading z-power is stripped first. Branch coefficients are
// found through roots_in_field; characteristic roots outside the field
// produce UnrealizedBranch records. Each emitted branch is one
// representative of its ramification cycle (the cycle accounts for e
// conjugate series).
BranchSet puiseux_branches(const QBiPoly& p, const FieldPtr& f, long K);

struct OrdResult {
  bool resolved = false;
  bool infinite = false;   // composition is identically zero
  Rational ord;            // exponent in z, valid when resolved && !infinite
  long K = 0;              // truncation that produced an unresolved answer
};

// Exact order of Q(z, f(z)) as a Puiseux series, when the first nonzero
// coefficient is visible within the propagated precision window; otherwise
// unresolved(K).
OrdResult ord_z_of_series_composition(const QBiPoly& q, const PuiseuxSeries& f);

struct SupNormResult {
  enum class Status { Resolved, Unresolved, NegInf } status = Status::Unresolved;
  Rational log_p_exponent;  // log_p M(r), exact
  long attained_k = 0;
  bool tail_checked = false;
};

// log_p M(r) = max_k ( -v_p(a_k) + (k/e) log_p r ) for r = p^{r_exp},
// restricted to rational-coefficient branches. When divisor data
// (A'_p, A_p) is supplied, the tail beyond the truncation is checked to be
// dominated; an undominated tail gives Unresolved.
SupNormResult padic_sup_norm(const PuiseuxSeries& f, const Integer& p,
                             const Rational& r_exp,
                             const std::optional<std::pair<Rational, Rational>>& tail_divisor);

// Invariant helper: no nonzero coefficient of P(z, f(z)) at exponent <= K/e.
bool residue_check(const QBiPoly& p, const PuiseuxSeries& f);

}  // namespace eisenkit

#endif
