#ifndef EISENKIT_DISCBOUNDS_HPP
#define EISENKIT_DISCBOUNDS_HPP

#include <optional>
#include <vector>

#include "eisenkit/eisenstein.hpp"

namespace eisenkit {

// Degrees lambda_k = [L : Q(a_0, ..., a_{k-1})] for a branch whose
// coefficients live in a declared field of degree <= 2 over Q; beyond that
// the chain is reported partially.
struct LambdaChain {
  std::vector<long> degrees;  // lambda_0, lambda_1, ... until stable at 1
  long resolved_up_to = 0;    // coefficients examined
  bool fully_resolved = false;
  long nu_lower = 1;               // certain lower bound for [L:Q]
  std::optional<long> nu_exact;    // present when fully resolved
};

LambdaChain lambda_chain(const PuiseuxSeries& branch);

struct LsumResult {
  bool resolved = false;
  bool holds = false;
  Rational lhs;              // sum k/e (lambda_k - lambda_{k+1})
  Rational rhs;              // ord_z P'_w(z, f(z))
  bool rhs_infinite = false;
};

// Exact check of the coefficient-field degree-drop inequality against
// ord_z P'_w(z, f); a false result on resolved inputs indicates a bug.
// Integral case only: requires p_n(0) != 0.
LsumResult check_lsum(const PuiseuxSeries& branch, const LambdaChain& chain, const QBiPoly& p);

enum class DiscVariant { Integral, General, Friendly };

struct DiscriminantReport {
  DiscVariant formula = DiscVariant::Friendly;
  long m = 0, n = 0;
  long E = 1;                          // max ramification index over branches
  LogReal h_p;
  long ord_z_disc = 0;                 // ord_z D(z)
  std::vector<LogReal> bound_per_branch;
  std::vector<std::optional<LogReal>> actual_per_branch;  // when computable
  LogReal bound_sum;
  std::optional<LogReal> actual_sum;   // cycle-weighted, when all branches resolve
  std::vector<long> nu_per_branch;     // the nu each per-branch bound used
  std::vector<Rational> ord_pw;        // ord_z P'_w(z, f_i), Integral variant
  bool unresolved = false;             // some needed ord/chain did not resolve
};

// Evaluates the selected discriminant bound. Integral requires p_n(0) != 0
// and per-branch ord data; Friendly substitutes ord_z D <= 2m(n-1) (its
// general-case analogue is used automatically when p_n(0) = 0); General uses
// the ord_z D form valid without the integrality assumption.
DiscriminantReport discriminant_bound(const QBiPoly& p, const BranchSet& branches,
                                      DiscVariant variant);

// Normalized logarithmic discriminant of a field of degree <= 2 over Q:
// 0 in degree 1; log|disc| / 2 in degree 2 via the squarefree-kernel rule.
LogReal actual_partial_discriminant(const FieldPtr& f);

// Silverman-type generator bound: 2(nu - 1) h(alpha) + log nu.
LogReal generator_discriminant_bound(const AlgNum& alpha);

}  // namespace eisenkit

#endif
