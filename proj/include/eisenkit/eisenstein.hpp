#ifndef EISENKIT_EISENSTEIN_HPP
#define EISENKIT_EISENSTEIN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eisenkit/heights.hpp"
#include "eisenkit/puiseux.hpp"
#include "eisenkit/resultant.hpp"

namespace eisenkit {

enum class Variant { Regular, General, A0Regular, A0General };
enum class DivisorMode { Coefficient, RootBased };

std::string variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& s);

// One bound value A_v; the exact rational is present whenever the entry was
// built from coefficient data (always at finite places).
struct DivisorEntry {
  std::optional<Rational> exact;
  LogReal log_value;
  static DivisorEntry of(const Rational& v);
  static DivisorEntry approx(LogReal lv);
};

// Finite-support map from places of Q to bound values; A_v = 1 off support.
class MDivisor {
 public:
  void set(const Place& v, DivisorEntry e);
  const std::map<Place, DivisorEntry>& support() const { return sup_; }
  DivisorEntry at(const Place& v) const;
  LogReal height() const;   // sum of log+ A_v (d_v = 1 over Q)
  bool effective() const;   // all A_v >= 1
 private:
  std::map<Place, DivisorEntry> sup_;
};

struct VerificationFailure {
  Place v = Place::infinite();
  long k = 0;
  std::string lhs, rhs;
};

struct VerificationReport {
  std::vector<Place> checked_places;
  long max_k = 0;
  std::vector<VerificationFailure> failures;
  std::optional<LogReal> slack_min;
  // finite-place checks that hold with exactly zero slack
  std::vector<std::pair<Place, long>> zero_slack;
  long checks = 0;
  // outcome of the conjectural sharper general-case exponent, when requested
  long conjecture_checks = 0;
  long conjecture_failures = 0;
};

struct EisensteinCertificate {
  Variant variant = Variant::Regular;
  DivisorMode mode = DivisorMode::Coefficient;
  long e = 1;
  long kappa = 0;
  NormalizationRecord normalization;
  QBiPoly p_norm;       // floor(kappa/e)-normalized input
  QPoly r_over_gamma;   // R_P / gamma for p_norm
  long mu = 0;          // ord_z R_P
  long m = 0, n = 0;
  LogReal h_p;          // projective height of the input
  MDivisor a_div, a_prime_div;
  LogReal h_a, h_a_prime;
  LogReal theorem_bound;          // RHS for h(A) of the chosen variant
  LogReal a_prime_bound;          // h(P) + log 3
  LogReal drsvdp_main_term;       // (2n-1) h(P): printed for comparison only
};

// c(p,n): 1 for n < p <= infinity, np for p <= n.
Integer c_factor(const Place& v, long n);

// (A'_v, A_v) for a floor(kappa/e)-normalized w-separable polynomial.
std::pair<DivisorEntry, DivisorEntry> local_divisor(const QBiPoly& p_norm, const Place& v,
                                                    long e, Variant variant);

// Assembles the full certificate: normalization, both divisors over the
// complete support, heights, and the theorem bound.
EisensteinCertificate global_divisor(const QBiPoly& p, long e, long kappa, Variant variant,
                                     DivisorMode mode = DivisorMode::Coefficient);

// RHS of the height estimate for the chosen variant, given h(P).
LogReal theorem_height_bound(long m, long n, long e, Variant variant, const LogReal& h_p);

// Checks |a_k|_v <= (A'-part) A_v^{k/e - floor(kappa/e)} for every stored
// coefficient and every relevant place; exact at finite places, tolerance-
// aware at infinity. A nonempty failure list on valid inputs indicates an
// implementation bug. check_conjecture additionally evaluates the sharper
// (k - kappa)/e exponent, reporting but never asserting it.
VerificationReport verify_bounds(const EisensteinCertificate& cert, const PuiseuxSeries& branch,
                                 bool check_conjecture = false);

struct ExceptionalSetReport {
  LogReal bound;  // 3n (h(P) + log(mn) + 1)
  std::vector<Place> observed;
  LogReal observed_height;
  bool truncation_limited = true;
};

// Finite places where some stored coefficient of some branch exceeds 1 in
// absolute value for some extension; an under-approximation of the
// exceptional set, limited by the truncation.
ExceptionalSetReport exceptional_set_bound(const QBiPoly& p, const BranchSet& branches);

// sum over p <= n of log(np), exactly over the sieve primes.
LogReal prime_c_factor_log_sum(long n);

// pi(n) log n + sum_{p<=n} log p <= 2.3 n for all 1 <= n <= nmax.
bool prime_sum_bound_holds_up_to(long nmax);

}  // namespace eisenkit

#endif
