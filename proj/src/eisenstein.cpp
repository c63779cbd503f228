#include "eisenkit/eisenstein.hpp"

#include <algorithm>
#include <set>

#include "eisenkit/errors.hpp"
#include "eisenkit/primes.hpp"

namespace eisenkit {

namespace {

// exact comparison p^rho <= q * A^x over positive rationals; *equal reports
// exact equality
bool p_power_leq(const Integer& p, const Rational& rho, const Rational& q, const Rational& a,
                 const Rational& x, bool* equal) {
  Integer lden;
  mpz_lcm(lden.get_mpz_t(), rho.get_den().get_mpz_t(), x.get_den().get_mpz_t());
  long den = (long)lden.get_si();
  Rational lhs = rat_pow(Rational(p), (long)Rational(rho * den).get_num().get_si());
  Rational rhs = rat_pow(q, den) * rat_pow(a, (long)Rational(x * den).get_num().get_si());
  if (equal) *equal = lhs == rhs;
  return lhs <= rhs;
}

// exact comparison |l| <= q * A^x for rational l
bool rational_leq(const Rational& labs, const Rational& q, const Rational& a, const Rational& x,
                  bool* equal) {
  long den = (long)x.get_den().get_si();
  Rational lhs = rat_pow(labs, den);
  Rational rhs = rat_pow(q, den) * rat_pow(a, (long)Rational(x * den).get_num().get_si());
  if (equal) *equal = lhs == rhs;
  return lhs <= rhs;
}


}  // namespace

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Regular: return "Regular";
    case Variant::General: return "General";
    case Variant::A0Regular: return "A0Regular";
    case Variant::A0General: return "A0General";
  }
  return "?";
}

std::optional<Variant> variant_from_name(const std::string& s) {
  if (s == "Regular" || s == "regular") return Variant::Regular;
  if (s == "General" || s == "general") return Variant::General;
  if (s == "A0Regular" || s == "a0regular" || s == "a0-regular") return Variant::A0Regular;
  if (s == "A0General" || s == "a0general" || s == "a0-general") return Variant::A0General;
  return std::nullopt;
}

DivisorEntry DivisorEntry::of(const Rational& v) {
  DivisorEntry e;
  e.exact = v;
  e.log_value = LogReal::log_of(v);
  return e;
}

DivisorEntry DivisorEntry::approx(LogReal lv) {
  DivisorEntry e;
  e.log_value = std::move(lv);
  return e;
}

void MDivisor::set(const Place& v, DivisorEntry e) { sup_[v] = std::move(e); }

DivisorEntry MDivisor::at(const Place& v) const {
  auto it = sup_.find(v);
  if (it != sup_.end()) return it->second;
  return DivisorEntry::of(Rational(1));
}

LogReal MDivisor::height() const {
  LogReal h = LogReal::zero();
  for (auto& [v, e] : sup_) {
    (void)v;
    h += e.log_value.log_plus();
  }
  return h;
}

bool MDivisor::effective() const {
  for (auto& [v, e] : sup_) {
    (void)v;
    if (e.exact) {
      if (*e.exact < 1) return false;
    } else if (!LogReal::zero().leq(e.log_value)) {
      return false;
    }
  }
  return true;
}

Integer c_factor(const Place& v, long n) {
  if (n < 1) throw DomainError("c_factor: n must be positive");
  if (v.is_infinite()) return 1;
  if (v.prime() > n) return 1;
  return Integer(n) * v.prime();
}

namespace {

std::pair<DivisorEntry, DivisorEntry> local_divisor_impl(const QBiPoly& p_norm,
                                                         const QPoly& r_over_gamma,
                                                         const Place& v, long e, long n,
                                                         Variant variant, DivisorMode mode) {
  Rational p_abs = poly_max_abs_at_place(p_norm, v);
  Rational r_abs = poly_max_abs_at_place(r_over_gamma, v);
  bool a0 = variant == Variant::A0Regular || variant == Variant::A0General;
  long e_eff = (variant == Variant::Regular || variant == Variant::A0Regular) ? 1 : e;
  DivisorEntry aprime, abig;
  if (v.is_infinite()) {
    Rational lhs = Rational(2) * r_abs;
    Rational rhs = rat_pow(Rational(Rational(6) * p_abs), n);
    Rational core = lhs > rhs ? lhs : rhs;
    Rational a = a0 ? Rational(rat_pow(Rational(Rational(8) * p_abs), e_eff) * core) : core;
    abig = DivisorEntry::of(a);
    aprime = DivisorEntry::of(a0 ? Rational(1) : Rational(Rational(3) * p_abs));
  } else {
    Rational c(c_factor(v, n));
    Rational lhs = rat_pow(c, e_eff) * r_abs;
    Rational rhs = rat_pow(p_abs, n);
    Rational core = lhs > rhs ? lhs : rhs;
    Rational a = a0 ? Rational(rat_pow(p_abs, e_eff) * core) : core;
    abig = DivisorEntry::of(a);
    aprime = DivisorEntry::of(a0 ? Rational(1) : p_abs);
  }
  (void)mode;  // the root-based variant only changes the infinite entry and
               // is applied by the caller
  return {aprime, abig};
}

}  // namespace

std::pair<DivisorEntry, DivisorEntry> local_divisor(const QBiPoly& p_norm, const Place& v,
                                                    long e, Variant variant) {
  long n = p_norm.degree_w();
  if (n < 1) throw DomainError("local_divisor: needs deg_w >= 1");
  QPoly r = resultant_w_self(p_norm);
  if (r.is_zero())
    throw DomainError(
        "local_divisor: polynomial is not w-separable; take squarefree_part_w first");
  auto [mu, gamma] = lowest_term(r);
  (void)mu;
  QPoly r_over_gamma = r.scaled(1 / gamma);
  return local_divisor_impl(p_norm, r_over_gamma, v, e, n, variant,
                            DivisorMode::Coefficient);
}

LogReal theorem_height_bound(long m, long n, long e, Variant variant, const LogReal& h_p) {
  if (m < 1 || n < 1 || e < 1)
    throw DomainError("theorem_height_bound: requires m, n, e >= 1");
  LogReal logmn = LogReal::log_of(Integer(Integer(m) * Integer(n)));
  LogReal b;
  switch (variant) {
    case Variant::Regular:
      b = h_p.scaled(rat(3 * n - 1)) + logmn.scaled(rat(3 * n)) +
          LogReal::from(Real::of_long(7 * n), 0.0);
      break;
    case Variant::General:
      b = h_p.scaled(rat(3 * n - 1)) + logmn.scaled(rat(3 * n)) +
          LogReal::from(Real::of_long(7 * e * n), 0.0);
      break;
    case Variant::A0Regular:
      b = h_p.scaled(rat(3 * n)) + logmn.scaled(rat(3 * n)) +
          LogReal::from(Real::of_long(10 * n), 0.0);
      break;
    case Variant::A0General:
      b = h_p.scaled(rat(3 * n + e - 1)) + logmn.scaled(rat(3 * n)) +
          LogReal::from(Real::of_long(10 * e * n), 0.0);
      break;
  }
  return b;
}

EisensteinCertificate global_divisor(const QBiPoly& p, long e, long kappa, Variant variant,
                                     DivisorMode mode) {
  if (p.is_zero()) throw DomainError("global_divisor: zero polynomial");
  if (e < 1) throw DomainError("global_divisor: e must be >= 1");
  EisensteinCertificate cert;
  cert.variant = variant;
  cert.mode = mode;
  cert.e = e;
  cert.kappa = kappa;
  cert.m = p.degree_z();
  cert.n = p.degree_w();
  if (cert.n < 1) throw DomainError("global_divisor: needs deg_w >= 1");
  if (cert.m < 1)
    throw DomainError("global_divisor: needs deg_z >= 1 for the height bound");
  if (!is_w_separable(p))
    throw DomainError(
        "global_divisor: polynomial is not w-separable; take squarefree_part_w first");

  auto [p_norm, rec] = k_normalize(p, floor_div(kappa, e));
  cert.normalization = rec;
  cert.p_norm = p_norm;
  QPoly r = resultant_w_self(p_norm);
  auto [mu, gamma] = lowest_term(r);
  cert.mu = mu;
  cert.r_over_gamma = r.scaled(1 / gamma);
  cert.h_p = height_poly(p);

  // support: infinity, p <= n, and primes in coefficient denominators
  std::set<Integer> primes;
  for (uint64_t q : primes_up_to((uint64_t)std::max(cert.n, 1L)))
    primes.insert(Integer((unsigned long)q));
  for (const Integer& q : denominator_primes(all_coeffs(p_norm))) primes.insert(q);
  for (const Integer& q : denominator_primes(all_coeffs(cert.r_over_gamma))) primes.insert(q);

  auto add_place = [&](const Place& v) {
    auto [aprime, abig] =
        local_divisor_impl(p_norm, cert.r_over_gamma, v, e, cert.n, variant, mode);
    if (mode == DivisorMode::RootBased && v.is_infinite()) {
      // sigma(R_P)^{-1} in place of 2|R_P/gamma|
      LogReal neg_log_sigma = LogReal::zero() - log_sigma_smallest_nonzero(r);
      Rational p_abs = poly_max_abs_at_place(p_norm, v);
      LogReal alt =
          LogReal::max(neg_log_sigma, LogReal::log_of(Rational(6) * p_abs).scaled(rat(cert.n)));
      bool a0 = variant == Variant::A0Regular || variant == Variant::A0General;
      long e_eff = (variant == Variant::Regular || variant == Variant::A0Regular) ? 1 : e;
      if (a0) alt += LogReal::log_of(Rational(8) * p_abs).scaled(rat(e_eff));
      abig = DivisorEntry::approx(alt);
    }
    cert.a_prime_div.set(v, aprime);
    cert.a_div.set(v, abig);
  };
  add_place(Place::infinite());
  for (const Integer& q : primes) add_place(Place::finite(q));

  if (!cert.a_div.effective() || !cert.a_prime_div.effective())
    throw InternalError("global_divisor: constructed divisor is not effective");

  cert.h_a = cert.a_div.height();
  cert.h_a_prime = cert.a_prime_div.height();
  cert.theorem_bound = theorem_height_bound(cert.m, cert.n, e, variant, cert.h_p);
  cert.a_prime_bound = cert.h_p + LogReal::log_of(Integer(3));
  cert.drsvdp_main_term = cert.h_p.scaled(rat(2 * cert.n - 1));
  if (!cert.h_a.leq(cert.theorem_bound))
    throw InternalError("global_divisor: h(A) exceeds the theorem bound");
  return cert;
}

VerificationReport verify_bounds(const EisensteinCertificate& cert, const PuiseuxSeries& branch,
                                 bool check_conjecture) {
  if (branch.e != cert.e || branch.kappa != cert.kappa)
    throw DomainError("verify_bounds: certificate built for different (e, kappa)");
  VerificationReport rep;
  rep.max_k = branch.K;
  long fke = floor_div(cert.kappa, cert.e);

  // places to check: both supports plus denominator primes of coefficients
  std::set<Place> places;
  places.insert(Place::infinite());
  for (auto& [v, en] : cert.a_div.support()) {
    (void)en;
    places.insert(v);
  }
  for (auto& [v, en] : cert.a_prime_div.support()) {
    (void)en;
    places.insert(v);
  }
  {
    std::vector<Rational> coords;
    for (const AlgNum& c : branch.a)
      for (const Rational& q : c.coords()) coords.push_back(q);
    for (const Integer& q : denominator_primes(coords)) places.insert(Place::finite(q));
  }
  rep.checked_places.assign(places.begin(), places.end());

  bool a0_variant = cert.variant == Variant::A0Regular || cert.variant == Variant::A0General;
  AlgNum a_ref = branch.coeff(cert.e * fke);

  for (const Place& v : rep.checked_places) {
    DivisorEntry abig = cert.a_div.at(v);
    DivisorEntry aprime = cert.a_prime_div.at(v);
    for (long k = branch.kappa; k <= branch.K; ++k) {
      AlgNum c = branch.coeff(k);
      if (c.is_zero()) continue;
      ++rep.checks;
      Rational x = Rational(k, cert.e) - rat(fke);
      bool ok = true, equal = false;
      LogReal slack;
      bool have_slack = false;
      if (!v.is_infinite()) {
        const Integer& pp = v.prime();
        Rational rho = conjugate_norm_exponent_at_p(c, pp);
        Rational qfac;  // the A'-part as an exact p-power times rational
        Rational rho_shift(0);
        if (a0_variant) {
          // max{1, |a_ref|_v} = p^{max(0, rho_ref)}
          if (!a_ref.is_zero()) {
            Rational rr = conjugate_norm_exponent_at_p(a_ref, pp);
            if (rr > 0) rho_shift = rr;
          }
          qfac = Rational(1);
        } else {
          qfac = *aprime.exact;
        }
        // p^rho <= p^{rho_shift} qfac A^x  <=>  p^{rho - rho_shift} <= qfac A^x
        ok = p_power_leq(pp, rho - rho_shift, qfac, *abig.exact, x, &equal);
        LogReal lhs = LogReal::log_of(pp).scaled(rho - rho_shift);
        LogReal rhs = LogReal::log_of(qfac) + LogReal::log_of(*abig.exact).scaled(x);
        slack = lhs.slack_to(rhs);
        have_slack = true;
        if (ok && equal && rep.zero_slack.size() < 100000)
          rep.zero_slack.emplace_back(v, k);
      } else {
        // infinite place
        LogReal aprime_log;
        if (a0_variant) {
          aprime_log = a_ref.is_zero() ? LogReal::zero()
                                       : conjugate_norm_max(a_ref, v).log_plus();
        } else {
          aprime_log = aprime.log_value;
        }
        if (c.is_rational() && abig.exact && (!a0_variant ? aprime.exact.has_value() : a_ref.is_rational())) {
          Rational labs = abs(c.as_rational());
          Rational qfac = a0_variant
                              ? std::max(Rational(1), Rational(abs(a_ref.is_zero()
                                                                       ? Rational(0)
                                                                       : a_ref.as_rational())))
                              : *aprime.exact;
          ok = rational_leq(labs, qfac, *abig.exact, x, &equal);
          LogReal lhs = LogReal::log_abs(c.as_rational());
          LogReal rhs = LogReal::log_of(qfac) + LogReal::log_of(*abig.exact).scaled(x);
          if (!lhs.is_neg_inf()) {
            slack = lhs.slack_to(rhs);
            have_slack = true;
          }
        } else {
          LogReal lhs = conjugate_norm_max(c, v);
          LogReal rhs = aprime_log + abig.log_value.scaled(x);
          ok = lhs.leq(rhs);
          if (!lhs.is_neg_inf()) {
            slack = lhs.slack_to(rhs);
            have_slack = true;
          }
        }
      }
      if (!ok) {
        VerificationFailure f;
        f.v = v;
        f.k = k;
        f.lhs = "log|a_k|_v";  // refined below
        LogReal lhsl = conjugate_norm_max(c, v);
        f.lhs = lhsl.str(20);
        LogReal rhsl =
            (a0_variant ? (a_ref.is_zero() ? LogReal::zero()
                                           : conjugate_norm_max(a_ref, v).log_plus())
                        : aprime.log_value) +
            abig.log_value.scaled(x);
        f.rhs = rhsl.str(20);
        rep.failures.push_back(std::move(f));
      }
      if (have_slack) {
        if (!rep.slack_min || slack.value().cmp(rep.slack_min->value()) < 0)
          rep.slack_min = slack;
      }
      if (check_conjecture && !a0_variant) {
        // sharper exponent (k - kappa)/e with the same divisor
        Rational xs = Rational(k - cert.kappa, cert.e);
        ++rep.conjecture_checks;
        bool cok;
        if (!v.is_infinite()) {
          Rational rho = conjugate_norm_exponent_at_p(c, v.prime());
          cok = p_power_leq(v.prime(), rho, *cert.a_prime_div.at(v).exact, *abig.exact, xs,
                            nullptr);
        } else {
          LogReal lhs = conjugate_norm_max(c, v);
          cok = lhs.leq(cert.a_prime_div.at(v).log_value + abig.log_value.scaled(xs));
        }
        if (!cok) ++rep.conjecture_failures;
      }
    }
  }
  std::sort(rep.failures.begin(), rep.failures.end(),
            [](const VerificationFailure& a, const VerificationFailure& b) {
              if (!(a.v == b.v)) return a.v < b.v;
              return a.k < b.k;
            });
  return rep;
}

ExceptionalSetReport exceptional_set_bound(const QBiPoly& p, const BranchSet& branches) {
  long m = p.degree_z(), n = p.degree_w();
  if (m < 1 || n < 1)
    throw DomainError("exceptional_set_bound: needs deg_z >= 1 and deg_w >= 1");
  ExceptionalSetReport rep;
  LogReal hp = height_poly(p);
  rep.bound = (hp + LogReal::log_of(Integer(Integer(m) * Integer(n))) +
               LogReal::from(Real::of_long(1), 0.0))
                  .scaled(rat(3 * n));
  std::set<Integer> observed;
  bool all_exact = branches.complete;
  for (const PuiseuxSeries& br : branches.branches) {
    if (!br.exact) all_exact = false;
    for (const AlgNum& c : br.a) {
      if (c.is_zero()) continue;
      if (c.is_rational()) {
        for (auto& [q, e] : factor(c.as_rational().get_den())) {
          (void)e;
          observed.insert(q);
        }
      } else {
        // |c|_w > 1 for some extension iff some denominator prime appears in
        // the minimal polynomial
        QPoly mp = min_poly(c);
        for (const Integer& q : denominator_primes(all_coeffs(mp))) observed.insert(q);
      }
    }
  }
  LogReal oh = LogReal::zero();
  for (const Integer& q : observed) {
    rep.observed.push_back(Place::finite(q));
    oh += LogReal::log_of(q);
  }
  rep.observed_height = oh;
  rep.truncation_limited = !all_exact;
  if (!rep.observed_height.leq(rep.bound))
    throw InternalError("exceptional_set_bound: observed height exceeds the theorem bound");
  return rep;
}

LogReal prime_c_factor_log_sum(long n) {
  LogReal acc = LogReal::zero();
  if (n < 2) return acc;
  for (uint64_t p : primes_up_to((uint64_t)n))
    acc += LogReal::log_of(Integer(Integer(n) * Integer((unsigned long)p)));
  return acc;
}

bool prime_sum_bound_holds_up_to(long nmax) {
  std::vector<uint64_t> ps = primes_up_to((uint64_t)std::max(nmax, 2L));
  size_t idx = 0;
  Real theta;  // sum of log p over p <= n
  long pi = 0;
  Rational coef(23, 10);
  for (long n = 1; n <= nmax; ++n) {
    while (idx < ps.size() && (long)ps[idx] <= n) {
      theta += Real::log_of(Integer((unsigned long)ps[idx]));
      ++pi;
      ++idx;
    }
    if (pi == 0) continue;
    Real lhs = Real::of_long(pi) * Real::log_of(Integer(n)) + theta;
    Real rhs = Real::of(coef) * Real::of_long(n);
    if (!(lhs <= rhs)) return false;
  }
  return true;
}

}  // namespace eisenkit
