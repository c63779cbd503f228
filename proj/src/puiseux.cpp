#include "eisenkit/puiseux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "eisenkit/errors.hpp"
#include "eisenkit/resultant.hpp"

namespace eisenkit {

namespace {

using ABiPoly = BiPoly<AlgNum>;

ABiPoly to_field_poly(const QBiPoly& p) {
  ABiPoly r;
  for (auto& [k, v] : p.monomials()) r.add_term(k.first, k.second, AlgNum(v));
  return r;
}

// Q(t^stride, f(t)) truncated at O(t^cap); precision of f propagates.
LSeries eval_at_series(const ABiPoly& q, const LSeries& f, long stride, long cap) {
  Poly<Poly<AlgNum>> wm = q.w_major();
  LSeries acc;
  for (long j = wm.degree(); j >= 0; --j) {
    acc = (acc * f + LSeries::from_poly(wm.coeff((int)j), stride)).truncated(cap);
  }
  return acc;
}

// Quadratic Newton lifting from the exact initial value a0; P(0,a0) = 0 and
// P'_w(0,a0) != 0 are the caller's responsibility. Returns f mod t^T.
LSeries newton_lift(const ABiPoly& p, const AlgNum& a0, long T) {
  ABiPoly dp = p.derivative_w();
  LSeries f = LSeries::make(0, {a0}, 1);
  long t = 1;
  while (t < T) {
    long t2 = std::min(2 * t, T);
    LSeries fpad = f.padded_to(t2);
    LSeries num = eval_at_series(p, fpad, 1, t2);
    LSeries den = eval_at_series(dp, fpad, 1, t2);
    LSeries corr = (num * den.inverse(t2)).truncated(t2);
    f = (fpad - corr).truncated(t2).padded_to(t2);
    t = t2;
  }
  return f;
}

struct Edge {
  long u = 0, v = 1;  // lambda = u/v, gcd(|u|,v) = 1, v >= 1
  long j0 = 0, i0 = 0, j1 = 0, i1 = 0;
};

// Lower hull of the points (j = w-exponent, i = z-exponent).
std::vector<Edge> polygon_edges(const ABiPoly& p) {
  struct Pt {
    long j, i;
  };
  std::map<long, long> min_i;
  for (auto& [k, v] : p.monomials()) {
    (void)v;
    auto it = min_i.find(k.second);
    if (it == min_i.end() || k.first < it->second) min_i[k.second] = k.first;
  }
  std::vector<Pt> pts;
  for (auto& [j, i] : min_i) pts.push_back({j, i});
  std::vector<Pt> hull;
  for (const Pt& q : pts) {
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      long cross = (b.j - a.j) * (q.i - a.i) - (b.i - a.i) * (q.j - a.j);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(q);
  }
  std::vector<Edge> out;
  for (size_t t = 1; t < hull.size(); ++t) {
    Edge e;
    e.j0 = hull[t - 1].j;
    e.i0 = hull[t - 1].i;
    e.j1 = hull[t].j;
    e.i1 = hull[t].i;
    long du = e.i0 - e.i1;  // lambda = -(slope) = (i0-i1)/(j1-j0)
    long dv = e.j1 - e.j0;
    long g = std::gcd(std::abs(du), dv);
    if (g == 0) g = 1;
    e.u = du / g;
    e.v = dv / g;
    out.push_back(e);
  }
  return out;
}

// phi(y) = sum over the edge's monomials c_{ij} y^{(j-j0)/v}
FPoly edge_charpoly(const ABiPoly& p, const Edge& e) {
  long ell = (e.j1 - e.j0) / e.v;
  std::vector<AlgNum> c((size_t)ell + 1);
  for (auto& [k, val] : p.monomials()) {
    long i = k.first, j = k.second;
    if (j < e.j0 || j > e.j1) continue;
    // on the segment: (i - i0)(j1 - j0) == (i1 - i0)(j - j0)
    if ((i - e.i0) * (e.j1 - e.j0) != (e.i1 - e.i0) * (j - e.j0)) continue;
    long off = j - e.j0;
    if (off % e.v != 0) continue;
    c[(size_t)(off / e.v)] = c[(size_t)(off / e.v)] + val;
  }
  return FPoly(std::move(c));
}

std::string print_fpoly(const FPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    AlgNum c = p.coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (i > 0) {
      os << "*" << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// t^{-D} P(t^v, t^u (c + w)); D normalizes to ord_t = 0.
ABiPoly edge_substitute(const ABiPoly& p, long v, long u, const AlgNum& c) {
  long n = p.degree_w();
  std::vector<Poly<AlgNum>> pw((size_t)n + 1);
  pw[0] = Poly<AlgNum>::constant(AlgNum(Rational(1)));
  FPoly base({c, AlgNum(Rational(1))});
  for (long j = 1; j <= n; ++j) pw[(size_t)j] = pw[(size_t)j - 1] * base;
  bool first = true;
  long dmin = 0;
  for (auto& [k, val] : p.monomials()) {
    (void)val;
    long te = v * k.first + u * k.second;
    if (first || te < dmin) dmin = te, first = false;
  }
  ABiPoly out;
  for (auto& [k, val] : p.monomials()) {
    long te = v * k.first + u * k.second - dmin;
    const FPoly& powj = pw[(size_t)k.second];
    for (int wdeg = 0; wdeg <= powj.degree(); ++wdeg)
      out.add_term(te, wdeg, val * powj.coeff(wdeg));
  }
  return out;
}

// One branch representative of pc in t, coefficients a_kappa..a_Kt at
// exponents k/e.
struct SubBranch {
  long e = 1;
  long kappa = 1;
  long Kt = 0;
  std::vector<AlgNum> a;  // indices kappa..Kt
  bool exact = false;
  AlgNum coeff(long k) const {
    if (k < kappa || k > Kt) return AlgNum();
    return a[(size_t)(k - kappa)];
  }
};

struct ExpandResult {
  std::vector<SubBranch> branches;
  std::vector<UnrealizedBranch> unrealized;
  long realized_count = 0;
  long unrealized_count = 0;
};

ExpandResult expand_at_zero(const ABiPoly& pc, const FieldPtr& F, long X, long depth,
                            long depth_max);

// Handles the per-edge work shared by the top level and the recursion:
// characteristic roots in F, the v-th root of each, substitution, exact
// termination, and recursive continuation. X is the t-exponent coverage the
// assembled branches must reach.
ExpandResult process_edges(const ABiPoly& pc, const FieldPtr& F, long X,
                           bool positive_slope_only, long depth, long depth_max) {
  if (depth > depth_max)
    throw InternalError("puiseux: polygon recursion exceeded its depth bound");
  ExpandResult out;
  long expected = 0;
  for (const Edge& edge : polygon_edges(pc)) {
    bool positive = edge.u > 0;
    if (positive_slope_only && !positive) continue;
    long ell = (edge.j1 - edge.j0) / edge.v;
    expected += edge.v * ell;
    FPoly phi = edge_charpoly(pc, edge);
    FieldRoots rf = roots_in_field(phi, F);
    bool uncertain = !rf.possibly_outside.empty();
    long accounted = 0;
    for (auto& [y, mu] : rf.roots) {
      if (y.is_zero()) throw InternalError("puiseux: zero characteristic root");
      accounted += mu;
      AlgNum c;
      bool c_found = false;
      bool c_uncertain = false;
      if (edge.v == 1) {
        c = y;
        c_found = true;
      } else {
        std::vector<AlgNum> rp((size_t)edge.v + 1);
        rp[0] = -y;
        rp[(size_t)edge.v] = AlgNum(Rational(1));
        FieldRoots vr = roots_in_field(FPoly(std::move(rp)), F);
        c_uncertain = !vr.possibly_outside.empty();
        if (!vr.roots.empty()) {
          c = vr.roots.front().first;  // deterministic: smallest coords
          c_found = true;
        }
      }
      if (!c_found) {
        UnrealizedBranch ur;
        ur.e_partial = edge.v;
        ur.kappa_partial = edge.u;
        ur.characteristic_poly = print_fpoly(phi, 'y');
        ur.count = edge.v * mu;
        ur.uncertain = c_uncertain;
        out.unrealized.push_back(ur);
        out.unrealized_count += ur.count;
        continue;
      }
      ABiPoly p1 = edge_substitute(pc, edge.v, edge.u, c);
      long sub_budget = std::max(1L, X * edge.v - edge.u);
      long consumed = 0;
      if (p1.ord_w() >= 1) {
        // w | P1: the series terminates exactly at c t^{u/v}
        SubBranch sb;
        sb.e = edge.v;
        sb.kappa = edge.u;
        sb.Kt = std::max(edge.u, X * edge.v);
        sb.a.assign((size_t)(sb.Kt - sb.kappa + 1), AlgNum());
        sb.a[0] = c;
        sb.exact = true;
        out.branches.push_back(std::move(sb));
        out.realized_count += edge.v;
        consumed += 1;
        p1 = p1.div_w(1);
        if (p1.is_zero()) continue;
      }
      (void)consumed;
      ExpandResult rec = expand_at_zero(p1, F, sub_budget, depth + 1, depth_max);
      for (const SubBranch& s : rec.branches) {
        SubBranch g;
        g.e = edge.v * s.e;
        g.kappa = edge.u * s.e;
        g.Kt = X * g.e;
        if (g.Kt < g.kappa) g.Kt = g.kappa;
        g.a.assign((size_t)(g.Kt - g.kappa + 1), AlgNum());
        g.a[0] = c;
        for (long k = s.kappa; k <= std::min(s.Kt, g.Kt - edge.u * s.e); ++k) {
          AlgNum sk = s.coeff(k);
          if (!sk.is_zero()) g.a[(size_t)(edge.u * s.e + k - g.kappa)] = sk;
        }
        g.exact = s.exact;
        out.branches.push_back(std::move(g));
        out.realized_count += edge.v * s.e;
      }
      for (UnrealizedBranch ur : rec.unrealized) {
        long e_sub = ur.e_partial;
        ur.e_partial = edge.v * e_sub;
        ur.kappa_partial = edge.u * e_sub + ur.kappa_partial;
        ur.count *= edge.v;
        out.unrealized.push_back(ur);
      }
      out.unrealized_count += edge.v * rec.unrealized_count;
    }
    long remainder = ell - accounted;
    if (remainder > 0) {
      UnrealizedBranch ur;
      ur.e_partial = edge.v;
      ur.kappa_partial = edge.u;
      ur.characteristic_poly = print_fpoly(phi, 'y');
      ur.count = edge.v * remainder;
      ur.uncertain = uncertain;
      out.unrealized.push_back(ur);
      out.unrealized_count += ur.count;
    }
  }
  if (!positive_slope_only && out.realized_count + out.unrealized_count != expected)
    throw InternalError("puiseux: branch count mismatch");
  return out;
}

ExpandResult expand_at_zero(const ABiPoly& pc, const FieldPtr& F, long X, long depth,
                            long depth_max) {
  if (depth > depth_max)
    throw InternalError("puiseux: polygon recursion exceeded its depth bound");
  ExpandResult out;
  FPoly q0 = pc.at_z_zero();
  if (!q0.coeff(0).is_zero()) return out;  // no positive-order solutions
  if (!q0.coeff(1).is_zero()) {
    // regular point: single branch, Newton lifting from 0
    SubBranch sb;
    sb.e = 1;
    sb.kappa = 1;
    sb.Kt = std::max(1L, X);
    sb.exact = pc.ord_w() >= 1;
    if (sb.exact) {
      sb.a.assign((size_t)(sb.Kt - sb.kappa + 1), AlgNum());
    } else {
      LSeries f = newton_lift(pc, AlgNum(), sb.Kt + 1);
      sb.a.resize((size_t)(sb.Kt - sb.kappa + 1));
      for (long k = sb.kappa; k <= sb.Kt; ++k) sb.a[(size_t)(k - sb.kappa)] = f.coeff(k);
    }
    out.branches.push_back(std::move(sb));
    out.realized_count = 1;
    return out;
  }
  return process_edges(pc, F, X, /*positive_slope_only=*/true, depth, depth_max);
}

}  // namespace

AlgNum PuiseuxSeries::coeff(long k) const {
  if (k < kappa) return AlgNum();
  if (k <= K) return a[(size_t)(k - kappa)];
  if (exact) return AlgNum();
  throw UnresolvedError("PuiseuxSeries::coeff: index beyond truncation");
}

bool PuiseuxSeries::is_zero() const {
  for (const AlgNum& x : a)
    if (!x.is_zero()) return false;
  return exact;
}

LSeries PuiseuxSeries::as_lseries() const {
  std::vector<AlgNum> cs = a;
  return LSeries::make(kappa, std::move(cs), exact ? LSeries::kExactPrec : K + 1);
}

PuiseuxSeries expand_regular(const QBiPoly& p, const AlgNum& a0, long K) {
  if (K < 0) throw DomainError("expand_regular: K must be >= 0");
  if (p.is_zero()) throw DomainError("expand_regular: zero polynomial");
  ABiPoly pa = to_field_poly(p);
  AlgNum at0 = pa.at_z_zero().eval(a0);
  if (!at0.is_zero())
    throw DomainError("expand_regular: precondition P(0, a0) = 0 fails");
  AlgNum d0 = pa.derivative_w().at_z_zero().eval(a0);
  if (d0.is_zero())
    throw DomainError("expand_regular: precondition P'_w(0, a0) != 0 fails");
  LSeries f = newton_lift(pa, a0, K + 1);
  LSeries res = eval_at_series(pa, f, 1, K + 1);
  if (res.first_nonzero())
    throw InternalError("expand_regular: Newton residue check failed");
  PuiseuxSeries out;
  out.field = a0.field() ? a0.field() : rational_field();
  out.e = 1;
  out.kappa = 0;
  out.K = K;
  out.a.resize((size_t)K + 1);
  for (long k = 0; k <= K; ++k) out.a[(size_t)k] = f.coeff(k);
  out.exact = false;
  out.kappa_minimal = false;
  return out;
}

BranchSet puiseux_branches(const QBiPoly& p_in, const FieldPtr& f_in, long K) {
  if (p_in.is_zero()) throw DomainError("puiseux_branches: zero polynomial");
  if (p_in.degree_w() < 1) throw DomainError("puiseux_branches: needs deg_w >= 1");
  if (K < 0) throw DomainError("puiseux_branches: K must be >= 0");
  QBiPoly p = p_in;
  long nz = p.ord_z();
  if (nz > 0) p = p.shift_z(-nz);
  if (!is_w_separable(p))
    throw DomainError("puiseux_branches: polynomial is not w-separable");
  FieldPtr F = f_in ? f_in : rational_field();

  BranchSet out;
  out.n = p.degree_w();
  long realized = 0;

  ABiPoly pa = to_field_poly(p);
  if (pa.ord_w() >= 1) {
    if (pa.ord_w() > 1) throw InternalError("puiseux_branches: separability violated");
    PuiseuxSeries zero;
    zero.field = F;
    zero.e = 1;
    zero.kappa = 0;
    zero.K = std::max(K, 0L);
    zero.a.assign((size_t)zero.K + 1, AlgNum());
    zero.exact = true;
    zero.kappa_minimal = false;
    out.branches.push_back(std::move(zero));
    realized += 1;
    pa = pa.div_w(1);
    if (pa.degree_w() < 1 || pa.is_zero()) {
      out.complete = realized == out.n;
      return out;
    }
  }

  long rdeg = resultant_w_self(p).degree();
  long depth_max = p.degree_w() * (2 * std::max(rdeg, 1L) + 1) + 4;

  ExpandResult res =
      process_edges(pa, F, std::max(1L, K), /*positive_slope_only=*/false, 0, depth_max);

  for (const SubBranch& s : res.branches) {
    PuiseuxSeries br;
    br.field = F;
    br.e = s.e;
    br.kappa = s.kappa;
    br.K = std::max(K, s.kappa);
    br.a.assign((size_t)(br.K - br.kappa + 1), AlgNum());
    for (long k = br.kappa; k <= std::min(br.K, s.Kt); ++k) {
      AlgNum v = s.coeff(k);
      if (!v.is_zero()) br.a[(size_t)(k - br.kappa)] = v;
    }
    br.exact = s.exact;
    // minimal kappa: the first coefficient is a nonzero characteristic root,
    // so a cancellation would indicate a bug
    if (br.a.empty() || br.a[0].is_zero())
      throw InternalError("puiseux_branches: vanishing leading coefficient");
    br.kappa_minimal = true;
    // the edge data (u, v) is kept coprime at every level, which makes the
    // assembled ramification index minimal for exact branches; check it
    if (br.exact) {
      long g = std::gcd(br.e, br.kappa);
      for (long k = br.kappa; k <= br.K && g > 1; ++k)
        if (!br.coeff(k).is_zero()) g = std::gcd(g, k);
      if (g > 1) throw InternalError("puiseux_branches: non-minimal ramification index");
    }
    realized += s.e;
    out.branches.push_back(std::move(br));
  }
  out.unrealized = res.unrealized;
  if (realized + res.unrealized_count != out.n)
    throw InternalError("puiseux_branches: total branch count mismatch");
  out.complete = res.unrealized_count == 0;
  return out;
}

OrdResult ord_z_of_series_composition(const QBiPoly& q, const PuiseuxSeries& f) {
  if (q.is_zero()) {
    OrdResult r;
    r.resolved = true;
    r.infinite = true;
    return r;
  }
  ABiPoly qa = to_field_poly(q);
  LSeries fs = f.as_lseries();
  Poly<Poly<AlgNum>> wm = qa.w_major();
  LSeries acc;
  for (long j = wm.degree(); j >= 0; --j)
    acc = acc * fs + LSeries::from_poly(wm.coeff((int)j), f.e);
  OrdResult r;
  auto fn = acc.first_nonzero();
  if (fn) {
    r.resolved = true;
    r.ord = rat(*fn, f.e);
    return r;
  }
  if (acc.is_exact()) {
    r.resolved = true;
    r.infinite = true;
    return r;
  }
  r.K = f.K;
  return r;
}

bool residue_check(const QBiPoly& p, const PuiseuxSeries& f) {
  OrdResult r = ord_z_of_series_composition(p, f);
  if (!r.resolved) return true;  // nothing nonzero seen within precision
  if (r.infinite) return true;
  return r.ord > Rational(f.K, f.e);
}

SupNormResult padic_sup_norm(const PuiseuxSeries& f, const Integer& p,
                             const Rational& r_exp,
                             const std::optional<std::pair<Rational, Rational>>& tail_divisor) {
  SupNormResult out;
  bool any = false;
  Rational best;
  long best_k = 0;
  for (long k = f.kappa; k <= f.K; ++k) {
    AlgNum c = f.coeff(k);
    if (c.is_zero()) continue;
    if (!c.is_rational())
      throw DomainError("padic_sup_norm: requires rational coefficients");
    Rational x = rat(-rat_valuation(c.as_rational(), p)) + Rational(k, f.e) * r_exp;
    if (!any || x > best) {
      best = x;
      best_k = k;
    }
    any = true;
  }
  if (!any) {
    out.status = f.exact ? SupNormResult::Status::NegInf : SupNormResult::Status::Unresolved;
    return out;
  }
  out.log_p_exponent = best;
  out.attained_k = best_k;
  if (f.exact) {
    out.status = SupNormResult::Status::Resolved;
    out.tail_checked = true;
    return out;
  }
  if (!tail_divisor) {
    out.status = SupNormResult::Status::Resolved;
    out.tail_checked = false;
    return out;
  }
  const auto& [aprime, abig] = *tail_divisor;
  // terms beyond K are bounded by A' A^{k/e - floor(kappa/e)} p^{r_exp k/e};
  // domination needs the ratio A^{1/e} p^{r_exp/e} < 1 and the k = K+1 bound
  // below the attained maximum. All comparisons exact via integer powers.
  auto pow_rat = [](const Rational& base, const Rational& ex) {
    // base^ex with ex integer after scaling; caller guarantees integrality
    if (ex.get_den() != 1) throw InternalError("pow_rat: non-integer exponent");
    long e = (long)ex.get_num().get_si();
    return rat_pow(base, e);
  };
  // decreasing: p^{-r_exp} > A  <=>  p^{-num} > A^{den} for r_exp = num/den
  long L0 = (long)r_exp.get_den().get_si();
  Rational dec_l = rat_pow(Rational(p), (long)(-r_exp.get_num().get_si()));
  Rational dec_r = rat_pow(abig, L0);
  if (!(dec_l > dec_r)) {
    out.status = SupNormResult::Status::Unresolved;
    return out;
  }
  // tail bound at k = K+1 vs attained maximum, both to the power L
  long kk = f.K + 1;
  Rational y = Rational(kk, f.e) - rat(floor_div(f.kappa, f.e));
  Rational cexp = Rational(kk, f.e) * r_exp;
  Integer L = 1;
  mpz_lcm(L.get_mpz_t(), y.get_den().get_mpz_t(), cexp.get_den().get_mpz_t());
  mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), best.get_den().get_mpz_t());
  long Ll = (long)L.get_si();
  Rational tail_L = rat_pow(aprime, Ll) * pow_rat(abig, y * Ll) * pow_rat(Rational(p), cexp * Ll);
  Rational max_L = pow_rat(Rational(p), best * Ll);
  if (tail_L > max_L) {
    out.status = SupNormResult::Status::Unresolved;
    return out;
  }
  out.status = SupNormResult::Status::Resolved;
  out.tail_checked = true;
  return out;
}

}  // namespace eisenkit
