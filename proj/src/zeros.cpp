#include "swop/zeros.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace swop {

ModeConfig default_config_like(const Scalar& like) {
  return like.is_exact() ? ModeConfig::exact_config()
                         : ModeConfig::floating_config(like.precision_bits());
}

namespace {

// Scales by a positive rational so the coefficients become coprime
// integers; positive scaling preserves every sign the chain looks at.
Poly primitive_positive(const Poly& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm = 1;
  for (const Scalar& c : p.coeffs()) {
    mpz_class d = c.rat().get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  mpz_class num_gcd = 0;
  std::vector<mpz_class> ints;
  ints.reserve(p.coeffs().size());
  for (const Scalar& c : p.coeffs()) {
    mpz_class n = c.rat().get_num() * (den_lcm / c.rat().get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    ints.push_back(std::move(n));
  }
  std::vector<Scalar> out;
  out.reserve(ints.size());
  for (const mpz_class& n : ints) {
    out.push_back(Scalar::exact(mpq_class(n / num_gcd)));
  }
  return Poly(std::move(out));
}

class SturmChain {
 public:
  explicit SturmChain(const Poly& p) {
    if (p.is_zero()) throw param_error("Sturm chain of the zero polynomial");
    if (p.mode() != ScalarMode::exact) {
      throw mode_error("certified root counting requires exact mode");
    }
    chain_.push_back(primitive_positive(p));
    if (p.degree() == 0) return;
    chain_.push_back(primitive_positive(p.derivative()));
    while (true) {
      const Poly& above = chain_[chain_.size() - 2];
      Poly r = Poly::divrem(above, chain_.back()).second;
      if (r.is_zero()) break;
      chain_.push_back(primitive_positive(-r));
    }
  }

  // The last element is gcd(p, p') up to a positive constant.
  int gcd_degree() const {
    return chain_.size() == 1 ? 0 : chain_.back().degree();
  }
  bool squarefree() const { return gcd_degree() == 0; }

  // Distinct real roots in (a, b]. (A root exactly at x makes some chain
  // element vanish there; skipping zero signs makes the variation count at
  // x match the open side below and the closed side above.)
  int count(const Scalar& a, const Scalar& b) const {
    if (!(a <= b)) throw param_error("root counting needs an interval a <= b");
    return variations(a) - variations(b);
  }

 private:
  int variations(const Scalar& x) const {
    int var = 0;
    int last = 0;
    for (const Poly& s : chain_) {
      int sg = s.eval(x).sign();
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++var;
      last = sg;
    }
    return var;
  }

  std::vector<Poly> chain_;
};

// Interval with exactly one root of the working polynomial in (lo, hi],
// shrunk toward a point; lo == hi means the root was hit exactly.
struct UInterval {
  Scalar lo;
  Scalar hi;
};

// A point in (a, b) where Q does not vanish: start at the midpoint and
// walk half-way toward a past any root the candidate lands on.
Scalar nonroot_split(const Poly& q, const Scalar& a, const Scalar& b) {
  Scalar half = a.of_ratio(1, 2);
  Scalar mid = (a + b) * half;
  while (q.eval(mid).is_zero()) mid = (a + mid) * half;
  return mid;
}

std::vector<UInterval> isolate_u_roots(const Poly& q, const SturmChain& chain,
                                       const Scalar& zero, const Scalar& one) {
  std::vector<UInterval> done;
  std::deque<std::pair<UInterval, int>> work;
  int total = chain.count(zero, one);
  if (total > 0) work.push_back({{zero, one}, total});
  while (!work.empty()) {
    auto [iv, c] = work.front();
    work.pop_front();
    if (c == 1) {
      done.push_back(iv);
      continue;
    }
    Scalar mid = nonroot_split(q, iv.lo, iv.hi);
    int left = chain.count(iv.lo, mid);
    if (left > 0) work.push_back({{iv.lo, mid}, left});
    if (c - left > 0) work.push_back({{mid, iv.hi}, c - left});
  }
  std::sort(done.begin(), done.end(),
            [](const UInterval& x, const UInterval& y) { return x.lo < y.lo; });
  return done;
}

// One bisection step keeping the root in (lo, hi] with q(lo) != 0; returns
// true once the interval is a point (rational root hit exactly).
bool refine_step_exact(const Poly& q, UInterval& iv) {
  if (iv.lo == iv.hi) return true;
  Scalar mid = (iv.lo + iv.hi) * iv.lo.of_ratio(1, 2);
  Scalar v = q.eval(mid);
  if (v.is_zero()) {
    iv.lo = mid;
    iv.hi = mid;
    return true;
  }
  if (v.sign() != q.eval(iv.lo).sign()) {
    iv.hi = mid;
  } else {
    iv.lo = mid;
  }
  return iv.lo == iv.hi;
}

// g/2^t <= sqrt(u) <= h/2^t with h - g <= 1; g == h exactly when u is a
// perfect square of a rational with denominator dividing 2^t.
std::pair<Scalar, Scalar> sqrt_bounds_exact(const Scalar& u, unsigned t) {
  if (u.sign() < 0) throw param_error("square root of a negative value");
  mpz_class num = u.rat().get_num();
  mpz_class den = u.rat().get_den();
  mpz_class scaled = num << (2 * t);
  mpz_class g = sqrt(mpz_class(scaled / den));
  while ((g + 1) * (g + 1) * den <= scaled) ++g;
  while (g > 0 && g * g * den > scaled) --g;
  mpz_class h = g;
  while (h * h * den < scaled) ++h;
  mpz_class pow2 = mpz_class(1) << t;
  return {Scalar::exact(mpq_class(g, pow2)), Scalar::exact(mpq_class(h, pow2))};
}

Scalar float_sqrt(const Scalar& s) {
  mpf_class r(0, mpf_get_prec(s.flt().get_mpf_t()));
  mpf_sqrt(r.get_mpf_t(), s.flt().get_mpf_t());
  return Scalar::floating(r);
}

// Positive roots of an even polynomial, from the certified exact pipeline:
// Sturm isolation of the u = x^2 image inside (0, 1), bisection in u, then
// rational square-root bounds mapped back to x.
std::vector<RootEnclosure> positive_roots_exact(const Poly& even_cof,
                                                const ModeConfig& cfg) {
  Poly q = even_cof.even_part_in_u();
  Scalar zero = q.leading().of_int(0);
  Scalar one = q.leading().of_int(1);
  Scalar half = q.leading().of_ratio(1, 2);

  SturmChain chain(q);
  if (!chain.squarefree()) {
    throw certification_error(
        "even factor is not squarefree in u: gcd degree " +
        std::to_string(chain.gcd_degree()));
  }
  if (q.eval(zero).is_zero()) {
    throw certification_error("even factor vanishes at x = 0");
  }
  if (q.eval(one).is_zero()) {
    throw certification_error("root at the interval endpoint x = 1");
  }
  int inside = chain.count(zero, one);
  if (inside != q.degree()) {
    throw certification_error("only " + std::to_string(inside) + " of " +
                              std::to_string(q.degree()) +
                              " u-roots lie in (0, 1)");
  }

  std::vector<UInterval> ivs = isolate_u_roots(q, chain, zero, one);
  const Scalar& tol = cfg.refine_tolerance;

  // Square-root bound precision: 2^-t at most tol/8 to start.
  unsigned t = 8;
  {
    Scalar bound = tol * tol.of_ratio(1, 8);
    while (tol.of_pow2(-long(t)) > bound && t < (1u << 16)) t *= 2;
  }

  Scalar u_target = tol;
  for (int round = 0;; ++round) {
    if (round > 64) {
      throw certification_error("root refinement failed to converge");
    }
    for (UInterval& iv : ivs) {
      while (!(iv.hi - iv.lo <= u_target)) {
        if (refine_step_exact(q, iv)) break;
      }
    }
    // Neighbouring isolation intervals may share an endpoint; push them
    // apart so the x enclosures cannot touch.
    for (size_t i = 0; i + 1 < ivs.size(); ++i) {
      while (!(ivs[i].hi < ivs[i + 1].lo)) {
        bool a = refine_step_exact(q, ivs[i]);
        bool b = refine_step_exact(q, ivs[i + 1]);
        if (a && b && !(ivs[i].hi < ivs[i + 1].lo)) {
          throw certification_error("two u-roots coincide");
        }
      }
    }

    std::vector<RootEnclosure> pos;
    pos.reserve(ivs.size());
    bool ok = true;
    for (const UInterval& iv : ivs) {
      RootEnclosure r;
      r.lo = sqrt_bounds_exact(iv.lo, t).first;
      r.hi = sqrt_bounds_exact(iv.hi, t).second;
      r.refined = r.lo == r.hi ? r.lo : (r.lo + r.hi) * half;
      if (!(r.hi - r.lo <= tol) || !(r.lo.sign() > 0 || r.lo == r.hi) ||
          !(r.hi < one) || !(zero < r.hi)) {
        ok = false;
      }
      pos.push_back(std::move(r));
    }
    for (size_t i = 0; ok && i + 1 < pos.size(); ++i) {
      if (!(pos[i].hi < pos[i + 1].lo)) ok = false;
    }
    if (ok) return pos;
    u_target = u_target * u_target.of_ratio(1, 1024);
    t += 32;
  }
}

// Float-mode stand-in: sign-change bracketing on a refining grid in u,
// bisection in x, and a short Newton polish accepted only inside the
// bracket. No certification claims beyond the final sign checks.
std::vector<RootEnclosure> positive_roots_float(const Poly& even_cof,
                                                const ModeConfig& cfg) {
  Poly q = even_cof.even_part_in_u();
  unsigned m = unsigned(q.degree());
  if (m == 0) return {};
  Scalar zero = q.leading().of_int(0);
  Scalar one = q.leading().of_int(1);
  Scalar half = q.leading().of_ratio(1, 2);
  Scalar q_noise = float_noise_threshold(q);

  std::vector<std::pair<Scalar, Scalar>> brackets;
  for (unsigned parts = 4 * m + 4; parts <= (1u << 16) && brackets.size() != m;
       parts *= 2) {
    brackets.clear();
    Scalar prev_x = zero;
    Scalar prev_v = q.eval(zero);
    if (prev_v.abs() <= q_noise) continue;
    bool clean = true;
    // A sample indistinguishable from zero sits on top of a root; widen the
    // candidate interval past it and insist the neighbors change sign.
    bool pending = false;
    for (unsigned j = 1; j <= parts; ++j) {
      Scalar xj = one.of_ratio(long(j), long(parts));
      Scalar vj = q.eval(xj);
      if (vj.abs() <= q_noise) {
        if (pending) {
          clean = false;
          break;
        }
        pending = true;
        continue;
      }
      if (vj.sign() != prev_v.sign()) {
        brackets.push_back({prev_x, xj});
      } else if (pending) {
        clean = false;
        break;
      }
      pending = false;
      prev_x = xj;
      prev_v = vj;
    }
    if (pending) clean = false;
    if (!clean) brackets.clear();
  }
  if (brackets.size() != m) {
    throw certification_error(
        "float-mode isolation located " + std::to_string(brackets.size()) +
        " of " + std::to_string(m) + " u-roots; rerun in exact mode");
  }

  const Scalar& tol = cfg.refine_tolerance;
  Poly de = even_cof.derivative();
  std::vector<RootEnclosure> pos;
  pos.reserve(m);
  for (const auto& [ua, ub] : brackets) {
    RootEnclosure r;
    r.lo = float_sqrt(ua);
    r.hi = float_sqrt(ub);
    int lo_sign = even_cof.eval(r.lo).sign();
    while (r.hi - r.lo > tol) {
      Scalar mid = (r.lo + r.hi) * half;
      int s = even_cof.eval(mid).sign();
      if (s == 0) {
        r.lo = mid;
        r.hi = mid;
        break;
      }
      if (s != lo_sign) {
        r.hi = mid;
      } else {
        r.lo = mid;
      }
    }
    r.refined = (r.lo + r.hi) * half;
    Scalar polished = r.refined;
    for (int step = 0; step < 3; ++step) {
      Scalar d = de.eval(polished);
      if (d.is_zero()) break;
      polished = polished - even_cof.eval(polished) / d;
    }
    if (r.lo <= polished && polished <= r.hi) r.refined = polished;
    pos.push_back(std::move(r));
  }
  return pos;
}

std::vector<RootEnclosure> positive_roots(const Poly& even_cof,
                                          const ModeConfig& cfg) {
  return cfg.mode == ScalarMode::exact ? positive_roots_exact(even_cof, cfg)
                                       : positive_roots_float(even_cof, cfg);
}

// Negative mirror images followed by the originals.
std::vector<RootEnclosure> mirror_pairs(const std::vector<RootEnclosure>& pos) {
  std::vector<RootEnclosure> out;
  out.reserve(2 * pos.size());
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
    RootEnclosure neg;
    neg.lo = -it->hi;
    neg.hi = -it->lo;
    neg.refined = -it->refined;
    out.push_back(std::move(neg));
  }
  out.insert(out.end(), pos.begin(), pos.end());
  return out;
}

bool is_odd_parity(const Poly& p) {
  if (p.is_zero()) return false;
  Scalar thr = p.mode() == ScalarMode::exact ? p.leading().of_int(0)
                                             : float_noise_threshold(p);
  const auto& cs = p.coeffs();
  for (size_t k = 0; k < cs.size(); k += 2) {
    if (cs[k].abs() > thr) return false;
  }
  return true;
}

// The checks that make the result a certificate: refined values inside
// their enclosures, a sign change (or exact vanishing) across each one,
// pairwise disjointness, and a total count equal to the degree. Exact mode
// evaluates exactly; float mode treats values under the coefficient noise
// threshold as zero.
void certify_rootset(const Poly& p, const RootSet& rs) {
  bool exactm = p.mode() == ScalarMode::exact;
  if (rs.roots.size() != size_t(p.degree())) {
    throw certification_error("found " + std::to_string(rs.roots.size()) +
                              " roots for degree " +
                              std::to_string(p.degree()));
  }
  Scalar noise = exactm ? p.leading().of_int(0) : float_noise_threshold(p);
  for (const RootEnclosure& r : rs.roots) {
    if (!(r.lo <= r.refined && r.refined <= r.hi)) {
      throw certification_error("refined value escapes its enclosure");
    }
    if (r.is_point()) {
      if (p.eval(r.lo).abs() > noise) {
        throw certification_error("claimed exact root does not annihilate p");
      }
      continue;
    }
    Scalar vlo = p.eval(r.lo);
    Scalar vhi = p.eval(r.hi);
    if (exactm) {
      if (vlo.sign() * vhi.sign() != -1) {
        throw certification_error("no sign change across enclosure [" +
                                  r.lo.str() + ", " + r.hi.str() + "]");
      }
    } else if (vlo.abs() > noise && vhi.abs() > noise &&
               vlo.sign() == vhi.sign()) {
      throw certification_error("no sign change across a float enclosure");
    }
  }
  for (size_t i = 0; i + 1 < rs.roots.size(); ++i) {
    if (!(rs.roots[i].hi < rs.roots[i + 1].lo)) {
      throw certification_error("enclosures overlap or touch");
    }
  }
}

}  // namespace

int sturm_count(const Poly& p, const Scalar& a, const Scalar& b) {
  if (!a.is_exact() || !b.is_exact()) {
    throw mode_error("certified root counting requires exact endpoints");
  }
  SturmChain chain(p);
  if (!chain.squarefree()) {
    throw certification_error("polynomial is not squarefree: gcd(p, p') has degree " +
                              std::to_string(chain.gcd_degree()));
  }
  return chain.count(a, b);
}

RootSet find_real_roots(const Poly& p, const ModeConfig& cfg,
                        std::string source) {
  cfg.validate();
  if (p.is_zero()) {
    throw param_error("cannot isolate roots of the zero polynomial");
  }
  if (cfg.mode != p.mode()) {
    throw mode_error("config mode does not match the polynomial mode");
  }

  RootSet rs;
  rs.source = std::move(source);
  rs.degree = unsigned(p.degree());
  rs.tolerance = cfg.refine_tolerance;
  if (p.degree() == 0) return rs;

  bool exactm = p.mode() == ScalarMode::exact;
  Scalar zero = p.leading().of_int(0);
  Scalar minus_one = p.leading().of_int(-1);

  if (p.is_even_poly()) {
    rs.roots = mirror_pairs(positive_roots(p, cfg));
  } else if (is_odd_parity(p)) {
    Poly cof = p.deflate_root(zero);
    if (!cof.is_even_poly()) {
      throw param_error("unsupported root structure: x deflation left an uneven cofactor");
    }
    std::vector<RootEnclosure> pairs = mirror_pairs(positive_roots(cof, cfg));
    RootEnclosure origin;
    origin.lo = zero;
    origin.hi = zero;
    origin.refined = zero;
    origin.at_zero = true;
    pairs.insert(pairs.begin() + pairs.size() / 2, std::move(origin));
    rs.roots = std::move(pairs);
  } else {
    Scalar at_end = p.eval(minus_one);
    bool vanishes = exactm ? at_end.is_zero()
                           : at_end.abs() <= float_noise_threshold(p);
    if (!vanishes) {
      throw param_error(
          "unsupported root structure: expected an even polynomial, an "
          "odd-parity polynomial, or (1 + x) times an even polynomial");
    }
    Poly cof = p.deflate_root(minus_one);
    if (!cof.is_even_poly()) {
      throw param_error("unsupported root structure: the cofactor of (1 + x) is not even");
    }
    RootEnclosure endpoint;
    endpoint.lo = minus_one;
    endpoint.hi = minus_one;
    endpoint.refined = minus_one;
    endpoint.at_minus_one = true;
    rs.roots.push_back(std::move(endpoint));
    std::vector<RootEnclosure> pairs = mirror_pairs(positive_roots(cof, cfg));
    rs.roots.insert(rs.roots.end(), pairs.begin(), pairs.end());
  }

  certify_rootset(p, rs);
  return rs;
}

RootSet find_zeros(const FamilyParams& fp, unsigned n, const ModeConfig& cfg) {
  Poly p = p_poly_ttrr(fp, n);
  std::string src = "P_" + std::to_string(n) + "(alpha=" + fp.alpha.str() +
                    ", q=" + std::to_string(fp.q) + ")";
  RootSet rs = find_real_roots(p, cfg, std::move(src));
  if (n % 2 == 1 && (rs.roots.empty() || !rs.roots.front().at_minus_one)) {
    throw certification_error("odd-degree member lost its root at -1");
  }
  return rs;
}

RootSet find_zeros(const FamilyParams& fp, unsigned n) {
  return find_zeros(fp, n, default_config_like(fp.alpha));
}

InterlacingReport check_interlacing(const RootSet& rs_lo,
                                    const RootSet& rs_hi) {
  if (rs_hi.degree != rs_lo.degree + 1) {
    throw param_error(
        "interlacing check needs degrees differing by one, lower set first");
  }
  if (rs_lo.roots.size() != rs_lo.degree ||
      rs_hi.roots.size() != rs_hi.degree) {
    throw param_error("interlacing check needs complete real root sets");
  }
  auto before = [](const RootEnclosure& a, const RootEnclosure& b) -> bool {
    if (a.hi < b.lo) return true;
    if (b.hi < a.lo) return false;
    throw certification_error("overlapping enclosures; refine before comparing");
  };

  InterlacingReport rep;
  std::optional<std::pair<Scalar, Scalar>> witness;
  bool witness_straddles = false;
  bool every_gap_single = true;
  size_t placed = 0;
  for (size_t g = 0; g + 1 < rs_hi.roots.size(); ++g) {
    int count = 0;
    for (const RootEnclosure& r : rs_lo.roots) {
      if (before(rs_hi.roots[g], r) && before(r, rs_hi.roots[g + 1])) ++count;
    }
    if (count == 0) {
      // Prefer the gap straddling 0, the family's characteristic witness.
      bool straddles = rs_hi.roots[g].refined.sign() < 0 &&
                       rs_hi.roots[g + 1].refined.sign() > 0;
      if (!witness || (straddles && !witness_straddles)) {
        witness = {rs_hi.roots[g].refined, rs_hi.roots[g + 1].refined};
        witness_straddles = straddles;
      }
    }
    if (count != 1) every_gap_single = false;
    placed += size_t(count);
  }
  rep.interlaces = every_gap_single && placed == rs_lo.roots.size();
  if (!rep.interlaces) rep.witness = witness;
  return rep;
}

std::vector<RootEnclosure> largest_zero_chain(const Scalar& alpha, unsigned q,
                                              unsigned n,
                                              const ModeConfig& cfg) {
  if (n == 0) throw param_error("the largest-zero chain needs n >= 1");
  std::vector<RootEnclosure> chain;
  chain.reserve(n);
  for (unsigned k = 0; k < n; ++k) {
    FamilyParams fp(alpha + alpha.of_int(long(k)), q + k);
    RootSet rs = find_zeros(fp, 2 * (n - k), cfg);
    chain.push_back(rs.roots.back());
  }
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i + 1].hi < chain[i].lo) continue;
    if (chain[i + 1].lo > chain[i].hi) {
      throw certification_error("largest-zero ordering violated between steps " +
                                std::to_string(i) + " and " +
                                std::to_string(i + 1));
    }
    throw certification_error(
        "largest-zero enclosures overlap; tolerance too coarse to order");
  }
  return chain;
}

std::vector<RootEnclosure> largest_zero_chain(const Scalar& alpha, unsigned q,
                                              unsigned n) {
  return largest_zero_chain(alpha, q, n, default_config_like(alpha));
}

CheckOutcome odd_even_zero_map(const Scalar& alpha, unsigned q, unsigned n,
                               unsigned k, unsigned l, const ModeConfig& cfg) {
  if (n == 0) throw param_error("the odd-to-even zero map needs n >= 1");
  FamilyParams odd_side(alpha + alpha.of_int(long(k)), q + l);
  FamilyParams even_side(alpha + alpha.of_int(long(k) + 1), q + l);

  CheckOutcome out;
  if (cfg.mode == ScalarMode::exact) {
    Scalar one = alpha.of_int(1);
    Poly residual = p_poly_ttrr(odd_side, 2 * n + 1) -
                    Poly({one, one}) * p_poly_ttrr(even_side, 2 * n);
    out.pass = residual.is_zero();
    out.detail = out.pass
                     ? "factorization identity holds exactly, so the odd zeros "
                       "are -1 plus the even-relative zeros"
                     : "factorization residual has degree " +
                           std::to_string(residual.degree());
    return out;
  }

  RootSet odd_roots = find_zeros(odd_side, 2 * n + 1, cfg);
  RootSet even_roots = find_zeros(even_side, 2 * n, cfg);
  Scalar match_tol = cfg.refine_tolerance * alpha.of_int(4);
  if (odd_roots.roots.size() != even_roots.roots.size() + 1 ||
      !odd_roots.roots.front().at_minus_one) {
    out.pass = false;
    out.detail = "root counts or the structural -1 do not line up";
    return out;
  }
  out.pass = true;
  for (size_t i = 0; i < even_roots.roots.size(); ++i) {
    Scalar diff =
        (odd_roots.roots[i + 1].refined - even_roots.roots[i].refined).abs();
    if (diff > match_tol) {
      out.pass = false;
      out.detail = "zero mismatch at position " + std::to_string(i + 1) +
                   ": difference " + diff.decimal_str(6);
      return out;
    }
  }
  out.detail = "all " + std::to_string(even_roots.roots.size()) +
               " interior zeros match within tolerance";
  return out;
}

CheckOutcome odd_even_zero_map(const Scalar& alpha, unsigned q, unsigned n,
                               unsigned k, unsigned l) {
  return odd_even_zero_map(alpha, q, n, k, l, default_config_like(alpha));
}

CheckOutcome critical_point_check(const FamilyParams& fp, unsigned n,
                                  const ModeConfig& cfg) {
  if (n < 2 || n % 2 != 0) {
    throw param_error("the gap check needs an even degree n >= 2");
  }
  RootSet rs = find_zeros(fp, n, cfg);
  Poly inner = p_poly_ttrr(fp.shifted(1, 1), n - 2);

  std::vector<RootEnclosure> pos;
  for (const RootEnclosure& r : rs.roots) {
    if (r.lo.sign() > 0 || (r.is_point() && r.refined.sign() > 0)) {
      pos.push_back(r);
    }
  }

  CheckOutcome out{true, ""};
  if (pos.size() < 2) {
    out.detail = "fewer than two positive zeros; nothing to bracket";
    return out;
  }

  if (cfg.mode == ScalarMode::exact) {
    SturmChain chain(inner);
    if (!chain.squarefree()) {
      throw certification_error("comparison polynomial is not squarefree");
    }
    auto roots_inside = [&](const RootEnclosure& r) {
      if (r.is_point()) return inner.eval(r.lo).is_zero() ? 1 : 0;
      return chain.count(r.lo, r.hi);
    };
    for (size_t i = 0; i + 1 < pos.size(); ++i) {
      if (roots_inside(pos[i]) != 0 || roots_inside(pos[i + 1]) != 0) {
        throw certification_error(
            "a zero of the comparison polynomial sits inside an enclosure; "
            "tighten the tolerance");
      }
      int gap = chain.count(pos[i].hi, pos[i + 1].lo);
      if (gap != 1) {
        out.pass = false;
        out.detail = "gap (" + pos[i].refined.decimal_str(8) + ", " +
                     pos[i + 1].refined.decimal_str(8) + ") holds " +
                     std::to_string(gap) + " zeros, expected exactly 1";
        return out;
      }
    }
    out.detail = "each of the " + std::to_string(pos.size() - 1) +
                 " positive gaps holds exactly one zero";
    return out;
  }

  RootSet inner_roots = find_real_roots(inner, cfg, "comparison");
  for (size_t i = 0; i + 1 < pos.size(); ++i) {
    int gap = 0;
    for (const RootEnclosure& r : inner_roots.roots) {
      if (pos[i].refined < r.refined && r.refined < pos[i + 1].refined) ++gap;
    }
    if (gap != 1) {
      out.pass = false;
      out.detail = "gap (" + pos[i].refined.decimal_str(8) + ", " +
                   pos[i + 1].refined.decimal_str(8) + ") holds " +
                   std::to_string(gap) + " zeros, expected exactly 1";
      return out;
    }
  }
  out.detail = "each of the " + std::to_string(pos.size() - 1) +
               " positive gaps holds exactly one zero";
  return out;
}

CheckOutcome critical_point_check(const FamilyParams& fp, unsigned n) {
  return critical_point_check(fp, n, default_config_like(fp.alpha));
}

}  // namespace swop
