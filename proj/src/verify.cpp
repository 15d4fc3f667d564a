#include "swop/verify.hpp"

#include <json.hpp>

#include <utility>

#include "swop/hypergeom.hpp"
#include "swop/orthogonality.hpp"
#include "swop/zeros.hpp"

namespace swop {

unsigned SuiteReport::failures() const {
  unsigned f = 0;
  for (const CheckEntry& e : entries) {
    if (!e.pass) ++f;
  }
  return f;
}

VerifySpec default_grid(const ModeConfig& cfg) {
  VerifySpec spec;
  const std::pair<long, long> alphas[] = {{-1, 2}, {0, 1},  {1, 2},
                                          {1, 1},  {3, 2}, {5, 2}};
  for (auto [num, den] : alphas) {
    spec.alphas.push_back(cfg.ratio(num, den));
  }
  spec.qs = {0, 1, 2, 3};
  spec.fault_delta = cfg.ratio(1, 1000);
  return spec;
}

namespace {

// Comparison slack for float runs; exact runs demand equality.
Scalar residual_tolerance(const Scalar& like) {
  if (like.is_exact()) return like.of_int(0);
  return like.of_pow2(-(like.precision_bits() - 8));
}

// Slack for values reconstructed through the moment oracle, which loses a
// few bits per orthogonalization step; never looser than half the working
// precision, and still exactly zero in exact mode.
Scalar gs_tolerance(const Scalar& like, unsigned n) {
  if (like.is_exact()) return like.of_int(0);
  long prec = like.precision_bits();
  long e = prec - 8 - 3 * long(n);
  if (e < prec / 2) e = prec / 2;
  return like.of_pow2(-e);
}

bool close_to(const Scalar& a, const Scalar& b, const Scalar& tol) {
  return (a - b).abs() <= tol;
}

std::string norm_detail(const Poly& residual) {
  if (residual.is_zero()) return "residual = 0";
  return "max |residual coeff| = " + residual.max_abs_coeff().decimal_str(6);
}

// The recurrence with one gamma shifted by delta, for the negative control.
Poly p_poly_faulted(const FamilyParams& fp, unsigned n, unsigned fault_index,
                    const Scalar& delta) {
  Scalar one = fp.alpha.of_int(1);
  Poly prev = Poly::constant(one);
  if (n == 0) return prev;
  Poly cur({one, one});
  Poly x = Poly::monomial(1, one);
  for (unsigned k = 2; k <= n; ++k) {
    Scalar g = ttrr_gamma(fp, k - 1);
    if (k - 1 == fault_index) g += delta;
    Poly next = (x - Poly::constant(ttrr_beta(fp, k - 1))) * cur -
                prev.scaled(g);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

class SuiteBuilder {
 public:
  SuiteBuilder(const VerifySpec& spec, const ModeConfig& cfg)
      : spec_(spec), cfg_(cfg) {}

  SuiteReport build() {
    SuiteReport rep;
    rep.mode = cfg_.mode;
    if (cfg_.mode == ScalarMode::floating) {
      rep.precision_bits = cfg_.precision_bits;
    }
    for (const Scalar& alpha : spec_.alphas) {
      for (unsigned q : spec_.qs) {
        grid_point(rep, FamilyParams(alpha, q));
      }
    }
    if (spec_.fault_gamma_index > 0 && !spec_.alphas.empty() &&
        !spec_.qs.empty()) {
      fault_control(rep, FamilyParams(spec_.alphas[0], spec_.qs[0]));
    }
    return rep;
  }

 private:
  void add(SuiteReport& rep, const FamilyParams& fp, std::string identity,
           unsigned n, bool pass, std::string detail) {
    rep.entries.push_back(CheckEntry{std::move(identity), fp.alpha.str(), fp.q,
                                     n, pass, std::move(detail)});
  }

  void grid_point(SuiteReport& rep, const FamilyParams& fp) {
    family_identities(rep, fp);
    contiguous_relations(rep, fp);
    algebra_routes(rep, fp);
    orthogonality_checks(rep, fp);
    if (spec_.with_zero_checks) zero_checks(rep, fp);
  }

  void family_identities(SuiteReport& rep, const FamilyParams& fp) {
    unsigned h = spec_.n_max / 2;
    Scalar tol = residual_tolerance(fp.alpha);
    for (IdentityId id : all_identities()) {
      unsigned lo = (id == IdentityId::derivative_even_gg ||
                     id == IdentityId::derivative_even_shifted)
                        ? 1
                        : 0;
      for (unsigned n = lo; n <= h; ++n) {
        Poly residual = check_identity(id, fp, n);
        bool pass = residual.is_zero() || residual.max_abs_coeff() <= tol;
        add(rep, fp, identity_name(id), n, pass, norm_detail(residual));
      }
    }
  }

  void contiguous_relations(SuiteReport& rep, const FamilyParams& fp) {
    Scalar half = fp.alpha.of_ratio(1, 2);
    std::vector<Scalar> zs = {fp.alpha.of_ratio(1, 4),
                              fp.alpha.of_ratio(-2, 3)};
    unsigned h = spec_.n_max / 2;
    for (int rel = 1; rel <= 5; ++rel) {
      bool pass = true;
      std::string detail = "residual = 0 at every sample";
      unsigned samples = 0;
      // Relation shifts must keep the series terminating: the first upper
      // parameter -m carries that for every shift once m >= 1.
      for (unsigned m = 1; m <= h && pass; ++m) {
        Scalar a = fp.alpha.of_int(-long(m));
        Scalar b = -fp.alpha.of_int(long(m) + long(fp.q)) - half;
        Scalar c = -fp.alpha.of_int(2 * long(m) + long(fp.q)) - fp.alpha - half;
        HypParams params(a, b, c);
        for (const Scalar& z : zs) {
          ContigEval ev = contiguous_residual_scaled(rel, params, z);
          Scalar scale = ev.scale;
          if (scale < fp.alpha.of_int(1)) scale = fp.alpha.of_int(1);
          if (ev.residual.abs() > residual_tolerance(fp.alpha) * scale) {
            pass = false;
            detail = "residual " + ev.residual.decimal_str(6) + " at m = " +
                     std::to_string(m) + ", z = " + z.str();
            break;
          }
          ++samples;
        }
      }
      if (pass) detail += " (" + std::to_string(samples) + " samples)";
      add(rep, fp, "contiguous_relation_" + std::to_string(rel), h, pass,
          detail);
    }
  }

  void algebra_routes(SuiteReport& rep, const FamilyParams& fp) {
    Scalar tol = residual_tolerance(fp.alpha);
    {
      bool pass = true;
      std::string detail = "terminating-series route matches the recurrence";
      for (unsigned n = 0; n <= spec_.n_max; n += 2) {
        Poly residual = p_poly_ttrr(fp, n) - p_poly_hyper(fp, n);
        if (!(residual.is_zero() || residual.max_abs_coeff() <= tol)) {
          pass = false;
          detail = "mismatch at degree " + std::to_string(n) + ", " +
                   norm_detail(residual);
          break;
        }
      }
      add(rep, fp, "hyper_route_equivalence", spec_.n_max, pass, detail);
    }
    {
      bool pass = true;
      std::string detail = "ascending normal form is monic and matches";
      for (unsigned n = 0; n <= spec_.n_max; n += 2) {
        try {
          Poly residual = p_poly_ttrr(fp, n) - p_poly_hyper_ascending(fp, n).value;
          if (!(residual.is_zero() || residual.max_abs_coeff() <= tol)) {
            pass = false;
            detail = "mismatch at degree " + std::to_string(n) + ", " +
                     norm_detail(residual);
            break;
          }
        } catch (const certification_error& e) {
          pass = false;
          detail = e.what();
          break;
        }
      }
      add(rep, fp, "ascending_normal_form", spec_.n_max, pass, detail);
    }
  }

  void orthogonality_checks(SuiteReport& rep, const FamilyParams& fp) {
    {
      bool pass = true;
      std::string detail = "recovered coefficients match the closed forms";
      std::vector<RecurrencePair> got = recurrence_from_oracle(fp, spec_.n_max + 1);
      std::vector<RecurrencePair> want = recurrence_table(fp, spec_.n_max + 1);
      for (size_t k = 0; k < got.size(); ++k) {
        Scalar ktol = gs_tolerance(fp.alpha, unsigned(k));
        Scalar scale_b = fp.alpha.of_int(1);
        bool ok = close_to(got[k].beta, want[k].beta, ktol * scale_b);
        if (ok && got[k].has_gamma) {
          Scalar scale_g = want[k].gamma.abs();
          if (scale_g < scale_b) scale_g = scale_b;
          ok = close_to(got[k].gamma, want[k].gamma, ktol * scale_g);
        }
        if (!ok) {
          pass = false;
          detail = "mismatch at index " + std::to_string(k);
          break;
        }
      }
      add(rep, fp, "recurrence_from_moments", spec_.n_max, pass, detail);
    }
    {
      bool pass = true;
      std::string detail = "moment-built basis equals the recurrence family";
      std::vector<Poly> oracle = gram_schmidt_oracle(fp, spec_.n_max);
      for (unsigned k = 0; k <= spec_.n_max; ++k) {
        Poly residual = oracle[k] - p_poly_ttrr(fp, k);
        Scalar ktol = gs_tolerance(fp.alpha, k);
        if (!(residual.is_zero() || residual.max_abs_coeff() <= ktol)) {
          pass = false;
          detail = "mismatch at degree " + std::to_string(k) + ", " +
                   norm_detail(residual);
          break;
        }
      }
      add(rep, fp, "oracle_route_equivalence", spec_.n_max, pass, detail);
    }
    {
      bool pass = true;
      std::string detail = "all lower powers integrate to zero, diagonals do not";
      for (unsigned n = 0; n <= spec_.n_max; ++n) {
        OrthogonalityReport orep =
            verify_orthogonality(fp, p_poly_ttrr(fp, n), n);
        if (!orep.pass) {
          pass = false;
          detail = "characterization fails at degree " + std::to_string(n);
          break;
        }
      }
      add(rep, fp, "orthogonality_characterization", spec_.n_max, pass, detail);
    }
    {
      // For even-degree members, <x p, p> = -<p, p>: the centered term of
      // the recurrence sits at -1.
      bool pass = true;
      std::string detail = "<x p, p> = -<p, p> for every even degree";
      InnerProduct ip(fp, 2 * spec_.n_max + 1);
      Poly x = Poly::monomial(1, fp.alpha.of_int(1));
      for (unsigned n = 0; n <= spec_.n_max; n += 2) {
        Poly p = p_poly_ttrr(fp, n);
        Scalar lhs = ip.of(x * p, p);
        Scalar rhs = -ip.of(p, p);
        Scalar scale = rhs.abs();
        if (scale < fp.alpha.of_int(1)) scale = fp.alpha.of_int(1);
        if (!close_to(lhs, rhs, gs_tolerance(fp.alpha, n) * scale)) {
          pass = false;
          detail = "sign identity fails at degree " + std::to_string(n);
          break;
        }
      }
      add(rep, fp, "even_beta_reflection", spec_.n_max, pass, detail);
    }
    {
      // A combination p_n + p_{n+r} satisfies the partial orthogonality
      // conditions and must expand with no component below degree n.
      bool pass = true;
      std::string detail = "partial orthogonality pins the expansion window";
      unsigned n = 2, r = 2;
      if (spec_.n_max >= n + r) {
        std::vector<Poly> basis = gram_schmidt_oracle(fp, n + r);
        Poly combo = basis[n] + basis[n + r];
        InnerProduct ip(fp, 2 * (n + r));
        Scalar one = fp.alpha.of_int(1);
        Scalar scale = combo.max_abs_coeff();
        if (scale < one) scale = one;
        Scalar ptol = gs_tolerance(fp.alpha, n + r) * scale;
        for (unsigned k = 0; k < n && pass; ++k) {
          if (ip.of(Poly::monomial(k, one), combo).abs() > ptol) {
            pass = false;
            detail = "lower moment " + std::to_string(k) + " is nonzero";
          }
        }
        if (pass && !(ip.of(Poly::monomial(n, one), combo).abs() > ptol)) {
          pass = false;
          detail = "diagonal moment vanished";
        }
        std::vector<Scalar> lambda = expand_in_basis(combo, basis);
        for (unsigned k = 0; k < n && pass; ++k) {
          if (lambda[k].abs() > ptol) {
            pass = false;
            detail = "expansion leaks below the window at degree " +
                     std::to_string(k);
          }
        }
      } else {
        detail = "skipped: n_max too small for the combination";
      }
      add(rep, fp, "partial_orthogonality_span", n + r, pass, detail);
    }
  }

  void zero_checks(SuiteReport& rep, const FamilyParams& fp) {
    {
      bool pass = true;
      std::string detail = "certified root count equals the degree";
      for (unsigned n = 0; n <= spec_.zeros_n_max; ++n) {
        try {
          RootSet rs = find_zeros(fp, n, cfg_);
          if (rs.roots.size() != n) {
            pass = false;
            detail = "degree " + std::to_string(n) + " produced " +
                     std::to_string(rs.roots.size()) + " roots";
            break;
          }
        } catch (const error& e) {
          pass = false;
          detail = std::string("degree ") + std::to_string(n) + ": " + e.what();
          break;
        }
      }
      add(rep, fp, "certified_real_roots", spec_.zeros_n_max, pass, detail);
    }
    {
      bool pass = true;
      std::string detail = "consecutive members refuse to interlace, symmetrically";
      for (unsigned n = 2; n + 1 <= spec_.zeros_n_max; n += 2) {
        try {
          RootSet lo = find_zeros(fp, n, cfg_);
          RootSet hi = find_zeros(fp, n + 1, cfg_);
          InterlacingReport ir = check_interlacing(lo, hi);
          if (ir.interlaces || !ir.witness) {
            pass = false;
            detail = "expected a non-interlacing witness at degrees " +
                     std::to_string(n) + "/" + std::to_string(n + 1);
            break;
          }
          Scalar sum = ir.witness->first + ir.witness->second;
          Scalar tol = residual_tolerance(fp.alpha) + rs_width_slack(lo);
          if (sum.abs() > tol) {
            pass = false;
            detail = "witness gap is not symmetric around 0";
            break;
          }
        } catch (const error& e) {
          pass = false;
          detail = e.what();
          break;
        }
      }
      add(rep, fp, "non_interlacing", spec_.zeros_n_max, pass, detail);
    }
    {
      unsigned chain_n = spec_.zeros_n_max / 2;
      bool pass = true;
      std::string detail = "largest zeros strictly decrease along the shifted chain";
      if (chain_n >= 1) {
        try {
          largest_zero_chain(fp.alpha, fp.q, chain_n, cfg_);
        } catch (const error& e) {
          pass = false;
          detail = e.what();
        }
      } else {
        detail = "skipped: zeros_n_max too small";
      }
      add(rep, fp, "largest_zero_chain", chain_n, pass, detail);
    }
    {
      bool pass = true;
      std::string detail = "odd zeros are -1 plus the shifted even zeros";
      unsigned map_cap = spec_.zeros_n_max >= 3 ? (spec_.zeros_n_max - 1) / 2 : 0;
      for (unsigned n = 1; n <= map_cap && pass; ++n) {
        for (unsigned k = 0; k <= 1 && pass; ++k) {
          for (unsigned l = 0; l <= 1 && pass; ++l) {
            CheckOutcome oc;
            try {
              oc = odd_even_zero_map(fp.alpha, fp.q, n, k, l, cfg_);
            } catch (const error& e) {
              oc.pass = false;
              oc.detail = e.what();
            }
            if (!oc.pass) {
              pass = false;
              detail = "n = " + std::to_string(n) + ", k = " +
                       std::to_string(k) + ", l = " + std::to_string(l) + ": " +
                       oc.detail;
            }
          }
        }
      }
      if (map_cap == 0) detail = "skipped: zeros_n_max too small";
      add(rep, fp, "odd_even_zero_map", map_cap, pass, detail);
    }
    {
      bool pass = true;
      std::string detail = "each positive gap holds exactly one shifted zero";
      for (unsigned n = 2; n <= spec_.zeros_n_max; n += 2) {
        try {
          CheckOutcome oc = critical_point_check(fp, n, cfg_);
          if (!oc.pass) {
            pass = false;
            detail = "degree " + std::to_string(n) + ": " + oc.detail;
            break;
          }
        } catch (const error& e) {
          pass = false;
          detail = e.what();
          break;
        }
      }
      add(rep, fp, "gap_count", spec_.zeros_n_max, pass, detail);
    }
  }

  // Total enclosure slack of a root set, for symmetry comparisons of
  // refined values.
  static Scalar rs_width_slack(const RootSet& rs) {
    return rs.tolerance + rs.tolerance;
  }

  void fault_control(SuiteReport& rep, const FamilyParams& fp) {
    unsigned idx = unsigned(spec_.fault_gamma_index);
    unsigned degree = idx + 1;
    Poly bad = p_poly_faulted(fp, degree, idx, spec_.fault_delta);
    OrthogonalityReport orep = verify_orthogonality(fp, bad, degree);
    bool detected = !orep.pass;
    std::string detail =
        detected
            ? "perturbing gamma_" + std::to_string(idx) + " by " +
                  spec_.fault_delta.str() +
                  " breaks orthogonality at degree " + std::to_string(degree)
            : "perturbation went undetected: the orthogonality check is vacuous";
    add(rep, fp, "gamma_fault_detected", degree, detected, detail);
  }

  const VerifySpec& spec_;
  const ModeConfig& cfg_;
};

std::string csv_escape(const std::string& s) {
  bool needs = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

SuiteReport run_verify_suite(const VerifySpec& spec, const ModeConfig& cfg) {
  cfg.validate();
  return SuiteBuilder(spec, cfg).build();
}

std::string render_json(const SuiteReport& rep) {
  nlohmann::ordered_json doc;
  doc["suite"] = "verify";
  doc["mode"] = rep.mode == ScalarMode::exact ? "exact" : "float";
  if (rep.mode == ScalarMode::floating) {
    doc["precision_bits"] = rep.precision_bits;
  }
  doc["entries"] = nlohmann::ordered_json::array();
  for (const CheckEntry& e : rep.entries) {
    nlohmann::ordered_json row;
    row["identity"] = e.identity;
    row["params"] = {{"alpha", e.alpha}, {"q", e.q}};
    row["n"] = e.n;
    row["status"] = e.pass ? "pass" : "fail";
    row["detail"] = e.detail;
    doc["entries"].push_back(std::move(row));
  }
  doc["checks"] = rep.entries.size();
  doc["failures"] = rep.failures();
  doc["status"] = rep.all_pass() ? "pass" : "fail";
  return doc.dump(2) + "\n";
}

std::string render_csv(const SuiteReport& rep) {
  std::string out = "identity,alpha,q,n,status,detail\n";
  for (const CheckEntry& e : rep.entries) {
    out += csv_escape(e.identity) + "," + csv_escape(e.alpha) + "," +
           std::to_string(e.q) + "," + std::to_string(e.n) + "," +
           (e.pass ? "pass" : "fail") + "," + csv_escape(e.detail) + "\n";
  }
  return out;
}

std::string render_text(const SuiteReport& rep) {
  std::string out;
  for (const CheckEntry& e : rep.entries) {
    out += std::string(e.pass ? "PASS" : "FAIL") + "  " + e.identity +
           "  alpha=" + e.alpha + " q=" + std::to_string(e.q) +
           " n=" + std::to_string(e.n) + "  " + e.detail + "\n";
  }
  out += std::to_string(rep.entries.size()) + " checks, " +
         std::to_string(rep.failures()) + " failures\n";
  return out;
}

}  // namespace swop
