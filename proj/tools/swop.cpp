// Command-line front end: coefficient tables, polynomial generation along
// selectable routes, certified zero reports, the verification suite, and
// parameter sweeps. Output is text, CSV, or JSON; exact-mode output is
// deterministic byte for byte.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "swop/families.hpp"
#include "swop/orthogonality.hpp"
#include "swop/poly.hpp"
#include "swop/scalar.hpp"
#include "swop/verify.hpp"
#include "swop/zeros.hpp"

namespace {

using nlohmann::ordered_json;
using namespace swop;

// Flags shared by every verb.
struct CommonOpts {
  std::string mode = "exact";
  int precision = 128;
  std::string tol;
  std::string format = "text";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--mode", c.mode, "Arithmetic mode")
      ->check(CLI::IsMember({"exact", "float"}))
      ->capture_default_str();
  cmd->add_option("--precision", c.precision, "Mantissa bits in float mode")
      ->check(CLI::Range(64, 1 << 20))
      ->capture_default_str();
  cmd->add_option("--tol", c.tol,
                  "Root refinement tolerance (rational or decimal string)");
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", c.out, "Write output to this file instead of stdout");
}

ModeConfig make_config(const CommonOpts& c) {
  ModeConfig cfg = c.mode == "float" ? ModeConfig::floating_config(c.precision)
                                     : ModeConfig::exact_config();
  if (!c.tol.empty()) cfg.refine_tolerance = cfg.parse(c.tol);
  cfg.validate();
  return cfg;
}

void emit(const CommonOpts& c, const std::string& body) {
  if (c.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw param_error("cannot open output file: " + c.out);
  f << body;
}

// Exact scalars serialize as "p/q" strings so they round-trip losslessly;
// floats carry a lossless hex field plus a decimal convenience field.
ordered_json scalar_json(const Scalar& s) {
  if (s.is_exact()) return s.str();
  ordered_json j;
  j["hex"] = s.hex_str();
  j["dec"] = s.decimal_str();
  return j;
}

// Single-cell rendering for CSV and text: "p/q" exactly, or the
// round-trippable decimal in float mode.
std::string cell(const Scalar& s) { return s.str(); }

std::string approx(const Scalar& s) { return s.decimal_str(17); }

void stamp_mode(ordered_json& j, const ModeConfig& cfg) {
  j["mode"] = cfg.mode == ScalarMode::exact ? "exact" : "float";
  if (cfg.mode == ScalarMode::floating) j["precision_bits"] = cfg.precision_bits;
}

ordered_json params_json(const FamilyParams& fp) {
  ordered_json j;
  j["alpha"] = scalar_json(fp.alpha);
  j["q"] = fp.q;
  return j;
}

std::string family_label(const FamilyParams& fp, unsigned n) {
  return "P_" + std::to_string(n) + "(alpha=" + fp.alpha.str() +
         ", q=" + std::to_string(fp.q) + ")";
}

// ---------------------------------------------------------------- coeffs --

int run_coeffs(const CommonOpts& c, const std::string& alpha_text, unsigned q,
               unsigned n_max) {
  ModeConfig cfg = make_config(c);
  FamilyParams fp(cfg.parse(alpha_text), q);
  std::vector<RecurrencePair> rows = recurrence_table(fp, n_max + 1);

  if (c.format == "json") {
    ordered_json j;
    j["command"] = "coeffs";
    stamp_mode(j, cfg);
    j["params"] = params_json(fp);
    j["n_max"] = n_max;
    ordered_json arr = ordered_json::array();
    for (const RecurrencePair& r : rows) {
      ordered_json row;
      row["n"] = r.index;
      row["beta"] = scalar_json(r.beta);
      if (r.has_gamma) row["gamma"] = scalar_json(r.gamma);
      arr.push_back(row);
    }
    j["rows"] = arr;
    emit(c, j.dump(2) + "\n");
  } else if (c.format == "csv") {
    std::ostringstream os;
    os << "n,beta,gamma\n";
    for (const RecurrencePair& r : rows) {
      os << r.index << ',' << cell(r.beta) << ','
         << (r.has_gamma ? cell(r.gamma) : "") << '\n';
    }
    emit(c, os.str());
  } else {
    std::ostringstream os;
    os << "recurrence coefficients for alpha=" << fp.alpha.str()
       << ", q=" << fp.q << "\n";
    os << "n\tbeta\tgamma\n";
    for (const RecurrencePair& r : rows) {
      os << r.index << '\t' << cell(r.beta) << '\t'
         << (r.has_gamma ? cell(r.gamma) : "-") << '\n';
    }
    emit(c, os.str());
  }
  return 0;
}

// ------------------------------------------------------------------ poly --

Poly poly_by_route(const FamilyParams& fp, unsigned n, const std::string& route) {
  if (route == "ttrr") return p_poly_ttrr(fp, n);
  if (route == "hyper") return p_poly_hyper(fp, n);
  return gram_schmidt_oracle(fp, n)[n];
}

int run_poly(const CommonOpts& c, const std::string& alpha_text, unsigned q,
             unsigned n, const std::string& route) {
  ModeConfig cfg = make_config(c);
  FamilyParams fp(cfg.parse(alpha_text), q);
  Poly p = poly_by_route(fp, n, route);

  if (c.format == "json") {
    ordered_json j;
    j["command"] = "poly";
    stamp_mode(j, cfg);
    j["params"] = params_json(fp);
    j["n"] = n;
    j["route"] = route;
    ordered_json arr = ordered_json::array();
    for (unsigned k = 0; k <= n; ++k) arr.push_back(scalar_json(p.coeff(k)));
    j["coefficients"] = arr;
    emit(c, j.dump(2) + "\n");
  } else if (c.format == "csv") {
    std::ostringstream os;
    os << "k,coefficient\n";
    for (unsigned k = 0; k <= n; ++k) os << k << ',' << cell(p.coeff(k)) << '\n';
    emit(c, os.str());
  } else {
    std::ostringstream os;
    os << family_label(fp, n) << " via " << route << ": [";
    for (unsigned k = 0; k <= n; ++k) {
      if (k) os << ", ";
      os << cell(p.coeff(k));
    }
    os << "]\n";
    emit(c, os.str());
  }
  return 0;
}

// ----------------------------------------------------------------- zeros --

std::string structural_tag(const RootEnclosure& r) {
  if (r.at_minus_one) return "minus_one";
  if (r.at_zero) return "zero";
  return "";
}

ordered_json root_json(const RootEnclosure& r, unsigned index) {
  ordered_json j;
  j["index"] = index;
  j["value"] = scalar_json(r.refined);
  j["approx"] = approx(r.refined);
  j["lo"] = scalar_json(r.lo);
  j["hi"] = scalar_json(r.hi);
  std::string tag = structural_tag(r);
  if (!tag.empty()) j["structural"] = tag;
  return j;
}

// The two-family dataset behind the documentation figure: zeros of the
// degree-2 and degree-3 members on a shared axis, one CSV row per zero.
int run_zeros_figure(const CommonOpts& c, const FamilyParams& fp,
                     const ModeConfig& cfg) {
  std::ostringstream os;
  os << "x,family,zero_index\n";
  for (unsigned n = 2; n <= 3; ++n) {
    RootSet rs = find_zeros(fp, n, cfg);
    for (size_t i = 0; i < rs.roots.size(); ++i) {
      os << approx(rs.roots[i].refined) << ",P_" << n << ',' << i << '\n';
    }
  }
  emit(c, os.str());
  return 0;
}

int run_zeros(const CommonOpts& c, const std::string& alpha_text, unsigned q,
              unsigned n, int interlace_with, bool figure) {
  ModeConfig cfg = make_config(c);
  FamilyParams fp(cfg.parse(alpha_text), q);
  if (figure) return run_zeros_figure(c, fp, cfg);

  RootSet rs = find_zeros(fp, n, cfg);
  bool have_interlace = interlace_with >= 0;
  InterlacingReport ir;
  unsigned other = 0;
  if (have_interlace) {
    other = static_cast<unsigned>(interlace_with);
    if (other + 1 != n && n + 1 != other) {
      throw param_error("--interlace-with expects a degree adjacent to n");
    }
    RootSet rs_other = find_zeros(fp, other, cfg);
    const RootSet& lo = other < n ? rs_other : rs;
    const RootSet& hi = other < n ? rs : rs_other;
    ir = check_interlacing(lo, hi);
  }

  if (c.format == "json") {
    ordered_json j;
    j["command"] = "zeros";
    stamp_mode(j, cfg);
    j["params"] = params_json(fp);
    j["n"] = n;
    j["source"] = rs.source;
    j["degree"] = rs.degree;
    j["tolerance"] = scalar_json(rs.tolerance);
    ordered_json arr = ordered_json::array();
    for (size_t i = 0; i < rs.roots.size(); ++i) {
      arr.push_back(root_json(rs.roots[i], static_cast<unsigned>(i)));
    }
    j["roots"] = arr;
    if (have_interlace) {
      ordered_json il;
      il["against"] = other;
      il["interlaces"] = ir.interlaces;
      if (ir.witness) {
        il["witness"] = ordered_json::array(
            {scalar_json(ir.witness->first), scalar_json(ir.witness->second)});
        il["witness_approx"] = ordered_json::array(
            {approx(ir.witness->first), approx(ir.witness->second)});
      }
      j["interlacing"] = il;
    }
    emit(c, j.dump(2) + "\n");
  } else if (c.format == "csv") {
    std::ostringstream os;
    os << "index,value,lo,hi,structural\n";
    for (size_t i = 0; i < rs.roots.size(); ++i) {
      const RootEnclosure& r = rs.roots[i];
      os << i << ',' << cell(r.refined) << ',' << cell(r.lo) << ','
         << cell(r.hi) << ',' << structural_tag(r) << '\n';
    }
    if (have_interlace) {
      os << "interlacing," << (ir.interlaces ? "true" : "false") << ",,,\n";
      if (ir.witness) {
        os << "witness," << cell(ir.witness->first) << ','
           << cell(ir.witness->second) << ",,\n";
      }
    }
    emit(c, os.str());
  } else {
    std::ostringstream os;
    os << rs.source << ": " << rs.roots.size()
       << " certified roots, tolerance " << rs.tolerance.decimal_str(3) << "\n";
    for (size_t i = 0; i < rs.roots.size(); ++i) {
      const RootEnclosure& r = rs.roots[i];
      os << "  [" << i << "] " << approx(r.refined);
      if (r.at_minus_one) {
        os << "  (exact structural root at -1)";
      } else if (r.at_zero) {
        os << "  (exact structural root at 0)";
      } else if (r.is_point()) {
        os << "  (exact rational root)";
      } else {
        os << "  in [" << approx(r.lo) << ", " << approx(r.hi) << "]";
      }
      os << "\n";
    }
    if (have_interlace) {
      if (ir.interlaces) {
        os << "interlacing with degree " << other << ": yes\n";
      } else {
        os << "non-interlacing with degree " << other;
        if (ir.witness) {
          os << ", witness (" << approx(ir.witness->first) << ", "
             << approx(ir.witness->second) << ")";
        }
        os << "\n";
      }
    }
    emit(c, os.str());
  }
  return 0;
}

// ---------------------------------------------------------------- verify --

int run_verify(const CommonOpts& c, const std::vector<std::string>& alphas,
               const std::vector<unsigned>& qs, unsigned n_max,
               unsigned zeros_n_max, bool no_zeros, int fault_index,
               const std::string& fault_delta) {
  ModeConfig cfg = make_config(c);
  VerifySpec spec = default_grid(cfg);
  if (!alphas.empty()) {
    spec.alphas.clear();
    for (const std::string& a : alphas) spec.alphas.push_back(cfg.parse(a));
  }
  if (!qs.empty()) spec.qs = qs;
  spec.n_max = n_max;
  spec.zeros_n_max = zeros_n_max;
  spec.with_zero_checks = !no_zeros;
  spec.fault_gamma_index = fault_index;
  spec.fault_delta = cfg.parse(fault_delta);

  SuiteReport rep = run_verify_suite(spec, cfg);
  if (c.format == "json") {
    emit(c, render_json(rep));
  } else if (c.format == "csv") {
    emit(c, render_csv(rep));
  } else {
    emit(c, render_text(rep));
  }
  return rep.all_pass() ? 0 : 1;
}

// ----------------------------------------------------------------- sweep --

// One grid cell of a sweep: the recurrence rows, and optionally the
// certified root count and largest zero of each member.
struct SweepCell {
  FamilyParams fp;
  std::vector<RecurrencePair> rows;
  std::vector<unsigned> root_counts;
  std::vector<Scalar> largest;
  std::vector<bool> has_largest;
};

SweepCell sweep_cell(const FamilyParams& fp, unsigned n_max, bool with_zeros,
                     const ModeConfig& cfg) {
  SweepCell cell{fp, recurrence_table(fp, n_max + 1), {}, {}, {}};
  if (!with_zeros) return cell;
  for (unsigned n = 0; n <= n_max; ++n) {
    RootSet rs = find_zeros(fp, n, cfg);
    cell.root_counts.push_back(static_cast<unsigned>(rs.roots.size()));
    if (rs.roots.empty()) {
      cell.largest.push_back(cfg.integer(0));
      cell.has_largest.push_back(false);
    } else {
      cell.largest.push_back(rs.roots.back().refined);
      cell.has_largest.push_back(true);
    }
  }
  return cell;
}

int run_sweep(const CommonOpts& c, const std::vector<std::string>& alphas,
              const std::vector<unsigned>& qs, unsigned n_max,
              bool with_zeros) {
  ModeConfig cfg = make_config(c);
  VerifySpec grid = default_grid(cfg);
  std::vector<Scalar> as = grid.alphas;
  std::vector<unsigned> qv = grid.qs;
  if (!alphas.empty()) {
    as.clear();
    for (const std::string& a : alphas) as.push_back(cfg.parse(a));
  }
  if (!qs.empty()) qv = qs;

  // Cells are computed in parallel but assembled strictly in grid order,
  // so the output bytes do not depend on scheduling.
  std::vector<FamilyParams> points;
  for (const Scalar& a : as) {
    for (unsigned q : qv) points.emplace_back(a, q);
  }
  std::vector<std::future<SweepCell>> futures;
  futures.reserve(points.size());
  for (const FamilyParams& fp : points) {
    futures.push_back(std::async(std::launch::async, sweep_cell, fp, n_max,
                                 with_zeros, cfg));
  }
  std::vector<SweepCell> cells;
  cells.reserve(points.size());
  for (std::future<SweepCell>& f : futures) cells.push_back(f.get());

  if (c.format == "json") {
    ordered_json j;
    j["command"] = "sweep";
    stamp_mode(j, cfg);
    j["n_max"] = n_max;
    j["with_zeros"] = with_zeros;
    ordered_json arr = ordered_json::array();
    for (const SweepCell& sc : cells) {
      ordered_json cj;
      cj["params"] = params_json(sc.fp);
      ordered_json rows = ordered_json::array();
      for (size_t k = 0; k < sc.rows.size(); ++k) {
        const RecurrencePair& r = sc.rows[k];
        ordered_json row;
        row["n"] = r.index;
        row["beta"] = scalar_json(r.beta);
        if (r.has_gamma) row["gamma"] = scalar_json(r.gamma);
        if (with_zeros) {
          row["root_count"] = sc.root_counts[k];
          if (sc.has_largest[k]) {
            row["largest_zero"] = scalar_json(sc.largest[k]);
            row["largest_zero_approx"] = approx(sc.largest[k]);
          }
        }
        rows.push_back(row);
      }
      cj["rows"] = rows;
      arr.push_back(cj);
    }
    j["cells"] = arr;
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    const char sep = c.format == "csv" ? ',' : '\t';
    os << "alpha" << sep << "q" << sep << "n" << sep << "beta" << sep
       << "gamma";
    if (with_zeros) os << sep << "root_count" << sep << "largest_zero";
    os << '\n';
    for (const SweepCell& sc : cells) {
      for (size_t k = 0; k < sc.rows.size(); ++k) {
        const RecurrencePair& r = sc.rows[k];
        os << sc.fp.alpha.str() << sep << sc.fp.q << sep << r.index << sep
           << cell(r.beta) << sep << (r.has_gamma ? cell(r.gamma) : "");
        if (with_zeros) {
          os << sep << sc.root_counts[k] << sep
             << (sc.has_largest[k] ? approx(sc.largest[k]) : "");
        }
        os << '\n';
      }
    }
    emit(c, os.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Orthogonal polynomials for the signed weight "
      "x^(2q+1) (1-x^2)^alpha (1-x) on [-1, 1]"};
  app.require_subcommand(1);

  CommonOpts c_coeffs, c_poly, c_zeros, c_verify, c_sweep;

  std::string alpha = "0";
  unsigned q = 0;
  unsigned n = 0, n_max = 8, zeros_n_max = 6;
  std::string route = "ttrr";
  int interlace_with = -1;
  bool figure = false;
  std::vector<std::string> grid_alphas;
  std::vector<unsigned> grid_qs;
  bool no_zeros = false, with_zeros = false;
  int fault_index = 0;
  std::string fault_delta = "1/1000";

  CLI::App* coeffs =
      app.add_subcommand("coeffs", "Three-term recurrence coefficient table");
  coeffs->add_option("--alpha", alpha, "Weight exponent alpha (> -1)")
      ->required();
  coeffs->add_option("--q", q, "Weight exponent q (>= 0)")->required();
  coeffs->add_option("--n-max", n_max, "Largest index to tabulate")->required();
  add_common(coeffs, c_coeffs);

  CLI::App* poly =
      app.add_subcommand("poly", "Coefficients of one family member");
  poly->add_option("--alpha", alpha, "Weight exponent alpha (> -1)")->required();
  poly->add_option("--q", q, "Weight exponent q (>= 0)")->required();
  poly->add_option("--n", n, "Degree")->required();
  poly->add_option("--route", route,
                   "Construction route (hyper requires even n)")
      ->check(CLI::IsMember({"ttrr", "hyper", "gs-oracle"}))
      ->capture_default_str();
  add_common(poly, c_poly);

  CLI::App* zeros = app.add_subcommand("zeros", "Certified real zeros");
  zeros->add_option("--alpha", alpha, "Weight exponent alpha (> -1)")
      ->required();
  zeros->add_option("--q", q, "Weight exponent q (>= 0)")->required();
  CLI::Option* zeros_n = zeros->add_option("--n", n, "Degree");
  zeros->add_option("--interlace-with", interlace_with,
                    "Check interlacing against this adjacent degree");
  zeros->add_flag("--figure", figure,
                  "Emit the degree-2/degree-3 shared-axis dataset (CSV)");
  add_common(zeros, c_zeros);

  CLI::App* verify =
      app.add_subcommand("verify", "Run the identity verification suite");
  verify->add_option("--alpha", grid_alphas,
                     "Grid alphas (repeatable; default grid otherwise)");
  verify->add_option("--q", grid_qs,
                     "Grid q values (repeatable; default grid otherwise)");
  verify->add_option("--n-max", n_max, "Degree cap for algebraic checks")
      ->capture_default_str();
  verify
      ->add_option("--zeros-n-max", zeros_n_max,
                   "Degree cap for root-isolation checks")
      ->capture_default_str();
  verify->add_flag("--no-zeros", no_zeros, "Skip the root-isolation checks");
  verify->add_option(
      "--inject-gamma-fault", fault_index,
      "Perturb this recurrence gamma as a negative control (0 = off)");
  verify
      ->add_option("--fault-delta", fault_delta,
                   "Size of the injected perturbation")
      ->capture_default_str();
  add_common(verify, c_verify);

  CLI::App* sweep =
      app.add_subcommand("sweep", "Coefficient sweep over a parameter grid");
  sweep->add_option("--alpha", grid_alphas,
                    "Grid alphas (repeatable; default grid otherwise)");
  sweep->add_option("--q", grid_qs,
                    "Grid q values (repeatable; default grid otherwise)");
  sweep->add_option("--n-max", n_max, "Largest index per cell")
      ->capture_default_str();
  sweep->add_flag("--with-zeros", with_zeros,
                  "Add certified root counts and largest zeros");
  add_common(sweep, c_sweep);

  CLI11_PARSE(app, argc, argv);

  try {
    if (coeffs->parsed()) return run_coeffs(c_coeffs, alpha, q, n_max);
    if (poly->parsed()) return run_poly(c_poly, alpha, q, n, route);
    if (zeros->parsed()) {
      if (!figure && zeros_n->count() == 0) {
        throw param_error("zeros requires --n unless --figure is given");
      }
      return run_zeros(c_zeros, alpha, q, n, interlace_with, figure);
    }
    if (verify->parsed()) {
      return run_verify(c_verify, grid_alphas, grid_qs, n_max, zeros_n_max,
                        no_zeros, fault_index, fault_delta);
    }
    if (sweep->parsed()) {
      return run_sweep(c_sweep, grid_alphas, grid_qs, n_max, with_zeros);
    }
  } catch (const certification_error& e) {
    std::cerr << "certification error: " << e.what() << "\n";
    return 3;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
