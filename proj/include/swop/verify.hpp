#pragma once

#include <string>
#include <vector>

#include "swop/families.hpp"
#include "swop/scalar.hpp"

namespace swop {

// One line of the verification suite: a named check at one grid cell.
struct CheckEntry {
  std::string identity;
  std::string alpha;
  unsigned q = 0;
  unsigned n = 0;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  ScalarMode mode = ScalarMode::exact;
  int precision_bits = 0;  // floating mode only
  std::vector<CheckEntry> entries;

  unsigned failures() const;
  bool all_pass() const { return failures() == 0; }
};

// Grid and caps for one suite run, plus the optional negative control: a
// deliberate perturbation of one recurrence gamma that the orthogonality
// check is expected to catch.
struct VerifySpec {
  std::vector<Scalar> alphas;
  std::vector<unsigned> qs;
  // Cap on polynomial degree for the algebraic and orthogonality checks.
  unsigned n_max = 8;
  // Cap on polynomial degree for the root-isolation checks (costlier).
  unsigned zeros_n_max = 6;
  bool with_zero_checks = true;
  // Index of the gamma to perturb; <= 0 disables the control.
  int fault_gamma_index = 0;
  Scalar fault_delta;
};

// The documented default grid: alpha in {-1/2, 0, 1/2, 1, 3/2, 5/2},
// q in {0, 1, 2, 3}, in the mode of cfg.
VerifySpec default_grid(const ModeConfig& cfg);

SuiteReport run_verify_suite(const VerifySpec& spec, const ModeConfig& cfg);

// Stable serializations of a suite report; identical input bytes for
// identical runs in exact mode.
std::string render_json(const SuiteReport& rep);
std::string render_csv(const SuiteReport& rep);
std::string render_text(const SuiteReport& rep);

}  // namespace swop
