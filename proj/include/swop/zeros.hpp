#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swop/families.hpp"
#include "swop/poly.hpp"
#include "swop/scalar.hpp"

namespace swop {

// One real root: a bracketing interval [lo, hi] plus a point value inside
// it. Structural roots (the endpoint root -1, the parity root 0) are found
// by evaluation and deflation, not isolation, and carry point enclosures.
struct RootEnclosure {
  Scalar lo;
  Scalar hi;
  Scalar refined;
  bool at_minus_one = false;
  bool at_zero = false;

  bool structural() const { return at_minus_one || at_zero; }
  bool is_point() const { return lo == hi; }
};

// All real roots of one polynomial, ascending. In exact mode every
// enclosure is certified: endpoints are rational, the polynomial changes
// sign across each non-point enclosure (point enclosures hold the root
// exactly), enclosures are pairwise disjoint, and the count equals the
// degree.
struct RootSet {
  std::string source;
  unsigned degree = 0;
  Scalar tolerance;
  std::vector<RootEnclosure> roots;
};

// Number of distinct real roots of p in (a, b], by Sturm sign-variation
// difference in exact rational arithmetic (mode_error in float mode).
// Requires a <= b and p squarefree; a nonconstant gcd(p, p') is reported
// as certification_error so the caller can deflate deliberately.
int sturm_count(const Poly& p, const Scalar& a, const Scalar& b);

// Root isolation for the symmetric shapes this family produces: even
// polynomials, odd-parity polynomials (x times even), and (1 + x) times
// even. Exact mode runs the certified Sturm pipeline on the u = x^2
// substitution with rational square-root bounds for the back-mapping;
// float mode brackets sign changes, bisects, and polishes with a few
// Newton steps accepted only inside the bracket.
RootSet find_real_roots(const Poly& p, const ModeConfig& cfg,
                        std::string source = "");

// Roots of P_n for the given family parameters, with the structural root
// at -1 certified by exact evaluation for odd n. The config defaults to
// the mode of fp.alpha with the standard refinement tolerance.
RootSet find_zeros(const FamilyParams& fp, unsigned n);
RootSet find_zeros(const FamilyParams& fp, unsigned n, const ModeConfig& cfg);

// Whether the roots of the degree-(d+1) set and the degree-d set alternate
// strictly. When they do not, witness is a consecutive pair of rs_hi roots
// (refined values) with no rs_lo root strictly between them, when such a
// pair exists. All comparisons go through enclosures; overlapping
// enclosures raise certification_error instead of guessing.
struct InterlacingReport {
  bool interlaces = false;
  std::optional<std::pair<Scalar, Scalar>> witness;
};
InterlacingReport check_interlacing(const RootSet& rs_lo, const RootSet& rs_hi);

// Largest zeros of P_{2n-2k} at parameters (alpha + k, q + k) for
// k = 0..n-1, verified strictly decreasing in k (certification_error on
// violation or on enclosures too coarse to order).
std::vector<RootEnclosure> largest_zero_chain(const Scalar& alpha, unsigned q,
                                              unsigned n);
std::vector<RootEnclosure> largest_zero_chain(const Scalar& alpha, unsigned q,
                                              unsigned n,
                                              const ModeConfig& cfg);

struct CheckOutcome {
  bool pass = false;
  std::string detail;
};

// Whether the zero multiset of P_{2n+1} at (alpha + k, q + l) equals {-1}
// plus the zeros of P_{2n} at (alpha + k + 1, q + l). Exact mode settles
// it through the factorization identity; float mode matches refined roots
// within the refinement tolerance.
CheckOutcome odd_even_zero_map(const Scalar& alpha, unsigned q, unsigned n,
                               unsigned k, unsigned l);
CheckOutcome odd_even_zero_map(const Scalar& alpha, unsigned q, unsigned n,
                               unsigned k, unsigned l, const ModeConfig& cfg);

// Whether each open gap between consecutive positive zeros of P_n (n even)
// holds exactly one zero of P_{n-2} at (alpha + 1, q + 1), the Rolle-type
// fact behind the largest-zero ordering. Exact mode counts by Sturm over
// the gap between enclosures and refuses to answer (certification_error)
// if an inner root could hide inside an enclosure.
CheckOutcome critical_point_check(const FamilyParams& fp, unsigned n);
CheckOutcome critical_point_check(const FamilyParams& fp, unsigned n,
                                  const ModeConfig& cfg);

// exact_config() or floating_config(like.precision_bits()), matching the
// mode of `like`.
ModeConfig default_config_like(const Scalar& like);

}  // namespace swop
