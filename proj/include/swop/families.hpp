#pragma once

#include <string>
#include <vector>

#include "swop/poly.hpp"
#include "swop/scalar.hpp"

namespace swop {

// Parameters (alpha, q) of the signed weight x^(2q+1) (1-x^2)^alpha (1-x)
// on [-1, 1]. alpha > -1; q is a nonnegative integer.
struct FamilyParams {
  Scalar alpha;
  unsigned q;

  FamilyParams(Scalar alpha_in, unsigned q_in);
  // Same family with alpha + d_alpha and q + d_q (several identities pair a
  // polynomial with a parameter-shifted relative).
  FamilyParams shifted(long d_alpha, long d_q) const;
};

// Parameters (alpha, mu) of the generalized Gegenbauer weight
// |x|^mu (1-x^2)^alpha on [-1, 1]; both must exceed -1 and share a mode.
struct GGParams {
  Scalar alpha;
  Scalar mu;

  GGParams(Scalar alpha_in, Scalar mu_in);
};

// One row of the three-term recurrence table. gamma is meaningful only for
// index >= 1 (the recurrence never consumes gamma_0); has_gamma marks that.
struct RecurrencePair {
  unsigned index;
  Scalar beta;
  Scalar gamma;
  bool has_gamma;
};

// beta_n = (-1)^(n+1).
Scalar ttrr_beta(const FamilyParams& fp, unsigned n);

// gamma_n from the closed forms (one for even, one for odd n); strictly
// negative for every n >= 1 when alpha > -1, q >= 0. Rejects n = 0.
Scalar ttrr_gamma(const FamilyParams& fp, unsigned n);

// Rows 0..count-1 of the recurrence table.
std::vector<RecurrencePair> recurrence_table(const FamilyParams& fp,
                                             unsigned count);

// P_n via the recurrence P_{k+2} = (x - beta_{k+1}) P_{k+1} - gamma_{k+1} P_k
// from P_0 = 1, P_1 = x + 1. Monic of exact degree n.
Poly p_poly_ttrr(const FamilyParams& fp, unsigned n);

// GG_n by expanding its terminating hypergeometric series: the argument
// 1/x^2 turns the series against the x^n prefactor into descending even
// powers. Monic of degree n with the parity of n. Throws pole_error if a
// lower-parameter Pochhammer factor vanishes inside the truncation.
Poly gg_poly(const GGParams& gp, unsigned n);

// P_n (n even) from its own terminating-series representation, expanded
// coefficient-by-coefficient through Pochhammer products; an arithmetic
// route independent of both the recurrence and gg_poly.
Poly p_poly_hyper(const FamilyParams& fp, unsigned n);

// The ascending-series normal form of P_n (n even): a closed-form prefactor
// times a series in x^2 with ascending powers. `value` is their product,
// checked monic on construction (certification_error otherwise).
struct AscendingForm {
  Scalar prefactor;
  Poly series;
  Poly value;
};
AscendingForm p_poly_hyper_ascending(const FamilyParams& fp, unsigned n);

// Structural identities linking the two families and their derivatives.
// Each is stated at inner index n; the degree-2n (or 2n+1) polynomials the
// residual compares are noted per case.
enum class IdentityId {
  // P_{2n}^{a,q} == GG_{2n}^{a,2q+2}, n >= 0
  even_p_equals_gg,
  // P_{2n+1}^{a,q} == (1+x) GG_{2n}^{a+1,2q+2}, n >= 0
  odd_p_factors_gg,
  // P_{2n+1}^{a,q} == (1+x) P_{2n}^{a+1,q}, n >= 0
  odd_p_factors_alpha_shift,
  // GG_{2n+1}^{a,mu} == x GG_{2n}^{a,mu+2}, n >= 0
  gg_odd_from_even,
  // (P_{2n}^{a,q})' == 2n GG_{2n-1}^{a+1,2q+2}, n >= 1
  derivative_even_gg,
  // (P_{2n}^{a,q})' == 2n x P_{2n-2}^{a+1,q+1}, n >= 1
  derivative_even_shifted,
  // (P_{2n+1}^{a,q})' == P_{2n}^{a+1,q} + 2n x P_{2n-1}^{a+1,q+1}, n >= 0
  // (the second term drops at n = 0)
  derivative_odd_sum,
};

// Stable slug for reports and the CLI ("even_p_equals_gg", ...).
std::string identity_name(IdentityId id);
// Inverse of identity_name; throws param_error on unknown text.
IdentityId parse_identity(const std::string& name);
// All identities, in declaration order.
const std::vector<IdentityId>& all_identities();

// LHS - RHS of the identity at inner index n; the zero polynomial iff the
// identity holds. The GGParams overload serves gg_odd_from_even (arbitrary
// mu); the FamilyParams overload serves everything else.
Poly check_identity(IdentityId id, const FamilyParams& fp, unsigned n);
Poly check_identity(IdentityId id, const GGParams& gp, unsigned n);

}  // namespace swop
