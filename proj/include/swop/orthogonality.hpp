#pragma once

#include <vector>

#include "swop/families.hpp"
#include "swop/poly.hpp"
#include "swop/scalar.hpp"

namespace swop {

// Relative even moments of the base weight (1-x^2)^alpha on [-1, 1]:
// entry s is M_{2s}/M_0 where M_{2s} = integral of x^(2s) (1-x^2)^alpha.
// Built by the ratio recurrence M_{2s}/M_{2s-2} = (2s-1)/(2s+2alpha+1);
// every entry is positive. Odd-power integrals vanish by symmetry and are
// not stored.
class MomentTable {
 public:
  // Stores entries for all even powers 2s <= max_power.
  MomentTable(Scalar alpha, unsigned max_power);

  const Scalar& alpha() const { return alpha_; }
  unsigned max_power() const { return 2 * (unsigned(rel_.size()) - 1); }
  // M_{2s}/M_0
  const Scalar& relative(unsigned s) const;

 private:
  Scalar alpha_;
  std::vector<Scalar> rel_;
};

MomentTable base_moments(const Scalar& alpha, unsigned max_power);

// k-th moment of the signed weight x^(2q+1) (1-x^2)^alpha (1-x), relative
// to M_0 of the base weight: expanding (1-x) splits the integral into two
// base-weight moments, of which exactly one survives the parity argument.
Scalar signed_moment(const FamilyParams& fp, unsigned k);

// Inner products under the signed weight, all relative to M_0 = 1. One
// instance precomputes the moment table for product degrees up to
// max_degree and is immutable afterwards.
class InnerProduct {
 public:
  InnerProduct(FamilyParams fp, unsigned max_degree);

  const FamilyParams& params() const { return fp_; }
  // Signed moment m_k (k <= max_degree).
  Scalar moment(unsigned k) const;
  // <p, r> = integral of w p r; deg p + deg r <= max_degree.
  Scalar of(const Poly& p, const Poly& r) const;

 private:
  FamilyParams fp_;
  MomentTable table_;
};

// One-shot convenience around InnerProduct.
Scalar signed_inner(const FamilyParams& fp, const Poly& p, const Poly& r);

// Moments <x^m, p> for 0 <= m <= deg p, and the verdict of the
// orthogonality characterization: all strictly-lower powers integrate to
// zero and the diagonal does not. Exact mode compares against zero
// exactly; float mode against 2^-(precision-8) times the largest entry.
struct OrthogonalityReport {
  unsigned degree;
  std::vector<Scalar> inner_by_power;
  Scalar tolerance;
  bool pass;
};
OrthogonalityReport verify_orthogonality(const FamilyParams& fp, const Poly& p,
                                         unsigned n);

// Monic orthogonal basis p_0..p_n by sequential projection of monomials,
// together with the norms <p_k, p_k>. Independent of every closed-form
// route, so it serves as the cross-validation oracle. Throws
// quasi_definite_error (with the failing degree) if some norm vanishes.
struct OracleBasis {
  std::vector<Poly> polys;
  std::vector<Scalar> norms;
};
OracleBasis gram_schmidt_basis(const FamilyParams& fp, unsigned n);
std::vector<Poly> gram_schmidt_oracle(const FamilyParams& fp, unsigned n);

// Recurrence coefficients recovered from the oracle basis:
// beta_k = <x p_k, p_k>/<p_k, p_k>, gamma_k = <p_k, p_k>/<p_{k-1}, p_{k-1}>.
// Rows 0..count-1, directly comparable with recurrence_table.
std::vector<RecurrencePair> recurrence_from_oracle(const FamilyParams& fp,
                                                   unsigned count);

// Coefficients lambda_0..lambda_N of p over a monic basis with deg b_i = i
// (so the expansion is unique); requires deg p <= N.
std::vector<Scalar> expand_in_basis(const Poly& p,
                                    const std::vector<Poly>& basis);

}  // namespace swop
