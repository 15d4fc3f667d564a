#pragma once

#include "swop/scalar.hpp"

namespace swop {

// Parameter triple (a, b; c) of a terminating Gauss hypergeometric series.
// Valid instances satisfy, checked at construction:
//  - at least one of a, b is a nonpositive integer (the series terminates);
//  - (c)_k != 0 for every k up to the termination index.
// When both upper parameters are nonpositive integers the series truncates
// at the smaller |value|.
class HypParams {
 public:
  HypParams(Scalar a, Scalar b, Scalar c);

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& c() const { return c_; }
  unsigned termination_index() const { return m_; }

 private:
  Scalar a_, b_, c_;
  unsigned m_;
};

// Sum_{k=0}^{m} (a)_k (b)_k / (k! (c)_k) z^k in the active scalar mode.
Scalar eval_2f1_terminating(const HypParams& p, const Scalar& z);

// Left-hand side of one of the five contiguous relations, evaluated at
// (p, z). Identically zero whenever every shifted instance stays
// terminating and pole-free; those conditions are enforced (pole_error).
//
//   1:  (c-a-b) F + a (1-z) F(a+1) - (c-b) F(b-1)
//   2:  (c-a-1) F + a F(a+1) - (c-1) F(c-1)
//   3:  c (1-z) F - c F(a-1) + (c-b) z F(c+1)
//   4:  (a-b) F - a F(a+1) + b F(b+1)
//   5:  (a-b)(1-z) F + (c-a) F(a-1) - (c-b) F(b-1)
Scalar contiguous_residual(int relation_id, const HypParams& p, const Scalar& z);

// The residual together with the largest absolute term entering it; the
// scale is what float-mode accuracy statements are measured against.
struct ContigEval {
  Scalar residual;
  Scalar scale;
};
ContigEval contiguous_residual_scaled(int relation_id, const HypParams& p,
                                      const Scalar& z);

}  // namespace swop
