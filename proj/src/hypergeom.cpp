#include "swop/hypergeom.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace swop {

namespace {

// Termination index contributed by one upper parameter, or -1 if that
// parameter does not terminate the series.
long termination_from(const Scalar& upper) {
  if (!upper.is_nonpositive_integer()) return -1;
  return -upper.to_long();
}

}  // namespace

HypParams::HypParams(Scalar a, Scalar b, Scalar c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  long ma = termination_from(a_);
  long mb = termination_from(b_);
  if (ma < 0 && mb < 0) {
    throw param_error("2F1(" + a_.str() + ", " + b_.str() + "; " + c_.str() +
                      "): neither upper parameter is a nonpositive integer");
  }
  long m = (ma < 0) ? mb : (mb < 0) ? ma : std::min(ma, mb);
  m_ = static_cast<unsigned>(m);
  // (c)_k enters every denominator up to k = m; a vanishing factor is a pole.
  Scalar shifted = c_;
  for (unsigned j = 0; j < m_; ++j) {
    if (shifted.is_zero()) {
      throw pole_error("2F1(" + a_.str() + ", " + b_.str() + "; " + c_.str() +
                       "): Pochhammer factor c + " + std::to_string(j) +
                       " vanishes inside the terminating sum");
    }
    shifted += c_.of_int(1);
  }
}

Scalar eval_2f1_terminating(const HypParams& p, const Scalar& z) {
  Scalar term = p.a().of_int(1);
  Scalar sum = term;
  for (unsigned k = 0; k < p.termination_index(); ++k) {
    Scalar ka = p.a() + p.a().of_int(long(k));
    Scalar kb = p.b() + p.b().of_int(long(k));
    Scalar kc = p.c() + p.c().of_int(long(k));
    term = term * ka * kb * z / (kc * p.a().of_int(long(k) + 1));
    sum += term;
  }
  return sum;
}

namespace {

// One additive term of a contiguous relation: coefficient times the series
// at shifted parameters. Shifted instances are revalidated on construction,
// so leaving the terminating regime or stepping onto a pole throws before
// anything is summed.
Scalar relation_term(const Scalar& coeff, Scalar a, Scalar b, Scalar c,
                     const Scalar& z) {
  HypParams shifted(std::move(a), std::move(b), std::move(c));
  return coeff * eval_2f1_terminating(shifted, z);
}

}  // namespace

ContigEval contiguous_residual_scaled(int relation_id, const HypParams& p,
                                      const Scalar& z) {
  const Scalar& a = p.a();
  const Scalar& b = p.b();
  const Scalar& c = p.c();
  Scalar one = a.of_int(1);
  Scalar omz = one - z;

  std::vector<Scalar> terms;
  switch (relation_id) {
    case 1:
      terms.push_back(relation_term(c - a - b, a, b, c, z));
      terms.push_back(relation_term(a * omz, a + one, b, c, z));
      terms.push_back(-relation_term(c - b, a, b - one, c, z));
      break;
    case 2:
      terms.push_back(relation_term(c - a - one, a, b, c, z));
      terms.push_back(relation_term(a, a + one, b, c, z));
      terms.push_back(-relation_term(c - one, a, b, c - one, z));
      break;
    case 3:
      terms.push_back(relation_term(c * omz, a, b, c, z));
      terms.push_back(-relation_term(c, a - one, b, c, z));
      terms.push_back(relation_term((c - b) * z, a, b, c + one, z));
      break;
    case 4:
      terms.push_back(relation_term(a - b, a, b, c, z));
      terms.push_back(-relation_term(a, a + one, b, c, z));
      terms.push_back(relation_term(b, a, b + one, c, z));
      break;
    case 5:
      terms.push_back(relation_term((a - b) * omz, a, b, c, z));
      terms.push_back(relation_term(c - a, a - one, b, c, z));
      terms.push_back(-relation_term(c - b, a, b - one, c, z));
      break;
    default:
      throw param_error("contiguous relation id must be 1..5, got " +
                        std::to_string(relation_id));
  }

  ContigEval out{a.of_int(0), a.of_int(0)};
  for (const Scalar& t : terms) {
    out.residual += t;
    Scalar mag = t.abs();
    if (mag > out.scale) out.scale = mag;
  }
  return out;
}

Scalar contiguous_residual(int relation_id, const HypParams& p,
                           const Scalar& z) {
  return contiguous_residual_scaled(relation_id, p, z).residual;
}

}  // namespace swop
