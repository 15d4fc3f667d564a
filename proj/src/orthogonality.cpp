#include "swop/orthogonality.hpp"

#include <utility>

namespace swop {

MomentTable::MomentTable(Scalar alpha, unsigned max_power)
    : alpha_(std::move(alpha)) {
  if (!(alpha_ > alpha_.of_int(-1))) {
    throw param_error("alpha must exceed -1, got " + alpha_.str());
  }
  rel_.reserve(max_power / 2 + 1);
  Scalar cur = alpha_.of_int(1);
  rel_.push_back(cur);
  for (unsigned s = 1; 2 * s <= max_power; ++s) {
    Scalar num = alpha_.of_int(2 * long(s) - 1);
    Scalar den = alpha_.of_int(2 * long(s) + 1) + alpha_ + alpha_;
    cur = cur * num / den;
    rel_.push_back(cur);
  }
}

const Scalar& MomentTable::relative(unsigned s) const {
  if (s >= rel_.size()) {
    throw param_error("moment table holds powers up to " +
                      std::to_string(max_power()) + ", asked for " +
                      std::to_string(2 * s));
  }
  return rel_[s];
}

MomentTable base_moments(const Scalar& alpha, unsigned max_power) {
  return MomentTable(alpha, max_power);
}

InnerProduct::InnerProduct(FamilyParams fp, unsigned max_degree)
    : fp_(std::move(fp)), table_(fp_.alpha, 2 * fp_.q + 2 + max_degree) {}

Scalar InnerProduct::moment(unsigned k) const {
  // x^(2q+1+k) picks up the base moment when its power is even (k odd);
  // the -x^(2q+2+k) half survives when k is even.
  if (k % 2 == 1) return table_.relative((2 * fp_.q + 1 + k) / 2);
  return -table_.relative((2 * fp_.q + 2 + k) / 2);
}

Scalar InnerProduct::of(const Poly& p, const Poly& r) const {
  Scalar acc = fp_.alpha.of_int(0);
  if (p.is_zero() || r.is_zero()) return acc;
  Poly prod = p * r;
  const auto& cs = prod.coeffs();
  for (size_t k = 0; k < cs.size(); ++k) {
    acc += cs[k] * moment(unsigned(k));
  }
  return acc;
}

Scalar signed_moment(const FamilyParams& fp, unsigned k) {
  return InnerProduct(fp, k).moment(k);
}

Scalar signed_inner(const FamilyParams& fp, const Poly& p, const Poly& r) {
  int dp = p.degree();
  int dr = r.degree();
  unsigned max_degree = unsigned((dp < 0 ? 0 : dp) + (dr < 0 ? 0 : dr));
  return InnerProduct(fp, max_degree).of(p, r);
}

OrthogonalityReport verify_orthogonality(const FamilyParams& fp, const Poly& p,
                                         unsigned n) {
  if (p.degree() != int(n)) {
    throw param_error("polynomial degree " + std::to_string(p.degree()) +
                      " does not match the stated degree " + std::to_string(n));
  }
  InnerProduct ip(fp, 2 * n);
  Scalar one = fp.alpha.of_int(1);

  OrthogonalityReport rep{n, {}, fp.alpha.of_int(0), true};
  // The roundoff scale of <x^m, p> is the sum of |coeff| * |moment| before
  // cancellation, not the (possibly tiny) cancelled value.
  Scalar scale = fp.alpha.of_int(0);
  for (unsigned m = 0; m <= n; ++m) {
    Scalar v = ip.of(Poly::monomial(m, one), p);
    Scalar abs_sum = fp.alpha.of_int(0);
    for (unsigned k = 0; k <= n; ++k) {
      abs_sum += p.coeff(k).abs() * ip.moment(m + k).abs();
    }
    if (abs_sum > scale) scale = abs_sum;
    rep.inner_by_power.push_back(std::move(v));
  }
  if (!fp.alpha.is_exact()) {
    // Orthogonalization loses a few bits per degree; keep the allowance
    // degree-aware but never looser than half the working precision.
    long prec = fp.alpha.precision_bits();
    long e = prec - 8 - 3 * long(n);
    if (e < prec / 2) e = prec / 2;
    rep.tolerance = scale * fp.alpha.of_pow2(-e);
  }
  for (unsigned m = 0; m < n; ++m) {
    if (rep.inner_by_power[m].abs() > rep.tolerance) rep.pass = false;
  }
  if (!(rep.inner_by_power[n].abs() > rep.tolerance)) rep.pass = false;
  return rep;
}

OracleBasis gram_schmidt_basis(const FamilyParams& fp, unsigned n) {
  InnerProduct ip(fp, 2 * n + 1);  // the recovered beta needs <x p_n, p_n>
  Scalar one = fp.alpha.of_int(1);
  OracleBasis out;
  for (unsigned k = 0; k <= n; ++k) {
    Poly pk = Poly::monomial(k, one);
    Poly xk = pk;
    for (unsigned j = 0; j < k; ++j) {
      Scalar lambda = ip.of(xk, out.polys[j]) / out.norms[j];
      pk = pk - out.polys[j].scaled(lambda);
    }
    Scalar norm = ip.of(pk, pk);
    if (norm.is_zero()) {
      throw quasi_definite_error(
          "moment functional is not quasi-definite: <p_" + std::to_string(k) +
              ", p_" + std::to_string(k) + "> = 0",
          int(k));
    }
    out.polys.push_back(std::move(pk));
    out.norms.push_back(std::move(norm));
  }
  return out;
}

std::vector<Poly> gram_schmidt_oracle(const FamilyParams& fp, unsigned n) {
  return gram_schmidt_basis(fp, n).polys;
}

std::vector<RecurrencePair> recurrence_from_oracle(const FamilyParams& fp,
                                                   unsigned count) {
  std::vector<RecurrencePair> rows;
  if (count == 0) return rows;
  OracleBasis basis = gram_schmidt_basis(fp, count - 1);
  InnerProduct ip(fp, 2 * count - 1);
  Scalar one = fp.alpha.of_int(1);
  Poly x = Poly::monomial(1, one);
  for (unsigned k = 0; k < count; ++k) {
    RecurrencePair row{k, fp.alpha.of_int(0), fp.alpha.of_int(0), k > 0};
    row.beta = ip.of(x * basis.polys[k], basis.polys[k]) / basis.norms[k];
    if (k > 0) row.gamma = basis.norms[k] / basis.norms[k - 1];
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Scalar> expand_in_basis(const Poly& p,
                                    const std::vector<Poly>& basis) {
  if (basis.empty()) throw param_error("empty expansion basis");
  for (size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].degree() != int(i) || basis[i].leading() != basis[i].leading().of_int(1)) {
      throw param_error("expansion basis must be monic of degree equal to its index");
    }
  }
  if (p.degree() >= int(basis.size())) {
    throw param_error("polynomial degree exceeds the expansion basis");
  }
  Scalar zero = basis[0].leading().of_int(0);
  std::vector<Scalar> lambda(basis.size(), zero);
  Poly rest = p;
  while (!rest.is_zero()) {
    int d = rest.degree();
    lambda[size_t(d)] = rest.leading();
    rest = rest - basis[size_t(d)].scaled(rest.leading());
    if (rest.degree() >= d) {
      throw certification_error("expansion failed to reduce the degree");
    }
  }
  return lambda;
}

}  // namespace swop
