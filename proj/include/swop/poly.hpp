#pragma once

#include <utility>
#include <vector>

#include "swop/scalar.hpp"

namespace swop {

// Dense univariate polynomial, coefficients indexed by ascending power,
// all in one scalar mode. The zero polynomial is the empty coefficient
// list; nonzero polynomials keep a nonzero leading coefficient.
// Immutable after construction; all operations return new values.
class Poly {
 public:
  Poly() = default;  // zero polynomial

  // Trims trailing zeros.
  explicit Poly(std::vector<Scalar> coeffs);

  static Poly constant(const Scalar& c);
  // coeff * x^k
  static Poly monomial(unsigned k, const Scalar& coeff);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& leading() const;
  // Coefficient of x^k; zero (in the polynomial's mode) beyond the degree.
  Scalar coeff(size_t k) const;
  ScalarMode mode() const;  // nonzero polynomials only

  Scalar eval(const Scalar& x) const;
  Poly derivative() const;
  Poly scaled(const Scalar& c) const;

  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator*(const Poly& p, const Poly& q);
  Poly operator-() const;
  friend bool operator==(const Poly& p, const Poly& q);
  friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

  // For an even polynomial p, the Q with Q(x^2) = p(x); deg Q = deg p / 2.
  // Exact mode requires the odd coefficients to vanish exactly. Float mode
  // zeroes odd coefficients of magnitude <= 2^-(precision/2) * max|coeff|
  // and rejects anything larger.
  Poly even_part_in_u() const;
  bool is_even_poly() const;

  // p / (x - r) by synthetic division. The remainder must vanish: exactly
  // in exact mode, below the float roundoff threshold otherwise.
  Poly deflate_root(const Scalar& r) const;

  // Euclidean division: num = quo * den + rem with deg rem < deg den.
  static std::pair<Poly, Poly> divrem(const Poly& num, const Poly& den);

  // max |coeff|; zero scalar for the zero polynomial.
  Scalar max_abs_coeff() const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

// Roundoff threshold for float-mode parity/deflation decisions:
// 2^-(precision/2) * max|coeff|. Float-mode polynomials only.
Scalar float_noise_threshold(const Poly& p);

}  // namespace swop
