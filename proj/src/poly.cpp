#include "swop/poly.hpp"

namespace swop {

namespace {

void check_same_mode(const Poly& p, const Poly& q, const char* who) {
  if (p.is_zero() || q.is_zero()) return;
  if (p.mode() != q.mode()) throw mode_error(std::string(who) + ": mixed scalar modes");
}

}  // namespace

Scalar float_noise_threshold(const Poly& p) {
  Scalar m = p.max_abs_coeff();
  return m.of_pow2(-(m.precision_bits() / 2)) * m;
}

Poly::Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  for (size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k].mode() != coeffs_[0].mode())
      throw mode_error("Poly: mixed scalar modes in coefficient list");
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const Scalar& c) { return Poly(std::vector<Scalar>{c}); }

Poly Poly::monomial(unsigned k, const Scalar& coeff) {
  std::vector<Scalar> cs(k + 1, coeff.of_int(0));
  cs[k] = coeff;
  return Poly(std::move(cs));
}

const Scalar& Poly::leading() const {
  if (is_zero()) throw param_error("leading(): zero polynomial");
  return coeffs_.back();
}

Scalar Poly::coeff(size_t k) const {
  if (k < coeffs_.size()) return coeffs_[k];
  return is_zero() ? Scalar() : coeffs_[0].of_int(0);
}

ScalarMode Poly::mode() const {
  if (is_zero()) throw param_error("mode(): zero polynomial has no mode");
  return coeffs_[0].mode();
}

Scalar Poly::eval(const Scalar& x) const {
  if (is_zero()) return x.of_int(0);
  if (x.mode() != mode()) throw mode_error("eval: mixed scalar modes");
  Scalar acc = coeffs_.back();
  for (size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Scalar> d;
  d.reserve(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k)
    d.push_back(coeffs_[k] * coeffs_[k].of_int(static_cast<long>(k)));
  return Poly(std::move(d));
}

Poly Poly::scaled(const Scalar& c) const {
  if (is_zero() || c.is_zero()) return Poly();
  std::vector<Scalar> r;
  r.reserve(coeffs_.size());
  for (const Scalar& a : coeffs_) r.push_back(a * c);
  return Poly(std::move(r));
}

Poly operator+(const Poly& p, const Poly& q) {
  check_same_mode(p, q, "operator+");
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  std::vector<Scalar> r;
  size_t n = std::max(p.coeffs_.size(), q.coeffs_.size());
  r.reserve(n);
  for (size_t k = 0; k < n; ++k) r.push_back(p.coeff(k) + q.coeff(k));
  return Poly(std::move(r));
}

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly Poly::operator-() const {
  std::vector<Scalar> r;
  r.reserve(coeffs_.size());
  for (const Scalar& a : coeffs_) r.push_back(-a);
  return Poly(std::move(r));
}

Poly operator*(const Poly& p, const Poly& q) {
  check_same_mode(p, q, "operator*");
  if (p.is_zero() || q.is_zero()) return Poly();
  const Scalar zero = p.coeffs_[0].of_int(0);
  std::vector<Scalar> r(p.coeffs_.size() + q.coeffs_.size() - 1, zero);
  for (size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < q.coeffs_.size(); ++j)
      r[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return Poly(std::move(r));
}

bool operator==(const Poly& p, const Poly& q) {
  if (p.coeffs_.size() != q.coeffs_.size()) return false;
  for (size_t k = 0; k < p.coeffs_.size(); ++k)
    if (p.coeffs_[k] != q.coeffs_[k]) return false;
  return true;
}

bool Poly::is_even_poly() const {
  if (is_zero()) return true;
  if (mode() == ScalarMode::exact) {
    for (size_t k = 1; k < coeffs_.size(); k += 2)
      if (!coeffs_[k].is_zero()) return false;
    return true;
  }
  Scalar thr = float_noise_threshold(*this);
  for (size_t k = 1; k < coeffs_.size(); k += 2)
    if (coeffs_[k].abs() > thr) return false;
  return true;
}

Poly Poly::even_part_in_u() const {
  if (is_zero()) return Poly();
  if (!is_even_poly())
    throw param_error("even_part_in_u: polynomial has a genuine odd part");
  std::vector<Scalar> q;
  q.reserve(coeffs_.size() / 2 + 1);
  for (size_t k = 0; k < coeffs_.size(); k += 2) q.push_back(coeffs_[k]);
  return Poly(std::move(q));
}

Poly Poly::deflate_root(const Scalar& r) const {
  if (is_zero()) throw param_error("deflate_root: zero polynomial");
  if (r.mode() != mode()) throw mode_error("deflate_root: mixed scalar modes");
  if (degree() == 0) throw param_error("deflate_root: constant polynomial");
  std::vector<Scalar> q(coeffs_.size() - 1, r.of_int(0));
  Scalar carry = coeffs_.back();
  for (size_t k = coeffs_.size() - 1; k-- > 0;) {
    q[k] = carry;
    carry = coeffs_[k] + carry * r;
  }
  bool rem_ok = carry.is_zero();
  if (!rem_ok && mode() == ScalarMode::floating)
    rem_ok = carry.abs() <= float_noise_threshold(*this);
  if (!rem_ok)
    throw param_error("deflate_root: nonzero remainder, " + r.str() +
                      " is not a root");
  return Poly(std::move(q));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw param_error("divrem: division by zero polynomial");
  check_same_mode(num, den, "divrem");
  if (num.is_zero() || num.degree() < den.degree()) return {Poly(), num};

  std::vector<Scalar> rem = num.coeffs_;
  const Scalar zero = den.coeffs_[0].of_int(0);
  std::vector<Scalar> quo(num.degree() - den.degree() + 1, zero);
  const Scalar& lead = den.leading();
  for (int k = num.degree() - den.degree(); k >= 0; --k) {
    Scalar c = rem[k + den.degree()] / lead;
    quo[k] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= den.degree(); ++j)
      rem[k + j] -= c * den.coeffs_[j];
  }
  rem.resize(den.degree() >= 0 ? den.degree() : 0, zero);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Scalar Poly::max_abs_coeff() const {
  if (is_zero()) return Scalar();
  Scalar m = coeffs_[0].abs();
  for (size_t k = 1; k < coeffs_.size(); ++k) {
    Scalar a = coeffs_[k].abs();
    if (a > m) m = a;
  }
  return m;
}

}  // namespace swop
