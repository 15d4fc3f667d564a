#include "swop/families.hpp"

#include <utility>

#include "swop/numerics.hpp"

namespace swop {

namespace {

void require_above_minus_one(const Scalar& v, const char* what) {
  if (!(v > v.of_int(-1))) {
    throw param_error(std::string(what) + " must exceed -1, got " + v.str());
  }
}

}  // namespace

FamilyParams::FamilyParams(Scalar alpha_in, unsigned q_in)
    : alpha(std::move(alpha_in)), q(q_in) {
  require_above_minus_one(alpha, "alpha");
}

FamilyParams FamilyParams::shifted(long d_alpha, long d_q) const {
  long shifted_q = long(q) + d_q;
  if (shifted_q < 0) {
    throw param_error("parameter shift drives q below 0");
  }
  return FamilyParams(alpha + alpha.of_int(d_alpha), unsigned(shifted_q));
}

GGParams::GGParams(Scalar alpha_in, Scalar mu_in)
    : alpha(std::move(alpha_in)), mu(std::move(mu_in)) {
  if (alpha.mode() != mu.mode()) {
    throw mode_error("alpha and mu must share a scalar mode");
  }
  require_above_minus_one(alpha, "alpha");
  require_above_minus_one(mu, "mu");
}

Scalar ttrr_beta(const FamilyParams& fp, unsigned n) {
  return fp.alpha.of_int(n % 2 == 0 ? -1 : 1);
}

Scalar ttrr_gamma(const FamilyParams& fp, unsigned n) {
  if (n == 0) {
    throw param_error("gamma_0 is undefined: the recurrence starts at gamma_1");
  }
  const Scalar& a = fp.alpha;
  Scalar two = a.of_int(2);
  Scalar twoq = a.of_int(2 * long(fp.q));
  if (n % 2 == 0) {
    Scalar m = a.of_int(long(n / 2));
    Scalar num = m * (two * m + twoq + a.of_int(1));
    Scalar den = (a.of_int(4) * m + two * a + twoq + a.of_int(1)) *
                 (a.of_int(4) * m + two * a + twoq + a.of_int(3));
    return -two * num / den;
  }
  Scalar m = a.of_int(long((n - 1) / 2));
  Scalar num = (m + a + a.of_int(1)) * (two * m + two * a + twoq + a.of_int(3));
  Scalar den = (a.of_int(4) * m + two * a + twoq + a.of_int(3)) *
               (a.of_int(4) * m + two * a + twoq + a.of_int(5));
  return -two * num / den;
}

std::vector<RecurrencePair> recurrence_table(const FamilyParams& fp,
                                             unsigned count) {
  std::vector<RecurrencePair> rows;
  rows.reserve(count);
  for (unsigned k = 0; k < count; ++k) {
    RecurrencePair row{k, ttrr_beta(fp, k), fp.alpha.of_int(0), k > 0};
    if (row.has_gamma) row.gamma = ttrr_gamma(fp, k);
    rows.push_back(std::move(row));
  }
  return rows;
}

Poly p_poly_ttrr(const FamilyParams& fp, unsigned n) {
  Scalar one = fp.alpha.of_int(1);
  Poly prev = Poly::constant(one);
  if (n == 0) return prev;
  Poly cur({one, one});  // x - beta_0 = x + 1
  Poly x = Poly::monomial(1, one);
  for (unsigned k = 2; k <= n; ++k) {
    Poly next = (x - Poly::constant(ttrr_beta(fp, k - 1))) * cur -
                prev.scaled(ttrr_gamma(fp, k - 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly gg_poly(const GGParams& gp, unsigned n) {
  Scalar one = gp.alpha.of_int(1);
  Scalar half = gp.alpha.of_ratio(1, 2);
  unsigned m = n / 2;
  Scalar half_mu = gp.mu * half;
  // Upper and lower series parameters; the odd case shifts both by -1.
  Scalar b = -gp.alpha.of_int(long(m)) - half_mu + half;
  Scalar c = -gp.alpha.of_int(2 * long(m)) - gp.alpha - half_mu + half;
  if (n % 2 == 1) {
    b -= one;
    c -= one;
  }

  std::vector<Scalar> coeffs(n + 1, gp.alpha.of_int(0));
  Scalar t = one;
  coeffs[n] = t;
  for (unsigned k = 1; k <= m; ++k) {
    Scalar lower = c + gp.alpha.of_int(long(k) - 1);
    if (lower.is_zero()) {
      throw pole_error("lower series parameter hits a pole at term " +
                       std::to_string(k) + " (degree " + std::to_string(n) +
                       ", alpha = " + gp.alpha.str() + ", mu = " + gp.mu.str() +
                       ")");
    }
    t = t * (gp.alpha.of_int(long(k) - 1 - long(m))) *
        (b + gp.alpha.of_int(long(k) - 1)) / (gp.alpha.of_int(long(k)) * lower);
    coeffs[n - 2 * k] = t;
  }
  return Poly(std::move(coeffs));
}

Poly p_poly_hyper(const FamilyParams& fp, unsigned n) {
  if (n % 2 != 0) {
    throw param_error("the terminating-series route covers even degrees only");
  }
  unsigned m = n / 2;
  const Scalar& a = fp.alpha;
  Scalar half = a.of_ratio(1, 2);
  Scalar upper_a = a.of_int(-long(m));
  Scalar upper_b = -a.of_int(long(m) + long(fp.q)) - half;
  Scalar lower = -a.of_int(2 * long(m) + long(fp.q)) - a - half;

  std::vector<Scalar> coeffs(n + 1, a.of_int(0));
  for (unsigned k = 0; k <= m; ++k) {
    Scalar den_poch = pochhammer(lower, k);
    if (den_poch.is_zero()) {
      throw pole_error("lower series parameter hits a pole at term " +
                       std::to_string(k) + " (degree " + std::to_string(n) +
                       ", alpha = " + a.str() + ", q = " + std::to_string(fp.q) +
                       ")");
    }
    Scalar t = pochhammer(upper_a, k) * pochhammer(upper_b, k) /
               (pochhammer(a.of_int(1), k) * den_poch);
    coeffs[n - 2 * k] = t;
  }
  return Poly(std::move(coeffs));
}

AscendingForm p_poly_hyper_ascending(const FamilyParams& fp, unsigned n) {
  if (n % 2 != 0) {
    throw param_error("the ascending normal form covers even degrees only");
  }
  unsigned m = n / 2;
  const Scalar& a = fp.alpha;
  Scalar three_half = a.of_ratio(3, 2);
  Scalar upper = a.of_int(long(m) + long(fp.q)) + a + three_half;
  Scalar lower = a.of_int(long(fp.q)) + three_half;

  AscendingForm out{pochhammer(lower, m) / pochhammer(upper, m), Poly(), Poly()};
  if (m % 2 == 1) out.prefactor = -out.prefactor;

  std::vector<Scalar> coeffs(n + 1, a.of_int(0));
  for (unsigned k = 0; k <= m; ++k) {
    coeffs[2 * k] = pochhammer(a.of_int(-long(m)), k) * pochhammer(upper, k) /
                    (pochhammer(a.of_int(1), k) * pochhammer(lower, k));
  }
  out.series = Poly(std::move(coeffs));
  out.value = out.series.scaled(out.prefactor);

  Scalar lead_err = (out.value.leading() - a.of_int(1)).abs();
  Scalar tol = a.is_exact() ? a.of_int(0)
                            : out.value.max_abs_coeff() *
                                  a.of_pow2(-(a.precision_bits() / 2));
  if (lead_err > tol) {
    throw certification_error(
        "ascending normal form is not monic: leading coefficient " +
        out.value.leading().str());
  }
  return out;
}

std::string identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::even_p_equals_gg: return "even_p_equals_gg";
    case IdentityId::odd_p_factors_gg: return "odd_p_factors_gg";
    case IdentityId::odd_p_factors_alpha_shift:
      return "odd_p_factors_alpha_shift";
    case IdentityId::gg_odd_from_even: return "gg_odd_from_even";
    case IdentityId::derivative_even_gg: return "derivative_even_gg";
    case IdentityId::derivative_even_shifted: return "derivative_even_shifted";
    case IdentityId::derivative_odd_sum: return "derivative_odd_sum";
  }
  throw param_error("unknown identity id");
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = {
      IdentityId::even_p_equals_gg,
      IdentityId::odd_p_factors_gg,
      IdentityId::odd_p_factors_alpha_shift,
      IdentityId::gg_odd_from_even,
      IdentityId::derivative_even_gg,
      IdentityId::derivative_even_shifted,
      IdentityId::derivative_odd_sum,
  };
  return ids;
}

IdentityId parse_identity(const std::string& name) {
  for (IdentityId id : all_identities()) {
    if (identity_name(id) == name) return id;
  }
  throw param_error("unknown identity: " + name);
}

namespace {

Poly one_plus_x(const Scalar& like) {
  Scalar one = like.of_int(1);
  return Poly({one, one});
}

GGParams gg_partner(const FamilyParams& fp, long d_alpha) {
  return GGParams(fp.alpha + fp.alpha.of_int(d_alpha),
                  fp.alpha.of_int(2 * long(fp.q) + 2));
}

}  // namespace

Poly check_identity(IdentityId id, const FamilyParams& fp, unsigned n) {
  const Scalar& a = fp.alpha;
  switch (id) {
    case IdentityId::even_p_equals_gg:
      return p_poly_ttrr(fp, 2 * n) - gg_poly(gg_partner(fp, 0), 2 * n);
    case IdentityId::odd_p_factors_gg:
      return p_poly_ttrr(fp, 2 * n + 1) -
             one_plus_x(a) * gg_poly(gg_partner(fp, 1), 2 * n);
    case IdentityId::odd_p_factors_alpha_shift:
      return p_poly_ttrr(fp, 2 * n + 1) -
             one_plus_x(a) * p_poly_ttrr(fp.shifted(1, 0), 2 * n);
    case IdentityId::gg_odd_from_even:
      return check_identity(id, gg_partner(fp, 0), n);
    case IdentityId::derivative_even_gg:
      if (n == 0) {
        throw param_error("derivative_even_gg needs inner index n >= 1");
      }
      return p_poly_ttrr(fp, 2 * n).derivative() -
             gg_poly(gg_partner(fp, 1), 2 * n - 1).scaled(a.of_int(2 * long(n)));
    case IdentityId::derivative_even_shifted:
      if (n == 0) {
        throw param_error("derivative_even_shifted needs inner index n >= 1");
      }
      return p_poly_ttrr(fp, 2 * n).derivative() -
             Poly::monomial(1, a.of_int(2 * long(n))) *
                 p_poly_ttrr(fp.shifted(1, 1), 2 * n - 2);
    case IdentityId::derivative_odd_sum: {
      Poly rhs = p_poly_ttrr(fp.shifted(1, 0), 2 * n);
      if (n >= 1) {
        rhs = rhs + Poly::monomial(1, a.of_int(2 * long(n))) *
                        p_poly_ttrr(fp.shifted(1, 1), 2 * n - 1);
      }
      return p_poly_ttrr(fp, 2 * n + 1).derivative() - rhs;
    }
  }
  throw param_error("unknown identity id");
}

Poly check_identity(IdentityId id, const GGParams& gp, unsigned n) {
  if (id != IdentityId::gg_odd_from_even) {
    throw param_error(
        "only gg_odd_from_even takes generalized Gegenbauer parameters");
  }
  GGParams raised(gp.alpha, gp.mu + gp.mu.of_int(2));
  return gg_poly(gp, 2 * n + 1) -
         Poly::monomial(1, gp.alpha.of_int(1)) * gg_poly(raised, 2 * n);
}

}  // namespace swop
