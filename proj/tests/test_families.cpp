#include <doctest.h>

#include <vector>

#include "swop/families.hpp"

using namespace swop;

namespace {

Scalar q(long num, long den = 1) { return Scalar::exact(num, den); }

Poly make(std::initializer_list<Scalar> coeffs) {
  return Poly(std::vector<Scalar>(coeffs));
}

std::vector<FamilyParams> grid() {
  std::vector<FamilyParams> out;
  const std::pair<long, long> alphas[] = {{-1, 2}, {0, 1},  {1, 2},
                                          {1, 1},  {3, 2}, {5, 2}};
  for (auto [num, den] : alphas) {
    for (unsigned qq = 0; qq <= 3; ++qq) out.emplace_back(q(num, den), qq);
  }
  return out;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(FamilyParams(q(-1, 2), 0));
  CHECK_THROWS_AS(FamilyParams(q(-1), 0), param_error);
  CHECK_THROWS_AS(FamilyParams(q(-3, 2), 1), param_error);
  CHECK_THROWS_AS(GGParams(q(0), q(-1)), param_error);
  CHECK_THROWS_AS(GGParams(q(0), Scalar::floating(1.0, 128)), mode_error);
}

TEST_CASE("recurrence coefficients at alpha = 0, q = 0") {
  FamilyParams fp(q(0), 0);
  CHECK(ttrr_beta(fp, 0) == q(-1));
  CHECK(ttrr_beta(fp, 1) == q(1));
  CHECK(ttrr_beta(fp, 2) == q(-1));
  CHECK(ttrr_beta(fp, 3) == q(1));
  CHECK(ttrr_gamma(fp, 1) == q(-2, 5));
  CHECK(ttrr_gamma(fp, 2) == q(-6, 35));
  CHECK(ttrr_gamma(fp, 3) == q(-20, 63));
  CHECK_THROWS_AS(ttrr_gamma(fp, 0), param_error);
}

TEST_CASE("gamma is strictly negative over the grid") {
  for (const FamilyParams& fp : grid()) {
    for (unsigned n = 1; n <= 24; ++n) {
      CAPTURE(fp.alpha.str());
      CAPTURE(fp.q);
      CAPTURE(n);
      CHECK(ttrr_gamma(fp, n).sign() < 0);
    }
  }
}

TEST_CASE("recurrence table layout") {
  FamilyParams fp(q(1, 2), 1);
  std::vector<RecurrencePair> rows = recurrence_table(fp, 4);
  REQUIRE(rows.size() == 4);
  CHECK(!rows[0].has_gamma);
  CHECK(rows[1].has_gamma);
  CHECK(rows[3].index == 3);
  CHECK(rows[2].beta == q(-1));
}

TEST_CASE("low-degree members at alpha = 0, q = 0") {
  FamilyParams fp(q(0), 0);
  CHECK(p_poly_ttrr(fp, 0) == make({q(1)}));
  CHECK(p_poly_ttrr(fp, 1) == make({q(1), q(1)}));
  CHECK(p_poly_ttrr(fp, 2) == make({q(-3, 5), q(0), q(1)}));
  Poly p3 = make({q(1), q(1)}) * make({q(-3, 7), q(0), q(1)});
  CHECK(p_poly_ttrr(fp, 3) == p3);
  CHECK(p_poly_ttrr(fp, 4) == make({q(5, 21), q(0), q(-10, 9), q(0), q(1)}));
}

TEST_CASE("degree-two member in closed form over the grid") {
  for (const FamilyParams& fp : grid()) {
    Scalar c = (q(2) * q(long(fp.q)) + q(3)) /
               (q(2) * fp.alpha + q(2) * q(long(fp.q)) + q(5));
    CHECK(p_poly_ttrr(fp, 2) == make({-c, q(0), q(1)}));
  }
}

TEST_CASE("generalized counterpart in closed form") {
  // Degree 3 at alpha = 0, mu = 0: x^3 - (3/5) x.
  CHECK(gg_poly(GGParams(q(0), q(0)), 3) ==
        make({q(0), q(-3, 5), q(0), q(1)}));
  CHECK(gg_poly(GGParams(q(0), q(0)), 0) == make({q(1)}));
  CHECK(gg_poly(GGParams(q(0), q(0)), 1) == make({q(0), q(1)}));
}

TEST_CASE("construction routes agree for even degrees over the grid") {
  for (const FamilyParams& fp : grid()) {
    for (unsigned n = 0; n <= 12; n += 2) {
      CAPTURE(fp.alpha.str());
      CAPTURE(fp.q);
      CAPTURE(n);
      Poly via_ttrr = p_poly_ttrr(fp, n);
      CHECK(via_ttrr == p_poly_hyper(fp, n));
      CHECK(via_ttrr == gg_poly(GGParams(fp.alpha, q(2 * long(fp.q) + 2)), n));
    }
  }
}

TEST_CASE("the series route rejects odd degrees") {
  CHECK_THROWS_AS(p_poly_hyper(FamilyParams(q(0), 0), 3), param_error);
}

TEST_CASE("odd members factor through the shifted even family") {
  Poly one_plus_x = make({q(1), q(1)});
  for (const FamilyParams& fp : grid()) {
    for (unsigned n = 1; n <= 13; n += 2) {
      CAPTURE(fp.alpha.str());
      CAPTURE(fp.q);
      CAPTURE(n);
      Poly even = p_poly_ttrr(fp.shifted(1, 0), n - 1);
      CHECK(p_poly_ttrr(fp, n) == one_plus_x * even);
    }
  }
}

TEST_CASE("ascending normal form is monic and equal to the series route") {
  for (const FamilyParams& fp : grid()) {
    for (unsigned n = 0; n <= 10; n += 2) {
      AscendingForm form = p_poly_hyper_ascending(fp, n);
      CHECK(form.value == p_poly_hyper(fp, n));
      CHECK(form.value.leading() == q(1));
    }
  }
}

TEST_CASE("every named identity has zero residual over the grid") {
  for (const FamilyParams& fp : grid()) {
    for (IdentityId id : all_identities()) {
      unsigned lo = (id == IdentityId::derivative_even_gg ||
                     id == IdentityId::derivative_even_shifted)
                        ? 1
                        : 0;
      for (unsigned n = lo; n <= 8; ++n) {
        CAPTURE(identity_name(id));
        CAPTURE(fp.alpha.str());
        CAPTURE(fp.q);
        CAPTURE(n);
        CHECK(check_identity(id, fp, n).is_zero());
      }
    }
  }
}

TEST_CASE("identity names round-trip") {
  for (IdentityId id : all_identities()) {
    CHECK(parse_identity(identity_name(id)) == id);
  }
  CHECK_THROWS_AS(parse_identity("nonsense"), param_error);
}

TEST_CASE("float-mode routes agree to roundoff") {
  int prec = 128;
  FamilyParams fp(Scalar::floating(0.5, prec), 2);
  for (unsigned n = 0; n <= 8; n += 2) {
    Poly d = p_poly_ttrr(fp, n) - p_poly_hyper(fp, n);
    Scalar bound = Scalar::floating(1.0, prec).of_pow2(-(prec - 16));
    CHECK((d.is_zero() || d.max_abs_coeff() <= bound));
  }
}
