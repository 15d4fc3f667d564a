#include <doctest.h>

#include <vector>

#include "swop/families.hpp"
#include "swop/orthogonality.hpp"

using namespace swop;

namespace {

Scalar q(long num, long den = 1) { return Scalar::exact(num, den); }

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

TEST_CASE("base moment ratios satisfy the two-step recurrence") {
  // M_{2s}/M_0 = product over the first s odd ratios (2t-1)/(2t+2alpha+1).
  MomentTable t(q(1), 8);
  CHECK(t.relative(0) == q(1));
  CHECK(t.relative(1) == q(1, 5));
  CHECK(t.relative(2) == q(1, 5) * q(3, 7));
  CHECK(t.relative(2) == q(3, 35));
  CHECK_THROWS_AS(t.relative(5), param_error);
}

TEST_CASE("signed moments at alpha = 0, q = 0") {
  FamilyParams fp(q(0), 0);
  // With the even base moments normalized so M_0 = 1, the signed weight
  // x (1 - x) gives <1, 1> = -M_2/M_0 = -1/3.
  CHECK(signed_moment(fp, 0) == q(-1, 3));
  InnerProduct ip(fp, 8);
  Poly one = Poly::constant(q(1));
  CHECK(ip.of(one, one) == q(-1, 3));
}

TEST_CASE("inner products against known members") {
  FamilyParams fp(q(0), 0);
  Poly p2({q(-3, 5), q(0), q(1)});
  Poly p3 = Poly({q(1), q(1)}) * Poly({q(-3, 7), q(0), q(1)});
  CHECK(signed_inner(fp, Poly::monomial(2, q(1)), p2) == q(-4, 175));
  CHECK(signed_inner(fp, Poly::monomial(3, q(1)), p3) == q(16, 2205));
  CHECK(signed_inner(fp, Poly::monomial(0, q(1)), p2) == q(0));
  CHECK(signed_inner(fp, Poly::monomial(1, q(1)), p2) == q(0));
}

TEST_CASE("orthogonality characterization over the grid") {
  for (const FamilyParams& fp : grid()) {
    for (unsigned n = 0; n <= 10; ++n) {
      CAPTURE(fp.alpha.str());
      CAPTURE(fp.q);
      CAPTURE(n);
      OrthogonalityReport rep = verify_orthogonality(fp, p_poly_ttrr(fp, n), n);
      CHECK(rep.pass);
      CHECK(rep.tolerance.is_zero());
    }
  }
}

TEST_CASE("degree mismatch is rejected") {
  FamilyParams fp(q(0), 0);
  CHECK_THROWS_AS(verify_orthogonality(fp, p_poly_ttrr(fp, 2), 3), param_error);
}

TEST_CASE("a wrong polynomial fails the characterization") {
  FamilyParams fp(q(0), 0);
  Poly wrong({q(-3, 5) + q(1, 1000), q(0), q(1)});
  CHECK(!verify_orthogonality(fp, wrong, 2).pass);
}

TEST_CASE("moment-built basis reproduces the recurrence family") {
  for (const FamilyParams& fp : grid()) {
    std::vector<Poly> basis = gram_schmidt_oracle(fp, 8);
    for (unsigned n = 0; n <= 8; ++n) {
      CAPTURE(fp.alpha.str());
      CAPTURE(fp.q);
      CAPTURE(n);
      CHECK(basis[n] == p_poly_ttrr(fp, n));
    }
  }
}

TEST_CASE("recurrence coefficients recovered from moments") {
  for (const FamilyParams& fp : grid()) {
    std::vector<RecurrencePair> got = recurrence_from_oracle(fp, 9);
    std::vector<RecurrencePair> want = recurrence_table(fp, 9);
    REQUIRE(got.size() == want.size());
    for (size_t k = 0; k < got.size(); ++k) {
      CAPTURE(fp.alpha.str());
      CAPTURE(fp.q);
      CAPTURE(k);
      CHECK(got[k].beta == want[k].beta);
      CHECK(got[k].has_gamma == want[k].has_gamma);
      if (got[k].has_gamma) CHECK(got[k].gamma == want[k].gamma);
    }
  }
}

TEST_CASE("expansion in the monic basis") {
  FamilyParams fp(q(1, 2), 1);
  std::vector<Poly> basis = gram_schmidt_oracle(fp, 5);
  Poly combo = basis[2].scaled(q(3)) + basis[4] + basis[5].scaled(q(-1, 7));
  std::vector<Scalar> lambda = expand_in_basis(combo, basis);
  REQUIRE(lambda.size() == 6);
  CHECK(lambda[0] == q(0));
  CHECK(lambda[1] == q(0));
  CHECK(lambda[2] == q(3));
  CHECK(lambda[3] == q(0));
  CHECK(lambda[4] == q(1));
  CHECK(lambda[5] == q(-1, 7));
}

TEST_CASE("partial orthogonality forces the expansion window") {
  // A combination p_n + p_{n+r} annihilates all powers below n, does not
  // annihilate x^n, and its basis expansion lives entirely in [n, n+r].
  FamilyParams fp(q(3, 2), 2);
  unsigned n = 2, r = 3;
  std::vector<Poly> basis = gram_schmidt_oracle(fp, n + r);
  Poly combo = basis[n] + basis[n + r];
  InnerProduct ip(fp, 2 * (n + r));
  for (unsigned k = 0; k < n; ++k) {
    CHECK(ip.of(Poly::monomial(k, q(1)), combo) == q(0));
  }
  CHECK(ip.of(Poly::monomial(n, q(1)), combo) != q(0));
  std::vector<Scalar> lambda = expand_in_basis(combo, basis);
  for (unsigned k = 0; k < n; ++k) CHECK(lambda[k] == q(0));
}

TEST_CASE("float-mode orthogonality holds to tolerance") {
  FamilyParams fp(Scalar::floating(1.5, 192), 1);
  for (unsigned n = 0; n <= 8; ++n) {
    OrthogonalityReport rep = verify_orthogonality(fp, p_poly_ttrr(fp, n), n);
    CAPTURE(n);
    CHECK(rep.pass);
    CHECK(rep.tolerance.sign() > 0);
  }
}
