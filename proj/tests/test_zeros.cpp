#include <doctest.h>

#include <vector>

#include "swop/families.hpp"
#include "swop/zeros.hpp"

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

bool encloses(const RootEnclosure& r, double x, double tol) {
  return r.refined.to_double() > x - tol && r.refined.to_double() < x + tol;
}

}  // namespace

TEST_CASE("sturm counting on a known cubic") {
  // (x - 1) x (x + 2)
  Poly p = Poly({q(-1), q(1)}) * Poly({q(0), q(1)}) * Poly({q(2), q(1)});
  CHECK(sturm_count(p, q(-3), q(3)) == 3);
  CHECK(sturm_count(p, q(0), q(3)) == 1);   // (0, 3] excludes the root at 0
  CHECK(sturm_count(p, q(-1), q(0)) == 1);  // picks it up here instead
  CHECK(sturm_count(p, q(2), q(5)) == 0);
  CHECK_THROWS_AS(sturm_count(p, Scalar::floating(0.0, 128),
                              Scalar::floating(1.0, 128)),
                  mode_error);
}

TEST_CASE("sturm counting rejects repeated roots") {
  Poly sq = Poly({q(-1), q(1)}) * Poly({q(-1), q(1)});
  CHECK_THROWS_AS(sturm_count(sq, q(0), q(2)), certification_error);
}

TEST_CASE("trivial degrees") {
  FamilyParams fp(q(0), 0);
  CHECK(find_zeros(fp, 0).roots.empty());
  RootSet r1 = find_zeros(fp, 1);
  REQUIRE(r1.roots.size() == 1);
  CHECK(r1.roots[0].at_minus_one);
  CHECK(r1.roots[0].refined == q(-1));
}

TEST_CASE("root count equals the degree over the grid") {
  for (const FamilyParams& fp : grid()) {
    for (unsigned n = 0; n <= 10; ++n) {
      CAPTURE(fp.alpha.str());
      CAPTURE(fp.q);
      CAPTURE(n);
      RootSet rs = find_zeros(fp, n);
      CHECK(rs.roots.size() == n);
      if (n % 2 == 1) {
        REQUIRE(!rs.roots.empty());
        CHECK(rs.roots.front().at_minus_one);
      }
      for (size_t i = 1; i < rs.roots.size(); ++i) {
        CHECK(rs.roots[i - 1].hi < rs.roots[i].lo);
      }
    }
  }
}

TEST_CASE("quartic roots match the classical values") {
  RootSet rs = find_zeros(FamilyParams(q(0), 0), 4);
  REQUIRE(rs.roots.size() == 4);
  CHECK(encloses(rs.roots[0], -0.906179845938664, 1e-12));
  CHECK(encloses(rs.roots[1], -0.5384693101056831, 1e-12));
  CHECK(encloses(rs.roots[2], 0.5384693101056831, 1e-12));
  CHECK(encloses(rs.roots[3], 0.906179845938664, 1e-12));
}

TEST_CASE("rational roots produce point enclosures") {
  // At alpha = 5/2, q = 3 the degree-2 member is x^2 - 9/16.
  RootSet rs = find_zeros(FamilyParams(q(5, 2), 3), 2);
  REQUIRE(rs.roots.size() == 2);
  CHECK(rs.roots[0].is_point());
  CHECK(rs.roots[0].refined == q(-3, 4));
  CHECK(rs.roots[1].is_point());
  CHECK(rs.roots[1].refined == q(3, 4));
}

TEST_CASE("interlacing fails symmetrically for consecutive members") {
  for (const FamilyParams& fp : grid()) {
    RootSet lo = find_zeros(fp, 2);
    RootSet hi = find_zeros(fp, 3);
    InterlacingReport ir = check_interlacing(lo, hi);
    CAPTURE(fp.alpha.str());
    CAPTURE(fp.q);
    CHECK(!ir.interlaces);
    REQUIRE(ir.witness.has_value());
    CHECK(ir.witness->first + ir.witness->second == q(0));
  }
}

TEST_CASE("the classical witness at alpha = 0, q = 0") {
  RootSet lo = find_zeros(FamilyParams(q(0), 0), 2);
  RootSet hi = find_zeros(FamilyParams(q(0), 0), 3);
  InterlacingReport ir = check_interlacing(lo, hi);
  REQUIRE(ir.witness.has_value());
  CHECK(ir.witness->first.to_double() == doctest::Approx(-0.654654).epsilon(1e-5));
  CHECK(ir.witness->second.to_double() == doctest::Approx(0.654654).epsilon(1e-5));
}

TEST_CASE("a genuinely interlacing pair reports true") {
  // x^2 - 1/2 interlaces x^3 - (3/4) x: roots ±0.707 between 0, ±0.866.
  ModeConfig cfg = ModeConfig::exact_config();
  RootSet lo = find_real_roots(Poly({q(-1, 2), q(0), q(1)}), cfg, "lo");
  RootSet hi = find_real_roots(Poly({q(0), q(-3, 4), q(0), q(1)}), cfg, "hi");
  InterlacingReport ir = check_interlacing(lo, hi);
  CHECK(ir.interlaces);
  CHECK(!ir.witness.has_value());
}

TEST_CASE("largest zeros decrease strictly along the shifted chain") {
  std::vector<RootEnclosure> chain = largest_zero_chain(q(1, 2), 0, 2);
  REQUIRE(chain.size() == 2);
  CHECK(encloses(chain[0], 0.8660254037844386, 1e-12));
  CHECK(encloses(chain[1], 0.7071067811865476, 1e-12));

  std::vector<RootEnclosure> classical = largest_zero_chain(q(0), 0, 2);
  REQUIRE(classical.size() == 2);
  CHECK(encloses(classical[0], 0.90618, 1e-5));
  CHECK(encloses(classical[1], 0.74536, 1e-5));

  for (const FamilyParams& fp : grid()) {
    CHECK(largest_zero_chain(fp.alpha, fp.q, 4).size() == 4);
  }
}

TEST_CASE("odd zeros equal -1 plus the shifted even zeros") {
  for (const FamilyParams& fp : grid()) {
    for (unsigned n = 1; n <= 3; ++n) {
      for (unsigned k = 0; k <= 1; ++k) {
        for (unsigned l = 0; l <= 1; ++l) {
          CheckOutcome oc = odd_even_zero_map(fp.alpha, fp.q, n, k, l);
          CAPTURE(fp.alpha.str());
          CAPTURE(fp.q);
          CAPTURE(n);
          CHECK(oc.pass);
        }
      }
    }
  }
}

TEST_CASE("each positive gap holds one zero of the shifted derivative factor") {
  for (const FamilyParams& fp : grid()) {
    for (unsigned n = 2; n <= 10; n += 2) {
      CheckOutcome oc = critical_point_check(fp, n);
      CAPTURE(fp.alpha.str());
      CAPTURE(fp.q);
      CAPTURE(n);
      CHECK(oc.pass);
    }
  }
}

TEST_CASE("unsupported root structure is refused") {
  ModeConfig cfg = ModeConfig::exact_config();
  // (x - 2)(x - 3) has no symmetric or endpoint structure.
  Poly p = Poly({q(-2), q(1)}) * Poly({q(-3), q(1)});
  CHECK_THROWS_AS(find_real_roots(p, cfg, "off-family"), param_error);
}

TEST_CASE("float-mode roots agree with exact enclosures") {
  ModeConfig fcfg = ModeConfig::floating_config(128);
  for (const FamilyParams& fp : grid()) {
    FamilyParams ffp(Scalar::floating(fp.alpha.rat(), 128), fp.q);
    for (unsigned n = 0; n <= 8; ++n) {
      RootSet ex = find_zeros(fp, n);
      RootSet fl = find_zeros(ffp, n, fcfg);
      CAPTURE(fp.alpha.str());
      CAPTURE(fp.q);
      CAPTURE(n);
      REQUIRE(fl.roots.size() == ex.roots.size());
      for (size_t i = 0; i < fl.roots.size(); ++i) {
        double want = ex.roots[i].refined.to_double();
        CHECK(fl.roots[i].refined.to_double() ==
              doctest::Approx(want).epsilon(1e-15));
      }
    }
  }
}

TEST_CASE("tolerance controls the enclosure width") {
  ModeConfig cfg = ModeConfig::exact_config();
  cfg.refine_tolerance = q(1, 1L << 20);
  RootSet rs = find_zeros(FamilyParams(q(0), 0), 4, cfg);
  for (const RootEnclosure& r : rs.roots) {
    CHECK(r.hi - r.lo <= q(1, 1L << 20));
  }
}
