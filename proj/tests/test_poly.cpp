#include <doctest.h>

#include "swop/numerics.hpp"
#include "swop/poly.hpp"

using namespace swop;

namespace {

Scalar q(long num, long den = 1) { return Scalar::exact(num, den); }

Poly make(std::initializer_list<long> coeffs) {
  std::vector<Scalar> v;
  for (long c : coeffs) v.push_back(q(c));
  return Poly(std::move(v));
}

}  // namespace

TEST_CASE("construction trims trailing zeros") {
  Poly p(std::vector<Scalar>{q(1), q(2), q(0), q(0)});
  CHECK(p.degree() == 1);
  CHECK(p.coeff(0) == q(1));
  CHECK(p.coeff(1) == q(2));
  CHECK(p.coeff(5) == q(0));

  Poly z(std::vector<Scalar>{q(0), q(0)});
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
}

TEST_CASE("monomial and constant") {
  Poly m = Poly::monomial(3, q(5));
  CHECK(m.degree() == 3);
  CHECK(m.coeff(3) == q(5));
  CHECK(m.coeff(0) == q(0));
  CHECK(Poly::monomial(2, q(0)).is_zero());
  CHECK(Poly::constant(q(7)).degree() == 0);
}

TEST_CASE("evaluation by Horner") {
  Poly p = make({5, 0, -3, 1});  // x^3 - 3x^2 + 5
  CHECK(p.eval(q(0)) == q(5));
  CHECK(p.eval(q(2)) == q(1));
  CHECK(p.eval(q(-1, 2)) == q(33, 8));
}

TEST_CASE("ring operations") {
  Poly a = make({1, 1});   // 1 + x
  Poly b = make({-1, 1});  // -1 + x
  CHECK(a * b == make({-1, 0, 1}));
  CHECK(a + b == make({0, 2}));
  CHECK(a - a == Poly());
  CHECK(-a == make({-1, -1}));
  CHECK(a * Poly() == Poly());
}

TEST_CASE("derivative") {
  Poly p = make({4, 3, 0, 1});  // x^3 + 3x + 4
  CHECK(p.derivative() == make({3, 0, 3}));
  CHECK(Poly::constant(q(2)).derivative().is_zero());
  CHECK(Poly().derivative().is_zero());
}

TEST_CASE("even part in u") {
  Poly p = make({3, 0, -4, 0, 1});  // x^4 - 4 x^2 + 3
  CHECK(p.is_even_poly());
  CHECK(p.even_part_in_u() == make({3, -4, 1}));

  Poly odd = make({0, 1});
  CHECK(!odd.is_even_poly());
  CHECK_THROWS_AS(odd.even_part_in_u(), error);
}

TEST_CASE("float evenness uses the roundoff threshold") {
  int prec = 128;
  Scalar tiny = Scalar::floating(1.0, prec).of_pow2(-100);
  Poly p(std::vector<Scalar>{Scalar::floating(1.0, prec), tiny,
                             Scalar::floating(1.0, prec)});
  CHECK(p.is_even_poly());
  Poly u = p.even_part_in_u();
  CHECK(u.degree() == 1);

  Scalar big = Scalar::floating(1.0, prec).of_pow2(-10);
  Poly pb(std::vector<Scalar>{Scalar::floating(1.0, prec), big,
                              Scalar::floating(1.0, prec)});
  CHECK(!pb.is_even_poly());
}

TEST_CASE("deflation by a known root") {
  Poly p = make({-1, 0, 0, 1});  // x^3 - 1
  CHECK(p.deflate_root(q(1)) == make({1, 1, 1}));
  CHECK_THROWS_AS(p.deflate_root(q(2)), error);

  Poly with_minus_one = make({1, 1}) * make({-3, 0, 1});
  CHECK(with_minus_one.deflate_root(q(-1)) == make({-3, 0, 1}));
}

TEST_CASE("euclidean division") {
  Poly num = make({1, 0, 0, 0, 1});  // x^4 + 1
  Poly den = make({1, 0, 1});        // x^2 + 1
  auto [quo, rem] = Poly::divrem(num, den);
  CHECK(quo * den + rem == num);
  CHECK(rem.degree() < den.degree());
  CHECK(quo == make({-1, 0, 1}));
  CHECK(rem == make({2}));
  CHECK_THROWS_AS(Poly::divrem(num, Poly()), error);
}

TEST_CASE("max abs coeff") {
  CHECK(make({1, -7, 3}).max_abs_coeff() == q(7));
  CHECK(Poly().max_abs_coeff() == q(0));
}

TEST_CASE("mode mixing in polynomials throws") {
  Poly ex = make({1, 1});
  Poly fl(std::vector<Scalar>{Scalar::floating(1.0, 128)});
  CHECK_THROWS_AS(ex + fl, mode_error);
  CHECK_THROWS_AS(ex.eval(Scalar::floating(1.0, 128)), mode_error);
}

TEST_CASE("pochhammer rising factorial") {
  CHECK(pochhammer(q(3), 0) == q(1));
  CHECK(pochhammer(q(3), 4) == q(360));
  CHECK(pochhammer(q(-1, 2), 3) == q(-3, 8));
  CHECK(pochhammer(q(-3), 5) == q(0));
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2, q(1)) == q(10));
  CHECK(binomial(6, 0, q(1)) == q(1));
  CHECK(binomial(6, 6, q(1)) == q(1));
  CHECK(binomial(10, 3, Scalar::floating(1.0, 128)).to_double() == 120.0);
}
