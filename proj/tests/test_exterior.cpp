#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "grassmax/exterior.hpp"
#include "test_util.hpp"

using namespace grassmax;

TEST_CASE("monomial products on generators") {
  const AlgebraContext ctx(4);

  SUBCASE("x1 * x2 = x1x2") {
    const auto p = mul_monomials(0b0001, 0b0010, ctx);
    CHECK(p.sign == 1);
    CHECK(p.product == 0b0011);
  }
  SUBCASE("x2 * x1 = -x1x2") {
    const auto p = mul_monomials(0b0010, 0b0001, ctx);
    CHECK(p.sign == -1);
    CHECK(p.product == 0b0011);
  }
  SUBCASE("squares vanish") {
    CHECK(mul_monomials(0b0001, 0b0001, ctx).sign == 0);
    CHECK(mul_monomials(0b0111, 0b0100, ctx).sign == 0);
  }
  SUBCASE("x1x3 * x2 = -x1x2x3") {
    const auto p = mul_monomials(0b0101, 0b0010, ctx);
    CHECK(p.sign == -1);
    CHECK(p.product == 0b0111);
  }
  SUBCASE("the unit is neutral") {
    for (Mask m = 0; m <= ctx.full_mask(); ++m) {
      CHECK(mul_monomials(0, m, ctx).sign == 1);
      CHECK(mul_monomials(0, m, ctx).product == m);
      CHECK(mul_monomials(m, 0, ctx).sign == 1);
    }
  }
}

TEST_CASE("sign agrees with the word-sort oracle for all pairs up to n = 5") {
  for (int n = 1; n <= 5; ++n) {
    const AlgebraContext ctx(n);
    for (Mask a = 0; a <= ctx.full_mask(); ++a)
      for (Mask b = 0; b <= ctx.full_mask(); ++b) {
        const auto p = mul_monomials(a, b, ctx);
        const int expected = testutil::wordsort_sign(a, b);
        CHECK(p.sign == expected);
        if (expected != 0) CHECK(p.product == (a | b));
      }
  }
}

TEST_CASE("graded commutation of monomials") {
  const AlgebraContext ctx(5);
  for (Mask a = 0; a <= ctx.full_mask(); ++a)
    for (Mask b = 0; b <= ctx.full_mask(); ++b) {
      if (a & b) continue;
      const auto ab = mul_monomials(a, b, ctx);
      const auto ba = mul_monomials(b, a, ctx);
      const int flip = (degree(a) % 2 == 1 && degree(b) % 2 == 1) ? -1 : 1;
      CHECK(ab.sign == flip * ba.sign);
    }
}

TEST_CASE("even monomials are central, exhaustively at n = 5") {
  const AlgebraContext ctx(5);
  for (Mask e : even_part_basis(ctx)) {
    const Element ee = Element::monomial(ctx, e);
    for (Mask m = 0; m <= ctx.full_mask(); ++m) {
      CHECK(commutator(ee, Element::monomial(ctx, m)).is_zero());
    }
  }
}

TEST_CASE("monomial associativity is exhaustive at n = 5") {
  const AlgebraContext ctx(5);
  for (Mask a = 0; a <= ctx.full_mask(); ++a)
    for (Mask b = 0; b <= ctx.full_mask(); ++b)
      for (Mask c = 0; c <= ctx.full_mask(); ++c) {
        const Element ea = Element::monomial(ctx, a);
        const Element eb = Element::monomial(ctx, b);
        const Element ec = Element::monomial(ctx, c);
        CHECK(multiply(multiply(ea, eb), ec) == multiply(ea, multiply(eb, ec)));
      }
}

TEST_CASE("element arithmetic laws on random elements") {
  for (const FieldDesc field : {FieldDesc::rationals(), FieldDesc::gf(3)}) {
    const AlgebraContext ctx(6, field);
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 250; ++trial) {
      const Element a = testutil::random_element(ctx, rng, 4);
      const Element b = testutil::random_element(ctx, rng, 4);
      const Element c = testutil::random_element(ctx, rng, 4);
      CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
      CHECK(multiply(add(a, b), c) == add(multiply(a, c), multiply(b, c)));
      CHECK(multiply(c, add(a, b)) == add(multiply(c, a), multiply(c, b)));
      CHECK(sub(a, a).is_zero());
      CHECK(add(a, sub(b, a)) == b);
      CHECK(multiply(Element::one(ctx), a) == a);
      CHECK(multiply(a, Element::one(ctx)) == a);
    }
  }
}

TEST_CASE("coefficients normalize into the field") {
  SUBCASE("rationals cancel") {
    const AlgebraContext ctx(3);
    Element e = Element::monomial(ctx, 1, BigRat(2, 4));
    CHECK(e.coeff(1) == BigRat(1, 2));
    e.add_term(1, BigRat(-1, 2));
    CHECK(e.is_zero());
  }
  SUBCASE("gf(3) reduces mod 3") {
    const AlgebraContext ctx(3, FieldDesc::gf(3));
    Element e = Element::monomial(ctx, 1, BigRat(5));
    CHECK(e.coeff(1) == BigRat(2));
    e.add_term(1, BigRat(1));
    CHECK(e.is_zero());
    CHECK(field_normalize(BigRat(-1), FieldDesc::gf(3)) == BigRat(2));
    CHECK(field_inverse(BigRat(2), FieldDesc::gf(3)) == BigRat(2));
  }
}

TEST_CASE("field and context guards") {
  CHECK_THROWS_AS(FieldDesc::gf(2), std::invalid_argument);
  CHECK_THROWS_AS(FieldDesc::gf(4), std::invalid_argument);
  CHECK_THROWS_AS(FieldDesc::gf(9), std::invalid_argument);
  CHECK_NOTHROW(FieldDesc::gf(3));
  CHECK_NOTHROW(FieldDesc::gf(5));
  CHECK_THROWS_AS(AlgebraContext(0), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraContext(31), std::invalid_argument);
  CHECK_NOTHROW(AlgebraContext(30));

  const AlgebraContext ctx(3);
  CHECK_THROWS_AS(mul_monomials(0b1000, 0b0001, ctx), std::invalid_argument);
  const AlgebraContext other(4);
  CHECK_THROWS_AS(multiply(Element::one(ctx), Element::one(other)), std::invalid_argument);
}

TEST_CASE("even part basis") {
  for (int n = 1; n <= 8; ++n) {
    const AlgebraContext ctx(n);
    const auto basis = even_part_basis(ctx);
    CHECK(basis.size() == (std::size_t{1} << (n - 1)));
    for (Mask m : basis) CHECK(degree(m) % 2 == 0);
    CHECK(std::is_sorted(basis.begin(), basis.end()));
  }
}

TEST_CASE("element accessors and rendering") {
  const AlgebraContext ctx(3);
  Element e = Element::zero(ctx);
  e.add_term(0b101, BigRat(1));
  e.add_term(0b001, BigRat(-2, 3));
  CHECK(e.leading_mask() == 0b001);
  CHECK(e.coeff(0b101) == BigRat(1));
  CHECK(e.coeff(0b010) == BigRat(0));
  CHECK(monomial_str(0) == "1");
  CHECK(monomial_str(0b101) == "x1x3");
  CHECK(to_string(Element::zero(ctx)) == "0");
  CHECK(to_string(e) == "-2/3*x1 + 1*x1x3");
}
