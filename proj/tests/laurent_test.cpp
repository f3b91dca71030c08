#include <gtest/gtest.h>

#include "modhodge/errors.hpp"
#include "modhodge/laurent.hpp"
#include "modhodge/monomial_ideal.hpp"
#include "support.hpp"

namespace modhodge {
namespace {

LaurentPoly x(std::size_t n, std::size_t j, int p = 1) { return LaurentPoly::variable(n, j, p); }
LaurentPoly one(std::size_t n) { return LaurentPoly::constant(n, 1); }

TEST(Rational, KeepsLowestTerms) {
  EXPECT_EQ(toString(makeRational(4, -6)), "-2/3");
  EXPECT_EQ(toString(parseRational(" 10/4 ")), "5/2");
  EXPECT_EQ(toString(parseRational("-7")), "-7");
  EXPECT_THROW(parseRational("1/0"), ParseError);
  EXPECT_THROW(parseRational("6/-4"), ParseError);
  EXPECT_THROW(parseRational("abc"), ParseError);
  EXPECT_THROW(makeRational(1, 0), DomainError);
}

TEST(Laurent, DifferenceOfSquares) {
  EXPECT_EQ((x(1, 0) + one(1)) * (x(1, 0) - one(1)), x(1, 0, 2) - one(1));
}

TEST(Laurent, ZeroAbsorbs) {
  const LaurentPoly p = x(2, 0) + x(2, 1, -3);
  EXPECT_TRUE((p * LaurentPoly(2)).isZero());
}

TEST(Laurent, InverseMonomial) { EXPECT_EQ(x(1, 0, -1) * x(1, 0), one(1)); }

TEST(Laurent, MismatchedRingsThrow) { EXPECT_THROW(x(1, 0) + x(2, 0), DimensionError); }

TEST(Laurent, ParseRoundTrip) {
  testing::Gen gen(11);
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly p = gen.poly(3, gen.integer(0, 4), -3, 3);
    EXPECT_EQ(LaurentPoly::parse(p.toString(), 3), p) << p.toString();
  }
}

TEST(Laurent, ParsesNegativeExponents) {
  EXPECT_EQ(LaurentPoly::parse("x1^-2 - 3*x2", 2), x(2, 0, -2) - x(2, 1) * Rational(3));
  EXPECT_EQ(LaurentPoly::parse("x1^(-2)", 1), x(1, 0, -2));
  EXPECT_TRUE(LaurentPoly::parse("0", 1).isZero());
  EXPECT_THROW(LaurentPoly::parse("x1 +* x2", 2), ParseError);
}

TEST(LaurentProperty, AdditionIsExact) {
  testing::Gen gen(3);
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly p = gen.poly(3, 4, -4, 4);
    const LaurentPoly q = gen.poly(3, 4, -4, 4);
    EXPECT_EQ((p + q) - q, p);
  }
}

TEST(LaurentProperty, MultiplicationDistributes) {
  testing::Gen gen(5);
  for (int k = 0; k < 100; ++k) {
    const LaurentPoly p = gen.poly(2, 3, -3, 3);
    const LaurentPoly q = gen.poly(2, 3, -3, 3);
    const LaurentPoly s = gen.poly(2, 3, -3, 3);
    EXPECT_EQ(p * (q + s), p * q + p * s);
  }
}

TEST(LaurentProperty, LeibnizForPartials) {
  testing::Gen gen(7);
  for (int k = 0; k < 100; ++k) {
    const LaurentPoly p = gen.poly(2, 3, -3, 3);
    const LaurentPoly q = gen.poly(2, 3, -3, 3);
    EXPECT_EQ((p * q).partial(1), p.partial(1) * q + p * q.partial(1));
  }
}

TEST(Radical, Examples) {
  EXPECT_EQ(radicalOfMonomial({3, 0, 2}), (ExponentVector{1, 0, 1}));
  EXPECT_EQ(radicalOfMonomial({0, 0, 0}), (ExponentVector{0, 0, 0}));
  EXPECT_EQ(radicalOfMonomial({1, 1}), (ExponentVector{1, 1}));
  EXPECT_THROW(radicalOfMonomial({1, -1}), DomainError);
}

/// x^a in rad(x^r) iff some power x^{m a} lies in (x^r).
bool inRadicalByPowers(const ExponentVector& a, const ExponentVector& r) {
  for (int m = 1; m <= 8; ++m)
    if (a.scaled(m).dominates(r)) return true;
  return false;
}

TEST(Radical, AgreesWithPowerOracle) {
  forEachInBox(3, 0, 3, [](const ExponentVector& r) {
    const MonomialFractionalIdeal radical{radicalOfMonomial(r)};
    forEachInBox(3, 0, 3, [&](const ExponentVector& a) {
      EXPECT_EQ(fracIdealMember(LaurentPoly::monomial(a), radical), inRadicalByPowers(a, r))
          << "a=" << a.toString() << " r=" << r.toString();
    });
  });
}

TEST(Radical, Idempotent) {
  forEachInBox(3, 0, 4, [](const ExponentVector& r) {
    EXPECT_EQ(radicalOfMonomial(radicalOfMonomial(r)), radicalOfMonomial(r));
  });
}

TEST(FracIdeal, Examples) {
  const MonomialFractionalIdeal inverseX{{-1, 0}};
  EXPECT_TRUE(fracIdealMember(x(2, 0, -1) * x(2, 1), inverseX));
  EXPECT_FALSE(fracIdealMember(x(2, 0, -2), inverseX));
  EXPECT_FALSE(fracIdealMember(one(1) + x(1, 0), MonomialFractionalIdeal{{1}}));
}

TEST(FracIdealProperty, TranslationEquivariant) {
  testing::Gen gen(13);
  for (int k = 0; k < 300; ++k) {
    const LaurentPoly p = gen.poly(2, 3, -3, 3);
    const MonomialFractionalIdeal ideal{gen.exponent(2, -2, 2)};
    const ExponentVector g = gen.exponent(2, -3, 3);
    EXPECT_EQ(fracIdealMember(p.shifted(g), MonomialFractionalIdeal{g} * ideal), fracIdealMember(p, ideal));
  }
}

}  // namespace
}  // namespace modhodge
