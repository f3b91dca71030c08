#include <gtest/gtest.h>

#include "modhodge/errors.hpp"
#include "modhodge/log_form.hpp"
#include "support.hpp"

namespace modhodge {
namespace {

const ModulusPair kFrame({1, 0});

LogForm dlogX(std::size_t j) { return LogForm::dlogVariable(kFrame, j); }
LogForm dX(std::size_t j) { return LogForm::dVariable(kFrame, j); }
LaurentPoly var(std::size_t j, int p = 1) { return LaurentPoly::variable(2, j, p); }

TEST(Dlog, Examples) {
  EXPECT_EQ(dlog(var(0, 2) * var(1), kFrame), dlogX(0).scaled(2) + dX(1).times(var(1, -1)));
  EXPECT_TRUE(dlog(LaurentPoly::constant(2, 5), kFrame).isZero());
  EXPECT_EQ(dlog(var(0, -1), kFrame), -dlogX(0));
  EXPECT_THROW(dlog(var(0) + var(1), kFrame), UnsupportedError);
}

TEST(Wedge, Examples) {
  EXPECT_TRUE(wedge(dlogX(0), dlogX(0)).isZero());
  EXPECT_EQ(wedge(dX(1), dlogX(0)), -wedge(dlogX(0), dX(1)));
  EXPECT_EQ(wedge(dlogX(0).times(var(1)), dX(1)), wedge(dlogX(0), dX(1)).times(var(1)));
}

TEST(ExteriorDerivative, Examples) {
  const ModulusPair s({1});
  EXPECT_EQ(differential(LaurentPoly::variable(1, 0), s),
            LogForm::dlogVariable(s, 0).times(LaurentPoly::variable(1, 0)));
  EXPECT_TRUE(exteriorDerivative(dlogX(0)).isZero());
  EXPECT_EQ(exteriorDerivative(dlogX(0).times(var(1))), wedge(dX(1), dlogX(0)));
}

TEST(LogForm, FramesAgree) {
  const LogForm w = dX(0).times(var(1, 2));
  EXPECT_EQ(w.inFrame(ModulusPair::empty(2)).coefficient(IndexSet::of({0})), var(1, 2));
  EXPECT_EQ(w.coefficient(IndexSet::of({0})), var(0) * var(1, 2));
  EXPECT_EQ(w.inFrame(ModulusPair::reduced(2)), w);
}

TEST(LogForm, ParseExamples) {
  const LogForm w = LogForm::parse("(x1^-1) * dlog(x1) ^ d(x2) + 3 * d(x1) ^ d(x2)", kFrame);
  const LogForm expected = wedge(dlogX(0), dX(1)).times(var(0, -1)) + wedge(dX(0), dX(1)).scaled(3);
  EXPECT_EQ(w, expected);
  EXPECT_THROW(LogForm::parse("dlog(x3)", kFrame), std::exception);
  EXPECT_THROW(LogForm::parse("dlog(x1) ^", kFrame), ParseError);
}

TEST(LogFormProperty, ParseInvertsToString) {
  testing::Gen gen(31);
  for (int k = 0; k < 100; ++k) {
    const ModulusPair pair = gen.pair(3, 2);
    const int q = gen.integer(1, 3);
    const LogForm w = gen.form(pair, q, 3, 3);
    if (w.isZero()) continue;
    EXPECT_EQ(LogForm::parse(w.toString(), pair), w) << w.toString();
  }
}

TEST(LogFormProperty, DSquaredIsZero) {
  testing::Gen gen(32);
  for (int k = 0; k < 200; ++k) {
    const ModulusPair pair = gen.pair(3, 2);
    const LogForm w = gen.form(pair, gen.integer(0, 2), 3, 3);
    EXPECT_TRUE(exteriorDerivative(exteriorDerivative(w)).isZero()) << w.toString();
  }
}

TEST(LogFormProperty, Leibniz) {
  testing::Gen gen(33);
  for (int k = 0; k < 200; ++k) {
    const ModulusPair pair = gen.pair(3, 2);
    const LogForm w = gen.form(pair, gen.integer(0, 2), 2, 3);
    const LaurentPoly p = gen.poly(3, 2, -2, 2);
    const LogForm lhs = exteriorDerivative(w.times(p));
    const LogForm rhs = wedge(differential(p, pair), w) + exteriorDerivative(w).times(p);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(LogFormProperty, GradedCommutativity) {
  testing::Gen gen(34);
  for (int k = 0; k < 200; ++k) {
    const ModulusPair pair = gen.pair(4, 2);
    const int s = gen.integer(0, 2), t = gen.integer(0, 2);
    const LogForm a = gen.form(pair, s, 2, 2);
    const LogForm b = gen.form(pair, t, 2, 2);
    EXPECT_EQ(wedge(a, b), wedge(b, a).scaled((s * t) % 2 == 0 ? 1 : -1));
  }
}

TEST(LogFormProperty, FrameChangeRoundTrips) {
  testing::Gen gen(35);
  for (int k = 0; k < 200; ++k) {
    const ModulusPair pair = gen.pair(3, 2);
    const ModulusPair other = gen.pair(3, 2);
    const LogForm w = gen.form(pair, gen.integer(0, 3), 3, 3);
    const LogForm back = w.inFrame(other).inFrame(pair);
    EXPECT_TRUE((back - w).isZero());
  }
}

TEST(LogFormProperty, DerivativeIsFrameIndependent) {
  testing::Gen gen(36);
  for (int k = 0; k < 100; ++k) {
    const ModulusPair pair = gen.pair(3, 2);
    const LogForm w = gen.form(pair, gen.integer(0, 2), 3, 3);
    EXPECT_EQ(exteriorDerivative(w.inFrame(ModulusPair::empty(3))), exteriorDerivative(w));
  }
}

TEST(LogFormProperty, DlogIsAdditive) {
  testing::Gen gen(37);
  for (int k = 0; k < 100; ++k) {
    const ModulusPair pair = gen.pair(3, 2);
    const LaurentPoly a = LaurentPoly::monomial(gen.exponent(3, -3, 3), gen.rational());
    const LaurentPoly b = LaurentPoly::monomial(gen.exponent(3, -3, 3), gen.rational());
    EXPECT_EQ(dlog(a * b, pair), dlog(a, pair) + dlog(b, pair));
    EXPECT_EQ(differential(a, pair), dlog(a, pair).times(a));
  }
}

}  // namespace
}  // namespace modhodge
