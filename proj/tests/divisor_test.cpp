#include <gtest/gtest.h>

#include "modhodge/divisor_sequences.hpp"
#include "modhodge/errors.hpp"
#include "modhodge/form_module.hpp"
#include "support.hpp"

namespace modhodge {
namespace {

TEST(Residue, PicksTheDlogCoefficientWithSign) {
  const ModulusPair pair({1, 0});
  const LaurentPoly x2 = LaurentPoly::variable(2, 1);
  const LogForm front = wedge(LogForm::dlogVariable(pair, 0), LogForm::dVariable(pair, 1)).times(x2);
  EXPECT_EQ(residue(front, 0), LogForm::dVariable(pair, 1).times(x2));
  const LogForm back = wedge(LogForm::dVariable(pair, 1), LogForm::dlogVariable(pair, 0));
  EXPECT_EQ(residue(back, 0), -LogForm::dVariable(pair, 1));
}

TEST(Residue, DropsHigherPowersOfTheVariable) {
  const ModulusPair pair({1});
  const LogForm w = LogForm::dlogVariable(pair, 0).times(LaurentPoly::parse("1 + x1", 1));
  EXPECT_EQ(residue(w, 0), LogForm::scalar(pair, LaurentPoly::constant(1, 1)));
}

TEST(Residue, PoleIsAMembershipError) {
  const ModulusPair pair({1});
  const LogForm w = LogForm::dlogVariable(pair, 0).times(LaurentPoly::variable(1, 0, -1));
  EXPECT_THROW(residue(w, 0), MembershipError);
}

TEST(Residue, KillsTheImageOfTheSmallerModule) {
  testing::Gen gen(51);
  for (int k = 0; k < 100; ++k) {
    ExponentVector r = gen.exponent(3, 0, 2);
    r[0] = 1;
    const ModulusPair pair(r);
    const int q = gen.integer(1, 3);
    for (const auto& b : basis(FormModuleSpec::pOmega(pair.reducedAt(0), q))) {
      const LogForm w = b.times(gen.poly(3, 2, 0, 2));
      EXPECT_TRUE(residue(w, 0).isZero()) << w.toString();
    }
  }
}

TEST(DivisorReduction, Examples) {
  const auto thick = divisorReductionSES(ModulusPair({2}), 0, 1, 4);
  EXPECT_TRUE(thick.passed) << thick.witness.value_or("");
  EXPECT_EQ(thick.parameters["sequences"], Json::array({1, 3}));

  const auto reduced = divisorReductionSES(ModulusPair({1, 0}), 0, 1, 4);
  EXPECT_TRUE(reduced.passed) << reduced.witness.value_or("");
  EXPECT_EQ(reduced.parameters["sequences"], Json::array({2, 4}));

  EXPECT_TRUE(divisorReductionSES(ModulusPair({1}), 0, 0, 4).passed);
}

TEST(DivisorReduction, IndexOffTheSupportIsRejected) {
  EXPECT_THROW(divisorReductionSES(ModulusPair({1, 0}), 1, 1, 2), DomainError);
}

TEST(DivisorReduction, ResidueCokernelIsFreeOverTheDivisor) {
  // (n=2, r=(1,0), q=1): in degree (0, d2) with d2 >= 0 the cokernel of
  // P-Omega^1(0,0) -> P-Omega^1(1,0) is one-dimensional, spanned by the
  // class of x2^{d2} dlog x1.
  const GradedComplex complex = divisorComplex(ModulusPair({1, 0}), 0, 1, false);
  for (int d2 = 0; d2 <= 3; ++d2) {
    const auto analysis = complex.analyze(ExponentVector{0, d2});
    EXPECT_TRUE(analysis.exact());
    EXPECT_EQ(analysis.dims[2], 1u);
  }
  EXPECT_EQ(complex.analyze(ExponentVector{1, 0}).dims[2], 0u);
}

TEST(DivisorReduction, DetectsABrokenSequence) {
  // Starting from r - 2 delta instead of r - delta leaves a cokernel.
  const ModulusPair pair({3});
  const GradedComplex honest = divisorComplex(pair, 0, 1, true);
  bool sawNonzero = false;
  for (int d = -4; d <= 4; ++d) {
    const auto a = honest.analyze(ExponentVector{d});
    EXPECT_TRUE(a.exact());
  }
  const auto terms = honest.terms();
  auto broken = terms;
  broken[0].summands[0].module = asGraded(FormModuleSpec::mOmega(ModulusPair({1}), 1));
  const GradedComplex wrong(1, broken, {[](std::size_t, const LogForm& w) { return TermElement{w}; },
                                        [](std::size_t, const LogForm& w) {
                                          return TermElement{LogForm(w.frame(), w.degree())};
                                        }});
  for (int d = -4; d <= 4; ++d) sawNonzero |= !wrong.analyze(ExponentVector{d}).exact();
  EXPECT_TRUE(sawNonzero);
}

}  // namespace
}  // namespace modhodge
