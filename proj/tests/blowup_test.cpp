#include <gtest/gtest.h>

#include "modhodge/atlas.hpp"
#include "modhodge/blowup.hpp"
#include "modhodge/errors.hpp"
#include "modhodge/form_module.hpp"
#include "support.hpp"

namespace modhodge {
namespace {

IndexSet setOf(std::initializer_list<int> elements) {
  IndexSet s;
  for (int e : elements) s = s.with(e);
  return s;
}

long choose(int n, int k) { return k < 0 || k > n ? 0 : binomial(n, k); }

/// Every setup on 2..maxVars variables with |N| >= 2, r in {0..rMax}, and
/// the center meeting the support.
std::vector<BlowupSetup> smallSetups(int maxVars, int rMax) {
  std::vector<BlowupSetup> out;
  for (int vars = 2; vars <= maxVars; ++vars)
    for (IndexSet center : allSubsets(vars)) {
      if (center.size() < 2) continue;
      forEachInBox(static_cast<std::size_t>(vars), 0, rMax, [&](const ExponentVector& r) {
        BlowupSetup setup(center, ModulusPair(r));
        if (setup.centerInDivisor()) out.push_back(setup);
      });
    }
  return out;
}

TEST(BlowupSetup, Preconditions) {
  EXPECT_THROW(BlowupSetup(setOf({0}), ModulusPair({1, 0})), PreconditionError);
  EXPECT_THROW(BlowupSetup(setOf({0, 2}), ModulusPair({1, 0})), PreconditionError);
  const BlowupSetup setup(setOf({0, 1}), ModulusPair({1, 0, 3}));
  EXPECT_EQ(setup.complement(), setOf({2}));
  EXPECT_EQ(setup.support(), setOf({0, 2}));
  EXPECT_TRUE(setup.centerInDivisor());
}

TEST(BlowupChart, ModulusOnTheChart) {
  const BlowupSetup setup(setOf({0, 1, 2}), ModulusPair({2, 1, 0, 5}));
  const BlowupChart chart(setup, 1);
  EXPECT_EQ(chart.pair().modulusExp(), (ExponentVector{2, 3, 0, 5}));
  const LaurentPoly x0 = LaurentPoly::variable(4, 0);
  // x0 = y0 y1 on U_1.
  EXPECT_EQ(chart.fromBase().apply(x0), LaurentPoly::variable(4, 0) * LaurentPoly::variable(4, 1));
  EXPECT_EQ(chart.toBase().apply(chart.fromBase().apply(x0)), x0);
}

TEST(ChartBasis, Examples) {
  const BlowupSetup setup(setOf({0, 1}), ModulusPair({1, 0}));
  const auto b = chartBasis(setup, 0);
  ASSERT_EQ(b.size(), 2u);
  const ModulusPair& frame = setup.pair();
  EXPECT_TRUE((b[0] - LogForm::dlogVariable(frame, 0)).isZero());
  EXPECT_TRUE((b[1] - LogForm::dVariable(frame, 1).times(LaurentPoly::variable(2, 0, -1))).isZero());
  EXPECT_FALSE(member(b[1], FormModuleSpec::pOmega(frame, 1)));
  EXPECT_TRUE(member(BlowupChart(setup, 0).fromBase().apply(b[1]), BlowupChart(setup, 0).spec(FormKind::POmega, 1)));

  const BlowupSetup full(setOf({0, 1}), ModulusPair({1, 2}));
  for (int j : {0, 1}) {
    const auto all = chartBasis(full, j);
    ASSERT_EQ(all.size(), 2u);
    EXPECT_TRUE((all[0] - LogForm::dlogVariable(full.pair(), 0)).isZero());
    EXPECT_TRUE((all[1] - LogForm::dlogVariable(full.pair(), 1)).isZero());
  }
}

TEST(ChartBasis, CenterOutsideTheDivisorIsRejected) {
  const BlowupSetup setup(setOf({0, 1}), ModulusPair({0, 0, 1}));
  EXPECT_THROW(chartBasis(setup, 0), PreconditionError);
  EXPECT_THROW(comparisonProfile(setup, 1), PreconditionError);
  EXPECT_THROW(verifyBlowupInvariance(setup, 1, 1), PreconditionError);
}

TEST(ChartBasisProperty, GeneratorsLiveOnTheChart) {
  for (const auto& setup : smallSetups(3, 2))
    for (const auto& chart : blowupCharts(setup))
      for (const auto& w : chartBasis(setup, chart.index()))
        EXPECT_TRUE(member(chart.fromBase().apply(w), chart.spec(FormKind::POmega, 1)))
            << setup.toString() << " chart " << chart.index() << ": " << w.toString();
}

TEST(ComparisonProfile, Examples) {
  const auto p = comparisonProfile(BlowupSetup(setOf({0, 1}), ModulusPair({1, 0})), 1);
  EXPECT_EQ(p.i, 1);
  EXPECT_EQ(p.multiplicities, (std::map<int, long>{{0, 1}, {1, 1}}));
  ASSERT_EQ(p.pieces.size(), 1u);
  EXPECT_EQ(p.pieces[0].twist, -1);
  EXPECT_TRUE(p.boundsHold);

  const auto trivial = comparisonProfile(BlowupSetup(setOf({0, 1}), ModulusPair({1, 1, 0})), 1);
  EXPECT_EQ(trivial.complementSize, 0);
  EXPECT_EQ(trivial.multiplicities, (std::map<int, long>{{0, 3}}));
  EXPECT_TRUE(trivial.pieces.empty());
}

TEST(ComparisonProfileProperty, CountsAndBounds) {
  for (const auto& setup : smallSetups(4, 1)) {
    const int centerSize = setup.center().size();
    const int c = (setup.center().minus(setup.support())).size();
    const int i = centerSize - c;
    const int vars = static_cast<int>(setup.vars());
    for (int q = 0; q <= vars; ++q) {
      const auto profile = comparisonProfile(setup, q);
      EXPECT_EQ(profile.i, i);
      EXPECT_EQ(profile.complementSize, c);
      long total = 0;
      for (const auto& [k, count] : profile.multiplicities) {
        EXPECT_EQ(count, choose(c, k) * choose(vars - c, q - k)) << setup.toString();
        total += count;
      }
      EXPECT_EQ(total, choose(vars, q));
      std::map<int, std::vector<int>> twists;
      for (const auto& piece : profile.pieces) {
        EXPECT_GT(piece.k, 0);
        EXPECT_LT(piece.twist, 0);
        EXPECT_GT(piece.twist, -centerSize);
        EXPECT_LE(i + piece.k - 1, centerSize - 1);
        twists[piece.k].push_back(piece.twist);
      }
      for (const auto& [k, list] : twists) {
        std::vector<int> expected;
        for (int j = 0; j < i; ++j) expected.push_back(j + 1 - i - k);
        EXPECT_EQ(list, expected);
      }
      EXPECT_TRUE(profile.boundsHold);
    }
  }
}

TEST(BlowupPullbackProperty, BaseModulusFormsLandInEveryChart) {
  for (const auto& setup : smallSetups(3, 2))
    for (int q = 0; q <= static_cast<int>(setup.vars()); ++q)
      for (const auto& chart : blowupCharts(setup))
        for (const auto& w : basis(FormModuleSpec::mOmega(setup.pair(), q)))
          EXPECT_TRUE(member(chart.fromBase().apply(w), chart.spec(FormKind::MOmega, q)))
              << setup.toString() << " chart " << chart.index() << ": " << w.toString();
}

TEST(BlowupInvariance, Examples) {
  const auto line = verifyBlowupInvariance(BlowupSetup(setOf({0, 1}), ModulusPair({1, 0})), 1, 3);
  EXPECT_TRUE(line.passed) << line.witness.value_or("");
  EXPECT_EQ(line.statement, "blowup-vanishing");

  EXPECT_TRUE(verifyBlowupInvariance(BlowupSetup(setOf({0, 1}), ModulusPair({2, 0})), 0, 3).passed);

  const auto plane = verifyBlowupInvariance(BlowupSetup(setOf({0, 1, 2}), ModulusPair({2, 0, 0})), 2, 1);
  EXPECT_TRUE(plane.passed) << plane.witness.value_or("");
  for (const auto& piece : plane.parameters["profile"]["pieces"]) {
    EXPECT_GT(piece["twist"].get<int>(), -3);
    EXPECT_LT(piece["twist"].get<int>(), 0);
  }
}

TEST(BlowupInvariance, ComplexWithoutAChartIsNotExact) {
  const BlowupSetup setup(setOf({0, 1}), ModulusPair({1, 0}));
  const GradedComplex full = blowupCechComplex(setup, 1);
  GradedTerm oneChart{{full.terms()[1].summands[0]}};
  const GradedComplex partial(setup.vars(), {full.terms()[0], oneChart},
                              {[](std::size_t, const LogForm& w) { return TermElement{w}; }});
  bool sawDefect = false;
  forEachInBox(2, -2, 2, [&](const ExponentVector& d) { sawDefect |= !partial.analyze(d).exact(); });
  EXPECT_TRUE(sawDefect);
}

}  // namespace
}  // namespace modhodge
