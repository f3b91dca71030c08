#include <gtest/gtest.h>

#include "modhodge/errors.hpp"
#include "modhodge/form_module.hpp"
#include "modhodge/graded.hpp"
#include "support.hpp"

namespace modhodge {
namespace {

const ModulusPair kPair({2, 0});

LaurentPoly var(std::size_t j, int p = 1) { return LaurentPoly::variable(2, j, p); }

TEST(Basis, Examples) {
  const auto p = basis(FormModuleSpec::pOmega(kPair, 1));
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0], LogForm::dlogVariable(kPair, 0));
  EXPECT_EQ(p[1], LogForm::dVariable(kPair, 1));

  const auto m = basis(FormModuleSpec::mOmega(kPair, 1));
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0], LogForm::dlogVariable(kPair, 0).times(var(0, -1)));
  EXPECT_EQ(m[1], LogForm::dVariable(kPair, 1).times(var(0, -1)));

  EXPECT_EQ(basis(FormModuleSpec::pOmega(ModulusPair({1, 1, 1}), 2)).size(), 3u);
  EXPECT_TRUE(basis(FormModuleSpec::pOmega(kPair, 3)).empty());
  EXPECT_THROW(basis(FormModuleSpec::ambient(kPair, 1)), DomainError);
}

TEST(Member, Examples) {
  EXPECT_TRUE(member(LogForm::dlogVariable(kPair, 0), FormModuleSpec::pOmega(kPair, 1)));
  const LogForm w = LogForm::dVariable(kPair, 1).times(var(0, -1));
  EXPECT_FALSE(member(w, FormModuleSpec::pOmega(kPair, 1)));
  EXPECT_TRUE(member(w, FormModuleSpec::mOmega(kPair, 1)));
}

TEST(Member, PoleOffSupportIsAnError) {
  const LogForm w = LogForm::dVariable(kPair, 0).times(var(1, -1));
  EXPECT_THROW(member(w, FormModuleSpec::pOmega(kPair, 1)), NotAmbientError);
  EXPECT_THROW(member(w, FormModuleSpec::ambient(kPair, 1)), NotAmbientError);
}

TEST(ExteriorPowerIso, Examples) {
  EXPECT_TRUE(exteriorPowerIso(kPair, 2).passed);
  EXPECT_TRUE(exteriorPowerIso(kPair, 0).passed);
  const auto report = exteriorPowerIso(ModulusPair({1, 1, 0}), 2);
  EXPECT_TRUE(report.passed);
  EXPECT_EQ(report.details.front(), "3 of 3 generators matched");
}

TEST(Basis, RanksAreBinomial) {
  for (std::size_t n = 1; n <= 4; ++n)
    forEachInBox(n, 0, 2, [n](const ExponentVector& r) {
      const ModulusPair pair(r);
      for (int q = 0; q <= static_cast<int>(n); ++q) {
        EXPECT_EQ(static_cast<long>(basis(FormModuleSpec::pOmega(pair, q)).size()), binomial(static_cast<int>(n), q));
        EXPECT_EQ(static_cast<long>(basis(FormModuleSpec::mOmega(pair, q)).size()), binomial(static_cast<int>(n), q));
      }
    });
}

/// Membership from the generator description: every multihomogeneous part
/// of w lies in the span of R-multiples of wedges of dlog and d(monomial).
bool memberByDefinition(const LogForm& w, const FormModuleSpec& spec) {
  for (const auto& [degree, part] : w.homogeneousParts())
    if (!inSpan(definitionalSpan(spec, degree), part.fullLog())) return false;
  return true;
}

TEST(MemberProperty, AgreesWithGeneratorDescription) {
  testing::Gen gen(41);
  for (int k = 0; k < 150; ++k) {
    const ModulusPair pair = gen.pair(gen.integer(1, 3), 3);
    const int q = gen.integer(0, static_cast<int>(pair.vars()));
    const LogForm w = gen.form(pair, q, 2, 3);
    for (auto spec : {FormModuleSpec::pOmega(pair, q), FormModuleSpec::mOmega(pair, q)})
      EXPECT_EQ(member(w, spec), memberByDefinition(w, spec)) << w.toString() << " in " << toString(spec.kind);
  }
}

TEST(MemberProperty, AgreesWithHeightOneLocalizations) {
  testing::Gen gen(42);
  for (int k = 0; k < 300; ++k) {
    const ModulusPair pair = gen.pair(gen.integer(1, 4), 3);
    const int q = gen.integer(0, static_cast<int>(pair.vars()));
    const LogForm w = gen.form(pair, q, 3, 4);
    for (auto spec : {FormModuleSpec::pOmega(pair, q), FormModuleSpec::mOmega(pair, q)})
      EXPECT_EQ(member(w, spec), memberByHeightOne(w, spec));
  }
}

TEST(MemberProperty, MOmegaIsMOTimesPOmega) {
  testing::Gen gen(43);
  for (int k = 0; k < 300; ++k) {
    const ModulusPair pair = gen.pair(gen.integer(1, 3), 3);
    const int q = gen.integer(0, static_cast<int>(pair.vars()));
    const LogForm w = gen.form(pair, q, 3, 4);
    bool coefficientsInMO = true;
    const LogForm framed = w.inFrame(pair);
    for (const auto& [slots, c] : framed.coefficients()) coefficientsInMO &= moMember(c, pair);
    EXPECT_EQ(member(w, FormModuleSpec::mOmega(pair, q)), coefficientsInMO);
  }
}

TEST(MemberProperty, FiltrationIsMonotoneAndExhaustive) {
  testing::Gen gen(44);
  for (int k = 0; k < 200; ++k) {
    ModulusPair pair = gen.pair(gen.integer(1, 3), 3);
    if (pair.support().empty()) continue;
    const int q = gen.integer(0, static_cast<int>(pair.vars()));
    const LogForm w = gen.form(pair, q, 3, 7);
    if (w.isZero()) continue;
    if (member(w, FormModuleSpec::mOmega(pair, q))) {
      EXPECT_TRUE(member(w, FormModuleSpec::mOmega(pair.thickened(), q)));
    }
    const int m = minimalFormMultiple(w, pair);
    EXPECT_TRUE(member(w, FormModuleSpec::mOmega(pair.scaled(m), q)));
    if (m > 1) {
      EXPECT_FALSE(member(w, FormModuleSpec::mOmega(pair.scaled(m - 1), q)));
    }
  }
}

TEST(MemberProperty, LocalizationReplacesDxByXDlogX) {
  for (std::size_t n = 1; n <= 3; ++n)
    forEachInBox(n, 0, 1, [n](const ExponentVector& r) {
      const ModulusPair pair(r);
      for (IndexSet g : allSubsets(static_cast<int>(n))) {
        for (int q = 0; q <= static_cast<int>(n); ++q) {
          const auto local = FormModuleSpec::pOmega(pair, q).localizedAt(g);
          // Expected generators: dx_j -> x_j dlog x_j for j in g \ S, a unit
          // multiple, so they generate the same module as dlog x_j.
          for (IndexSet slots : subsetsOfSize(static_cast<int>(n), q)) {
            LogForm w = LogForm::basisElement(pair, slots);
            EXPECT_TRUE(member(w, local));
            LaurentPoly unit = LaurentPoly::constant(n, 1);
            for (int j : slots.elements())
              if (g.contains(j) && !pair.inSupport(j)) unit = unit * LaurentPoly::variable(n, j, -1);
            EXPECT_TRUE(member(w.times(unit), local));
            const bool needsInverse = !unit.terms().begin()->first.isZero();
            if (needsInverse) {
              EXPECT_THROW(member(w.times(unit), FormModuleSpec::pOmega(pair, q)), NotAmbientError);
            } else {
              EXPECT_TRUE(member(w.times(unit), FormModuleSpec::pOmega(pair, q)));
            }
          }
        }
      }
    });
}

TEST(FormModule, MinimalMultipleRejectsPolesOffSupport) {
  const LogForm w = LogForm::dVariable(kPair, 0).times(var(1, -1));
  EXPECT_THROW(minimalFormMultiple(w, kPair), NotAmbientError);
}

}  // namespace
}  // namespace modhodge
