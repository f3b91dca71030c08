#include "modhodge/kunneth.hpp"

#include <map>
#include <set>

#include "modhodge/form_module.hpp"
#include "modhodge/substitution.hpp"

namespace modhodge {

GradedRankVector formRanks(const ModulusPair& pair) {
  GradedRankVector out;
  const int n = static_cast<int>(pair.vars());
  for (int q = 0; q <= n; ++q)
    out.ranks[q] = static_cast<long>(basis(FormModuleSpec::mOmega(pair, q)).size());
  return out;
}

namespace {

void checkKind(VerificationReport& report, const ModulusPair& a, const ModulusPair& b, int qMax, FormKind kind) {
  const ModulusPair target = tensorPair(a, b);
  const int m = static_cast<int>(a.vars());
  const int n = static_cast<int>(b.vars());
  const auto total = static_cast<std::size_t>(m + n);
  const auto left = MonomialSubstitution::blockInclusion(a.vars(), 0, total);
  const auto right = MonomialSubstitution::blockInclusion(b.vars(), a.vars(), total);
  const std::string label = toString(kind);

  // Lifted bases by degree, so each pairing only wedges.
  auto lifted = [&](const ModulusPair& pair, const MonomialSubstitution& include, int degrees) {
    std::vector<std::vector<LogForm>> out;
    for (int s = 0; s <= degrees; ++s) {
      out.emplace_back();
      for (const auto& w : basis(FormModuleSpec{kind, pair, s, MonomialRing::polynomial(pair.vars())}))
        out.back().push_back(include.apply(w).inFrame(target));
    }
    return out;
  };
  const auto leftBasis = lifted(a, left, m);
  const auto rightBasis = lifted(b, right, n);

  for (int q = 0; q <= qMax; ++q) {
    const auto targetBasis = basis(FormModuleSpec{kind, target, q, MonomialRing::polynomial(total)});
    std::map<IndexSet, std::size_t> bySlots;
    for (std::size_t k = 0; k < targetBasis.size(); ++k)
      bySlots[targetBasis[k].coefficients().begin()->first] = k;
    long vandermonde = 0;
    std::set<std::size_t> hit;
    for (int s = 0; s <= q; ++s) {
      const int t = q - s;
      vandermonde += binomial(m, s) * binomial(n, t);
      if (s > m || t > n) continue;
      for (const auto& la : leftBasis[s]) {
        for (const auto& rb : rightBasis[t]) {
          const LogForm image = wedge(la, rb);
          if (!(wedge(rb, la) - image.scaled((s * t) % 2 == 0 ? 1 : -1)).isZero())
            report.fail(label + ": Koszul sign fails for " + la.toString() + " and " + rb.toString());
          // A signed basis element has a single term e_T with the same
          // coefficient up to sign as the target generator on T.
          bool found = false;
          if (image.coefficients().size() == 1) {
            const auto& [slots, c] = *image.coefficients().begin();
            const auto it = bySlots.find(slots);
            if (it != bySlots.end()) {
              const LaurentPoly& expected = targetBasis[it->second].coefficients().begin()->second;
              if (c == expected || c == -expected) {
                found = true;
                if (!hit.insert(it->second).second)
                  report.fail(label + ": two basis pairs hit " + targetBasis[it->second].toString());
              }
            }
          }
          if (!found)
            report.fail(label + ": " + la.toString() + " ∧ " + rb.toString() + " is not a target basis element");
        }
      }
    }
    if (vandermonde != binomial(m + n, q))
      report.fail("rank identity fails at q = " + std::to_string(q));
    if (hit.size() != targetBasis.size())
      report.fail(label + ": target basis not covered at q = " + std::to_string(q));
  }
}

}  // namespace

VerificationReport kunnethCheck(const ModulusPair& a, const ModulusPair& b, int qMax) {
  VerificationReport report;
  report.statement = "kunneth";
  report.parameters = {{"a", a.modulusExp().entries()}, {"b", b.modulusExp().entries()}, {"qMax", qMax}};

  const ModulusPair target = tensorPair(a, b);
  const auto ga = moRing(a).generator.generatorExponent;
  const auto gb = moRing(b).generator.generatorExponent;
  const auto gt = moRing(target).generator.generatorExponent;
  if (ga.concat(gb) != gt) report.fail("MO twists do not multiply: " + gt.toString());
  const auto product = LaurentPoly::monomial(ga).embedded(0, target.vars()) *
                       LaurentPoly::monomial(gb).embedded(a.vars(), target.vars());
  if (!(product - LaurentPoly::monomial(gt)).isZero()) report.fail("MO generator product differs");

  checkKind(report, a, b, qMax, FormKind::POmega);
  checkKind(report, a, b, qMax, FormKind::MOmega);
  return report;
}

}  // namespace modhodge
