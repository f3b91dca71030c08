#include "modhodge/divisor_sequences.hpp"

#include "modhodge/errors.hpp"
#include "modhodge/form_module.hpp"

namespace modhodge {

namespace {

ModulusPair withLogAt(const ModulusPair& frame, std::size_t j0) {
  if (frame.inSupport(j0)) return frame;
  ExponentVector r = frame.modulusExp();
  r[j0] = 1;
  return ModulusPair(r);
}

}  // namespace

LogForm reduceModVariable(const LogForm& w, std::size_t j0) {
  const ModulusPair frame = withLogAt(w.frame(), j0);
  const LogForm framed = w.inFrame(frame);
  LogForm out(frame, w.degree());
  for (const auto& [slots, c] : framed.coefficients())
    for (const auto& [e, value] : c.terms())
      if (e[j0] <= 0) out.addTerm(slots, LaurentPoly::monomial(e, value));
  return out;
}

LogForm residue(const LogForm& w, std::size_t j0) {
  if (j0 >= w.nvars()) throw DomainError("residue index out of range");
  const ModulusPair frame = withLogAt(w.frame(), j0);
  const LogForm framed = w.inFrame(frame);
  const int slot = static_cast<int>(j0);
  LogForm out(frame, std::max(w.degree() - 1, 0));
  if (w.degree() == 0) return out;
  for (const auto& [slots, c] : framed.coefficients()) {
    if (!slots.contains(slot)) continue;
    const bool negative = slots.rank(slot) % 2 == 1;
    for (const auto& [e, value] : c.terms()) {
      if (e[j0] < 0)
        throw MembershipError("coefficient " + c.toString() + " has a pole along x" +
                              std::to_string(j0 + 1));
      if (e[j0] > 0) continue;
      out.addTerm(slots.without(slot), LaurentPoly::monomial(e, negative ? -value : value));
    }
  }
  return out;
}

GradedComplex divisorComplex(const ModulusPair& pair, std::size_t j0, int q, bool modulusVersion) {
  if (j0 >= pair.vars() || !pair.inSupport(j0))
    throw DomainError("x" + std::to_string(j0 + 1) + " is not a component of the modulus");
  const auto n = pair.vars();
  const ModulusPair smaller = pair.reducedAt(j0);
  const FormKind kind = modulusVersion ? FormKind::MOmega : FormKind::POmega;
  const auto spec = [&](const ModulusPair& p, int degree) {
    return FormModuleSpec{kind, p, degree, MonomialRing::polynomial(n)};
  };
  const ModulusPair common = ModulusPair::reduced(n);

  GradedTerm source{{Summand{"smaller", asGraded(spec(smaller, q)), std::nullopt, std::nullopt}}};
  GradedTerm middle{{Summand{"full", asGraded(spec(pair, q)), std::nullopt, std::nullopt}}};
  const GradedMap inclusion = [](std::size_t, const LogForm& w) { return TermElement{w}; };

  const MonomialRing quotientRing = MonomialRing::polynomial(n).pinnedAt(j0);
  if (pair.modulusExp()[j0] > 1 && !modulusVersion) {
    // Sequence 1 is an equality: the inclusion alone must be bijective.
    return GradedComplex(n, {source, middle}, {inclusion});
  }
  if (pair.modulusExp()[j0] > 1) {
    // Target P-Omega^q(r) / x_j0, reached through multiplication by x^{r - 1_S}.
    const ExponentVector untwist = pair.modulusExp() - pair.supportIndicator();
    GradedSubmodule target(quotientRing, pair, q, basis(FormModuleSpec::pOmega(pair, q)));
    GradedTerm quotient{{Summand{"restricted", std::move(target), std::nullopt, untwist}}};
    const GradedMap project = [untwist, j0, common](std::size_t, const LogForm& w) {
      return TermElement{reduceModVariable(w.times(LaurentPoly::monomial(untwist)), j0).inFrame(common)};
    };
    return GradedComplex(n, {source, middle, quotient}, {inclusion, project});
  }

  // r_j0 = 1: residue onto forms of degree q-1 on D0 with the restricted
  // log structure, twisted by MO in the M-Omega case.
  std::vector<LogForm> generators;
  if (q >= 1) {
    const ExponentVector twist =
        modulusVersion ? moRing(pair).generator.generatorExponent : ExponentVector(n);
    const IndexSet others = IndexSet::range(static_cast<int>(n)).without(static_cast<int>(j0));
    for (IndexSet slots : subsetsOfSize(static_cast<int>(n), q - 1))
      if (slots.subsetOf(others))
        generators.push_back(LogForm::basisElement(pair, slots, LaurentPoly::monomial(twist)));
  }
  GradedSubmodule target(quotientRing, pair, std::max(q - 1, 0), std::move(generators));
  GradedTerm divisorTerm{{Summand{"divisor", std::move(target), std::nullopt, std::nullopt}}};
  const GradedMap res = [j0, common](std::size_t, const LogForm& w) {
    return TermElement{residue(w, j0).inFrame(common)};
  };
  return GradedComplex(n, {source, middle, divisorTerm}, {inclusion, res});
}

VerificationReport divisorReductionSES(const ModulusPair& pair, std::size_t j0, int q, int window) {
  if (j0 >= pair.vars() || !pair.inSupport(j0))
    throw DomainError("x" + std::to_string(j0 + 1) + " is not a component of the modulus");
  VerificationReport report;
  report.statement = "divisor-reduction";
  const bool thick = pair.modulusExp()[j0] > 1;
  report.parameters = {{"n", pair.vars()},
                       {"r", pair.modulusExp().entries()},
                       {"j0", j0 + 1},
                       {"q", q},
                       {"sequences", thick ? std::vector<int>{1, 3} : std::vector<int>{2, 4}}};
  report.window = window;
  const auto n = pair.vars();

  const GradedComplex pComplex = divisorComplex(pair, j0, q, false);
  const GradedComplex mComplex = divisorComplex(pair, j0, q, true);

  std::size_t degrees = 0;
  forEachInBox(n, -window, window, [&](const ExponentVector& d) {
    if (!report.passed) return;
    ++degrees;
    const auto p = pComplex.analyze(d);
    if (!p.exact()) {
      report.fail(std::string(thick ? "sequence 1" : "sequence 2") + ": " + p.witness);
      return;
    }
    const auto m = mComplex.analyze(d);
    if (!m.exact()) report.fail(std::string(thick ? "sequence 3" : "sequence 4") + ": " + m.witness);
  });
  report.note(std::to_string(degrees) + " multidegrees inspected");
  return report;
}

}  // namespace modhodge
