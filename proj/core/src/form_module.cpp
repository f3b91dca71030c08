#include "modhodge/form_module.hpp"

#include <algorithm>
#include <functional>

#include "modhodge/errors.hpp"

namespace modhodge {

const char* toString(FormKind kind) {
  switch (kind) {
    case FormKind::POmega:
      return "P-Omega";
    case FormKind::MOmega:
      return "M-Omega";
    case FormKind::OmegaAmbient:
      return "Omega-ambient";
  }
  return "?";
}

FormModuleSpec FormModuleSpec::pOmega(const ModulusPair& pair, int q) {
  return {FormKind::POmega, pair, q, MonomialRing::polynomial(pair.vars())};
}

FormModuleSpec FormModuleSpec::mOmega(const ModulusPair& pair, int q) {
  return {FormKind::MOmega, pair, q, MonomialRing::polynomial(pair.vars())};
}

FormModuleSpec FormModuleSpec::ambient(const ModulusPair& pair, int q) {
  return {FormKind::OmegaAmbient, pair, q, MonomialRing::polynomial(pair.vars())};
}

FormModuleSpec FormModuleSpec::localizedAt(IndexSet vars) const {
  FormModuleSpec out(*this);
  out.ring = ring.localizedAt(vars);
  return out;
}

FormModuleSpec FormModuleSpec::withKind(FormKind k) const {
  FormModuleSpec out(*this);
  out.kind = k;
  return out;
}

ExponentVector coefficientTwist(const FormModuleSpec& spec) {
  if (spec.kind == FormKind::MOmega) return moRing(spec.pair).generator.generatorExponent;
  return ExponentVector(spec.pair.vars());
}

std::vector<LogForm> basis(const FormModuleSpec& spec) {
  if (spec.kind == FormKind::OmegaAmbient)
    throw DomainError("the ambient module is not free over the base ring");
  const auto n = static_cast<int>(spec.pair.vars());
  const LaurentPoly c = LaurentPoly::monomial(coefficientTwist(spec));
  std::vector<LogForm> out;
  for (IndexSet slots : subsetsOfSize(n, spec.degree))
    out.push_back(LogForm::basisElement(spec.pair, slots, c));
  return out;
}

namespace {

void requireMatching(const LogForm& w, const FormModuleSpec& spec) {
  if (w.nvars() != spec.pair.vars()) throw DimensionError("form and module differ in variables");
  if (w.degree() != spec.degree) throw DimensionError("form and module differ in degree");
  if (spec.ring.nvars() != spec.pair.vars()) throw DimensionError("ring and pair differ in variables");
}

}  // namespace

bool member(const LogForm& w, const FormModuleSpec& spec) {
  requireMatching(w, spec);
  const LogForm framed = w.inFrame(spec.pair);
  const ExponentVector twist = coefficientTwist(spec);
  bool inside = true;
  for (const auto& [slots, c] : framed.coefficients()) {
    for (const auto& [e, value] : c.terms()) {
      for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k] < 0 && spec.ring.role(k) == VarRole::Polynomial && !spec.pair.inSupport(k))
          throw NotAmbientError("coefficient " + c.toString() + " has a pole along x" +
                                std::to_string(k + 1) + " outside the modulus support");
      if (spec.kind != FormKind::OmegaAmbient && !spec.ring.admits(e - twist)) inside = false;
    }
  }
  return inside;
}

bool memberByHeightOne(const LogForm& w, const FormModuleSpec& spec) {
  const auto n = spec.pair.vars();
  for (std::size_t j = 0; j < n; ++j) {
    FormModuleSpec local = spec;
    local.ring = spec.ring.localizedAt(IndexSet::range(static_cast<int>(n)).without(static_cast<int>(j)));
    if (!member(w, local)) return false;
  }
  return true;
}

GradedSubmodule asGraded(const FormModuleSpec& spec) {
  return GradedSubmodule(spec.ring, spec.pair, spec.degree, basis(spec));
}

std::vector<LogForm> definitionalSpan(const FormModuleSpec& spec, const ExponentVector& d) {
  const auto n = spec.pair.vars();
  if (spec.kind == FormKind::OmegaAmbient) throw DomainError("no generator description for Omega");
  if (spec.kind == FormKind::MOmega) {
    const ExponentVector twist = coefficientTwist(spec);
    const auto inner = definitionalSpan(spec.withKind(FormKind::POmega), d - twist);
    std::vector<LogForm> out;
    for (const auto& f : inner) out.push_back(f.times(LaurentPoly::monomial(twist)));
    return out;
  }

  const int q = spec.degree;
  // Units of R[1/f] inside R up to scalars are monomials in the support
  // and inverted variables.
  IndexSet logVars = spec.pair.support();
  for (std::size_t j = 0; j < n; ++j)
    if (spec.ring.role(j) == VarRole::Laurent) logVars = logVars.with(static_cast<int>(j));

  // Exponent box for arguments of d(): ring elements with entries bounded
  // by the target degree.
  std::vector<int> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    switch (spec.ring.role(j)) {
      case VarRole::Polynomial:
        lo[j] = 0;
        hi[j] = std::max(0, d[j]);
        break;
      case VarRole::Pinned:
        lo[j] = hi[j] = 0;
        break;
      case VarRole::Laurent:
        lo[j] = std::min(0, d[j]) - 1;
        hi[j] = std::max(0, d[j]) + 1;
        break;
    }
  }
  std::vector<ExponentVector> dArguments;
  std::function<void(std::size_t, ExponentVector&)> fill = [&](std::size_t j, ExponentVector& e) {
    if (j == n) {
      if (!e.isZero()) dArguments.push_back(e);
      return;
    }
    for (int v = lo[j]; v <= hi[j]; ++v) {
      e[j] = v;
      fill(j + 1, e);
    }
    e[j] = 0;
  };
  ExponentVector scratch(n);
  fill(0, scratch);

  const ModulusPair& frame = spec.pair;
  std::vector<LogForm> out;
  for (int k = 0; k <= q; ++k) {
    for (IndexSet logs : subsetsOfSize(static_cast<int>(n), k)) {
      if (!logs.subsetOf(logVars)) continue;
      LogForm logPart = LogForm::scalar(frame, LaurentPoly::constant(n, 1));
      for (int j : logs.elements()) logPart = wedge(logPart, LogForm::dlogVariable(frame, j));
      // Nondecreasing index sequences choose a multiset of d() arguments.
      const int m = q - k;
      std::vector<std::size_t> pick(m, 0);
      std::function<void(int, std::size_t, const LogForm&, const ExponentVector&)> choose =
          [&](int slot, std::size_t from, const LogForm& acc, const ExponentVector& used) {
            if (slot == m) {
              const ExponentVector a = d - used;
              if (!spec.ring.admits(a)) return;
              const LogForm g = acc.times(LaurentPoly::monomial(a));
              if (!g.isZero()) out.push_back(g);
              return;
            }
            for (std::size_t i = from; i < dArguments.size(); ++i) {
              const LogForm next =
                  wedge(acc, differential(LaurentPoly::monomial(dArguments[i]), frame));
              if (next.isZero()) continue;
              choose(slot + 1, i + 1, next, used + dArguments[i]);
            }
          };
      choose(0, 0, logPart, ExponentVector(n));
    }
  }
  return out;
}

VerificationReport exteriorPowerIso(const ModulusPair& pair, int q) {
  VerificationReport report;
  report.statement = "exterior-power-iso";
  report.parameters = {{"n", pair.vars()}, {"r", pair.modulusExp().entries()}, {"q", q}};
  const auto n = static_cast<int>(pair.vars());
  const auto ones = basis(FormModuleSpec::pOmega(pair, 1));
  const auto target = basis(FormModuleSpec::pOmega(pair, q));
  std::vector<bool> hit(target.size(), false);
  std::size_t matched = 0;
  for (IndexSet subset : subsetsOfSize(n, q)) {
    LogForm w = LogForm::scalar(pair, LaurentPoly::constant(pair.vars(), 1));
    for (int j : subset.elements()) w = wedge(w, ones[j]);
    bool found = false;
    for (std::size_t t = 0; t < target.size(); ++t) {
      if (w == target[t] || w == -target[t]) {
        if (hit[t]) report.fail("two wedges hit generator " + target[t].toString());
        hit[t] = true;
        found = true;
        ++matched;
        break;
      }
    }
    if (!found) report.fail("wedge " + w.toString() + " is not a signed generator");
  }
  if (matched != target.size()) report.fail("generators were not all reached");
  if (static_cast<long>(target.size()) != binomial(n, q)) report.fail("rank differs from C(n,q)");
  report.note(std::to_string(matched) + " of " + std::to_string(target.size()) + " generators matched");
  return report;
}

int minimalFormMultiple(const LogForm& w, const ModulusPair& pair) {
  const auto spec = [&](int m) { return FormModuleSpec::mOmega(pair.scaled(m), w.degree()); };
  // Ambient check (throws NotAmbientError off the support) and a bound.
  member(w, FormModuleSpec::ambient(pair, w.degree()));
  int bound = 1;
  const LogForm framed = w.inFrame(pair);
  for (const auto& [slots, c] : framed.coefficients())
    for (const auto& [e, value] : c.terms())
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (!pair.inSupport(j) || e[j] >= 1) continue;
        const int r = pair.modulusExp()[j];
        bound = std::max(bound, (1 - e[j] + r - 1) / r);
      }
  for (int m = 1; m <= bound; ++m)
    if (member(w, spec(m))) return m;
  throw std::logic_error("form did not enter the filtration at the predicted multiple");
}

}  // namespace modhodge
