#include "modhodge/dvr.hpp"

#include "modhodge/errors.hpp"
#include "modhodge/form_module.hpp"
#include "modhodge/graded.hpp"
#include "modhodge/modulus.hpp"
#include "modhodge/substitution.hpp"

namespace modhodge {

void DvrModel::validate() const {
  if (e < 1) throw DomainError("ramification index must be positive");
  if (n < 1) throw DomainError("modulus valuation must be positive");
  if (ambientRank < 1) throw DomainError("ambient rank must be positive");
  if (q < 0 || q > ambientRank) throw DomainError("form degree out of range");
}

bool ArithmeticProgression::contains(long v) const {
  return v >= start && (v - start) % step == 0;
}

std::vector<long> ArithmeticProgression::within(long lo, long hi) const {
  std::vector<long> out;
  for (long v = lo; v <= hi; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

ValuationImages moValuationImages(const DvrModel& m) {
  m.validate();
  const long en = static_cast<long>(m.e) * m.n;
  return {{m.e - en, m.e}, {1 - en, 1}};
}

VerificationReport cartesianCheck(const DvrModel& m, const ValuationWindow& w) {
  m.validate();
  const long en = static_cast<long>(m.e) * m.n;
  if (w.lo > w.hi) throw PreconditionError("empty valuation window");
  if (w.lo > -en || w.hi < en) throw PreconditionError("window must cover [-en, en]");
  VerificationReport report;
  report.statement = "dvr-cartesian";
  report.parameters = {{"e", m.e}, {"n", m.n}};
  report.window = Json::array({w.lo, w.hi});

  const auto images = moValuationImages(m);
  const ModulusPair base(ExponentVector{m.n});
  const ModulusPair cover(ExponentVector{static_cast<int>(en)});
  long inBase = 0;
  for (long v = w.lo; v <= w.hi; ++v) {
    const bool coverMember = moMember(LaurentPoly::variable(1, 0, static_cast<int>(v)), cover);
    const bool divisible = v % m.e == 0;
    const bool baseMember =
        divisible && moMember(LaurentPoly::variable(1, 0, static_cast<int>(v / m.e)), base);
    inBase += baseMember;
    if (coverMember != images.cover.contains(v))
      report.fail("cover image disagrees with the closed form at valuation " + std::to_string(v));
    if (baseMember != images.base.contains(v))
      report.fail("base image disagrees with the closed form at valuation " + std::to_string(v));
    if ((coverMember && divisible) != baseMember)
      report.fail("square is not Cartesian at valuation " + std::to_string(v));
  }
  report.note(std::to_string(inBase) + " base valuations in the window");
  return report;
}

namespace {

/// Roles: the uniformiser is polynomial, unit coordinates are inverted.
MonomialRing dvrRing(int rank) {
  return MonomialRing::polynomial(static_cast<std::size_t>(rank)).localizedAt(IndexSet::range(rank).without(0));
}

ModulusPair dvrPair(int rank, int valuation) {
  ExponentVector r(static_cast<std::size_t>(rank));
  r[0] = valuation;
  return ModulusPair(r);
}

/// x -> pi^e, t_k -> t_k.
MonomialSubstitution kummer(int rank, int e) {
  std::vector<ExponentVector> rows;
  for (int k = 0; k < rank; ++k) rows.push_back(ExponentVector::unit(rank, k).scaled(k == 0 ? e : 1));
  return MonomialSubstitution(rank, std::move(rows));
}

}  // namespace

VerificationReport kummerFormCartesian(const DvrModel& m, int window) {
  m.validate();
  if (window < 1) throw PreconditionError("degree window must be positive");
  VerificationReport report;
  report.statement = "kummer-cartesian";
  report.parameters = {{"e", m.e}, {"n", m.n}, {"q", m.q}, {"ambientRank", m.ambientRank}};
  report.window = window;

  const int rank = m.ambientRank;
  const auto size = static_cast<std::size_t>(rank);
  const MonomialRing ring = dvrRing(rank);
  const ModulusPair basePair = dvrPair(rank, m.n);
  const ModulusPair coverPair = dvrPair(rank, m.e * m.n);
  const MonomialSubstitution toCover = kummer(rank, m.e);

  // d(pi^e) = e pi^{e-1} d(pi).
  const LogForm dx = toCover.apply(LogForm::dVariable(ModulusPair::empty(size), 0));
  const LogForm expected =
      LogForm::dVariable(ModulusPair::empty(size), 0).times(LaurentPoly::variable(size, 0, m.e - 1)).scaled(m.e);
  if (!(dx - expected).isZero()) report.fail("pullback of dx is " + dx.toString());

  const FormModuleSpec coverM{FormKind::MOmega, coverPair, m.q, ring};
  const FormModuleSpec baseM{FormKind::MOmega, basePair, m.q, ring};
  const FormModuleSpec baseP{FormKind::POmega, basePair, m.q, ring};
  const FormModuleSpec baseK{FormKind::POmega, basePair, m.q, MonomialRing::laurent(size)};

  std::vector<LogForm> enlarged;
  const LaurentPoly prefactor = LaurentPoly::variable(size, 0, 2 - m.e - m.e * m.n);
  for (const auto& g : basis(baseP)) enlarged.push_back(toCover.apply(g).times(prefactor));

  const Summand cover{"M(L)", asGraded(coverM), std::nullopt, std::nullopt};
  const Summand bound{"pi^{1-e} MO(L) P(K)", GradedSubmodule(ring, ModulusPair::reduced(size), m.q, enlarged),
                      std::nullopt, std::nullopt};
  const Summand base{"M(K)", asGraded(baseM), toCover, std::nullopt};
  const Summand fraction{"Omega(K)", asGraded(baseK), toCover, std::nullopt};

  std::size_t degrees = 0;
  long baseDims = 0;
  const int unitWindow = rank > 1 ? 1 : 0;
  forEachInBox(size, -unitWindow, unitWindow, [&](const ExponentVector& unitPart) {
    for (int v = -window; v <= window && report.passed; ++v) {
      ExponentVector d = unitPart;
      d[0] = v;
      ++degrees;
      const auto c = cover.piece(d);
      const auto b = bound.piece(d);
      for (const auto& w : c)
        if (!inSpan(b, w)) report.fail("(i) fails for " + w.toString());
      const auto k = fraction.piece(d);
      const auto x = base.piece(d);
      std::vector<LogForm> both(c);
      both.insert(both.end(), k.begin(), k.end());
      const long intersection = static_cast<long>(spanRank(c)) + static_cast<long>(spanRank(k)) -
                                static_cast<long>(spanRank(both));
      for (const auto& w : x)
        if (!inSpan(c, w) || !inSpan(k, w)) report.fail("(ii) base form " + w.toString() + " escapes");
      const long dimBase = static_cast<long>(spanRank(x));
      baseDims += dimBase;
      if (dimBase != intersection)
        report.fail("(ii) intersection has dimension " + std::to_string(intersection) + " but the base has " +
                    std::to_string(dimBase) + " at degree " + d.toString());
    }
  });
  report.note(std::to_string(degrees) + " degrees, total base dimension " + std::to_string(baseDims));
  return report;
}

}  // namespace modhodge
