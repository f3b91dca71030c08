#include "modhodge/blowup.hpp"

#include "modhodge/cech.hpp"
#include "modhodge/errors.hpp"
#include "modhodge/form_module.hpp"
#include "modhodge/linalg.hpp"

namespace modhodge {

Json CokernelTwistProfile::toJson() const {
  Json mult = Json::object();
  for (const auto& [k, m] : multiplicities) mult[std::to_string(k)] = m;
  Json list = Json::array();
  for (const auto& p : pieces) list.push_back({{"k", p.k}, {"j", p.j}, {"twist", p.twist}});
  return {{"i", i}, {"complementSize", complementSize}, {"multiplicities", mult}, {"pieces", list},
          {"boundsHold", boundsHold}};
}

namespace {

void requireCenterInDivisor(const BlowupSetup& setup) {
  if (!setup.centerInDivisor())
    throw PreconditionError("center of " + setup.toString() + " is not contained in the divisor");
}

std::vector<int> oneBased(IndexSet s) {
  std::vector<int> out;
  for (int k : s.elements()) out.push_back(k + 1);
  return out;
}

}  // namespace

std::vector<LogForm> chartBasis(const BlowupSetup& setup, int j) {
  requireCenterInDivisor(setup);
  if (!setup.center().contains(j)) throw DomainError("chart index must lie in the center");
  const ModulusPair& frame = setup.pair();
  const std::size_t n = setup.vars();
  std::vector<LogForm> out;
  for (int mu = 0; mu < static_cast<int>(n); ++mu) {
    if (setup.support().contains(mu))
      out.push_back(LogForm::dlogVariable(frame, mu));
    else if (setup.complement().contains(mu))
      out.push_back(LogForm::dVariable(frame, mu));
    else
      out.push_back(LogForm::dVariable(frame, mu).times(LaurentPoly::variable(n, j, -1)));
  }
  return out;
}

CokernelTwistProfile comparisonProfile(const BlowupSetup& setup, int q) {
  requireCenterInDivisor(setup);
  const IndexSet twisted = setup.center().minus(setup.support());
  CokernelTwistProfile profile;
  profile.i = (setup.support() & setup.center()).size();
  profile.complementSize = twisted.size();
  for (IndexSet slots : subsetsOfSize(static_cast<int>(setup.vars()), q))
    ++profile.multiplicities[(slots & twisted).size()];
  const int centerSize = setup.center().size();
  for (const auto& [k, count] : profile.multiplicities) {
    if (k == 0) continue;
    for (int j = 0; j < profile.i; ++j) {
      const TwistPiece piece{k, j, j + 1 - profile.i - k};
      if (!(-centerSize < piece.twist && piece.twist < 0)) profile.boundsHold = false;
      profile.pieces.push_back(piece);
    }
  }
  return profile;
}

GradedComplex blowupCechComplex(const BlowupSetup& setup, int q) {
  const std::size_t n = setup.vars();
  const auto charts = blowupCharts(setup);
  const int centerSize = setup.center().size();
  std::vector<int> centerIndex = setup.center().elements();

  // Open sets U_sigma are labelled by subsets of positions in the center.
  std::vector<std::vector<IndexSet>> levels;
  std::vector<GradedTerm> terms;
  terms.push_back({{Summand{"A", asGraded(FormModuleSpec::mOmega(setup.pair(), q)), std::nullopt,
                            std::nullopt}}});
  for (int p = 0; p < centerSize; ++p) {
    GradedTerm term;
    std::vector<IndexSet> level;
    for (IndexSet positions : subsetsOfSize(centerSize, p + 1)) {
      const auto elems = positions.elements();
      const BlowupChart& chart = charts[elems.front()];
      IndexSet inverted;
      std::string label = "U";
      for (int pos : elems) {
        label += std::to_string(centerIndex[pos] + 1);
        if (pos != elems.front()) inverted = inverted.with(centerIndex[pos]);
      }
      term.summands.push_back(
          Summand{label, asGraded(chart.spec(FormKind::MOmega, q, inverted)), chart.toBase(), std::nullopt});
      level.push_back(positions);
    }
    terms.push_back(std::move(term));
    levels.push_back(std::move(level));
  }

  std::vector<GradedMap> maps;
  maps.push_back([count = levels[0].size()](std::size_t, const LogForm& w) {
    return TermElement(count, w);
  });
  for (std::size_t p = 0; p + 1 < levels.size(); ++p) {
    maps.push_back([source = levels[p], target = levels[p + 1]](std::size_t s, const LogForm& w) {
      TermElement out;
      for (IndexSet sigma : target) {
        if (!source[s].subsetOf(sigma)) {
          out.emplace_back(w.frame(), w.degree());
          continue;
        }
        const int added = sigma.minus(source[s]).elements().front();
        out.push_back(sigma.rank(added) % 2 == 0 ? w : -w);
      }
      return out;
    });
  }
  return GradedComplex(n, std::move(terms), std::move(maps));
}

namespace {

void checkTwists(VerificationReport& report, const BlowupSetup& setup, int q) {
  const auto profile = comparisonProfile(setup, q);
  report.parameters["profile"] = profile.toJson();
  const int centerSize = setup.center().size();
  std::map<int, bool> vanishing;
  for (const auto& piece : profile.pieces) {
    if (!(-centerSize < piece.twist && piece.twist < 0)) {
      report.fail("twist " + std::to_string(piece.twist) + " at (k=" + std::to_string(piece.k) +
                  ", j=" + std::to_string(piece.j) + ") violates -|N| < m < 0");
      continue;
    }
    if (!vanishing.contains(piece.twist))
      vanishing[piece.twist] = cohomologyDims(centerSize - 1, piece.twist).allZero();
    if (!vanishing[piece.twist])
      report.fail("O(" + std::to_string(piece.twist) + ") on the exceptional divisor has cohomology");
  }
  report.note(std::to_string(profile.pieces.size()) + " cokernel pieces checked against P^" +
              std::to_string(centerSize - 1) + " cohomology");
}

/// Pullback of the base M-Omega^q basis to each chart, against the chart
/// basis: lower triangular with diagonal y_j^{i+k-1}.
void checkPullback(VerificationReport& report, const BlowupSetup& setup, int q) {
  const int i = (setup.support() & setup.center()).size();
  const IndexSet twisted = setup.center().minus(setup.support());
  const auto n = setup.vars();
  const auto baseBasis = basis(FormModuleSpec::mOmega(setup.pair(), q));
  const auto subsets = subsetsOfSize(static_cast<int>(n), q);
  for (const auto& chart : blowupCharts(setup)) {
    const FormModuleSpec chartSpec = chart.spec(FormKind::MOmega, q);
    const LaurentPoly chartTwist = LaurentPoly::monomial(coefficientTwist(chartSpec)).pow(-1);
    std::vector<std::vector<LaurentPoly>> matrix;
    LaurentPoly diagonal = LaurentPoly::constant(n, 1);
    for (std::size_t row = 0; row < subsets.size(); ++row) {
      const LogForm pulled = chart.fromBase().apply(baseBasis[row]).inFrame(chart.pair());
      if (!member(pulled, chartSpec)) {
        report.fail("pullback of " + baseBasis[row].toString() + " leaves M-Omega on U_" +
                    std::to_string(chart.index() + 1));
        return;
      }
      std::vector<LaurentPoly> entries;
      for (IndexSet slots : subsets) entries.push_back(pulled.coefficient(slots) * chartTwist);
      const int k = (subsets[row] & twisted).size();
      const LaurentPoly& d = entries[row];
      const ExponentVector expected = ExponentVector::unit(n, chart.index()).scaled(i + k - 1);
      if (!d.isMonomial() || d.terms().begin()->first != expected) {
        report.fail("diagonal entry " + d.toString() + " on U_" + std::to_string(chart.index() + 1) +
                    " is not y_j^" + std::to_string(i + k - 1));
        return;
      }
      diagonal = diagonal * d;
      matrix.push_back(std::move(entries));
    }
    if (!(determinant(matrix, n) - diagonal).isZero()) {
      report.fail("comparison on U_" + std::to_string(chart.index() + 1) + " is not triangular");
      return;
    }
  }
}

/// The chart bases generate P-Omega^1 of each chart and differ by units on
/// overlaps.
void checkGluing(VerificationReport& report, const BlowupSetup& setup) {
  const auto charts = blowupCharts(setup);
  const auto n = setup.vars();
  const auto slots = subsetsOfSize(static_cast<int>(n), 1);
  std::vector<std::vector<LogForm>> bases;
  for (const auto& chart : charts) {
    const auto forms = chartBasis(setup, chart.index());
    const FormModuleSpec spec = chart.spec(FormKind::POmega, 1);
    std::vector<std::vector<LaurentPoly>> matrix;
    for (const auto& w : forms) {
      const LogForm pulled = chart.fromBase().apply(w).inFrame(chart.pair());
      std::vector<LaurentPoly> row;
      for (IndexSet s : slots) row.push_back(pulled.coefficient(s));
      matrix.push_back(std::move(row));
      if (!member(pulled, spec)) report.fail(w.toString() + " is not a section of P-Omega^1 on U_" +
                                              std::to_string(chart.index() + 1));
    }
    const LaurentPoly det = determinant(matrix, n);
    if (!det.isMonomial() || !det.terms().begin()->first.isZero())
      report.fail("chart basis on U_" + std::to_string(chart.index() + 1) + " has determinant " + det.toString());
    bases.push_back(forms);
  }
  for (std::size_t a = 0; a < charts.size(); ++a) {
    for (std::size_t b = a + 1; b < charts.size(); ++b) {
      const MonomialRing overlap = charts[a].spec(FormKind::POmega, 1,
                                                  IndexSet().with(charts[b].index())).ring;
      for (std::size_t k = 0; k < n; ++k) {
        const LaurentPoly ca = bases[a][k].fullLog().coefficient(IndexSet().with(static_cast<int>(k)));
        const LaurentPoly cb = bases[b][k].fullLog().coefficient(IndexSet().with(static_cast<int>(k)));
        const LaurentPoly ratio = cb * ca.pow(-1);
        const ExponentVector e = charts[a].fromBase().mapExponent(ratio.terms().begin()->first);
        if (!overlap.admits(e) || !overlap.admits(-e))
          report.fail("generators " + std::to_string(k + 1) + " of U_" + std::to_string(charts[a].index() + 1) +
                      " and U_" + std::to_string(charts[b].index() + 1) + " differ by a non-unit");
      }
    }
  }
}

}  // namespace

VerificationReport verifyBlowupInvariance(const BlowupSetup& setup, int q, int window) {
  requireCenterInDivisor(setup);
  VerificationReport report;
  report.statement = "blowup-vanishing";
  report.parameters = {{"n", setup.vars()},
                       {"N", oneBased(setup.center())},
                       {"r", setup.pair().modulusExp().entries()},
                       {"q", q}};
  report.window = window;
  checkTwists(report, setup, q);
  checkPullback(report, setup, q);
  checkGluing(report, setup);
  if (!report.passed) return report;

  const GradedComplex complex = blowupCechComplex(setup, q);
  std::size_t degrees = 0;
  forEachInBox(setup.vars(), -window, window, [&](const ExponentVector& d) {
    if (!report.passed) return;
    ++degrees;
    const auto analysis = complex.analyze(d);
    if (!analysis.exact()) report.fail("augmented Čech complex: " + analysis.witness);
  });
  report.note(std::to_string(degrees) + " multidegrees of the Čech complex inspected");
  return report;
}

}  // namespace modhodge
