#include "commands.hpp"

#include <fmt/format.h>

#include <sstream>

#include "modhodge/atlas.hpp"
#include "modhodge/blowup.hpp"
#include "modhodge/cech.hpp"
#include "modhodge/cube.hpp"
#include "modhodge/divisor_sequences.hpp"
#include "modhodge/dvr.hpp"
#include "modhodge/errors.hpp"
#include "modhodge/form_module.hpp"
#include "modhodge/kunneth.hpp"
#include "modhodge/suites.hpp"

namespace modhodge::cli {

std::vector<int> parseExponents(const std::string& text, int n) {
  std::vector<int> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(item, &used);
      if (used != item.size() || value < 0) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      throw UsageError("expected nonnegative integers separated by commas, got '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty exponent list");
  if (n > 1 && out.size() == 1) out.assign(static_cast<std::size_t>(n), out.front());
  if (n > 0 && static_cast<int>(out.size()) != n)
    throw UsageError(fmt::format("expected {} exponents, got {}", n, out.size()));
  return out;
}

namespace {

ModulusPair pairOf(const std::string& r, int n = 0) { return ModulusPair(ExponentVector(parseExponents(r, n))); }

FormModuleSpec specOf(const std::string& kind, const ModulusPair& pair, int q) {
  if (kind == "P") return FormModuleSpec::pOmega(pair, q);
  if (kind == "M") return FormModuleSpec::mOmega(pair, q);
  if (kind == "ambient") return FormModuleSpec::ambient(pair, q);
  throw UsageError("kind must be P, M or ambient");
}

}  // namespace

CommandResult basisCommand(const std::string& r, int n, int q, const std::string& kind) {
  const ModulusPair pair = pairOf(r, n);
  if (q < 0 || q > static_cast<int>(pair.vars())) throw UsageError("q must lie in [0, n]");
  CommandResult result;
  const FormModuleSpec spec = specOf(kind, pair, q);
  if (spec.kind == FormKind::OmegaAmbient) throw UsageError("the ambient module has no finite basis");
  for (const auto& b : basis(spec)) result.lines.push_back(b.toString());
  result.reports.push_back(freeBases(pair));
  result.reports.push_back(exteriorPowerIso(pair, q));
  return result;
}

CommandResult membershipCommand(const std::string& r, const std::string& form, const std::string& kind) {
  const ModulusPair pair = pairOf(r);
  const LogForm w = LogForm::parse(form, pair);
  const FormModuleSpec spec = specOf(kind, pair, w.degree());
  CommandResult result;
  VerificationReport report;
  report.statement = "membership";
  report.parameters = {{"r", pair.modulusExp().entries()}, {"kind", toString(spec.kind)}, {"form", w.toString()}};
  const bool inside = member(w, spec);
  report.parameters["member"] = inside;
  if (spec.kind != FormKind::OmegaAmbient && memberByHeightOne(w, spec) != inside)
    report.fail("height-one membership disagrees");
  if (spec.kind == FormKind::MOmega && !w.isZero() && !pair.support().empty()) {
    const int m = minimalFormMultiple(w, pair);
    report.parameters["minimalMultiple"] = m;
    result.lines.push_back(fmt::format("smallest multiple m with the form in M-Omega(m r): {}", m));
  }
  result.lines.push_back(inside ? "member" : "not a member");
  result.reports.push_back(report);
  return result;
}

CommandResult sesCommand(const std::string& r, int j0, int q, int window) {
  const ModulusPair pair = pairOf(r);
  if (j0 < 1 || j0 > static_cast<int>(pair.vars())) throw UsageError("--j0 must be a variable index from 1 to n");
  if (!pair.inSupport(static_cast<std::size_t>(j0 - 1))) throw UsageError("--j0 must lie in the support of r");
  if (window < 1) throw UsageError("--window must be at least 1");
  return {{divisorReductionSES(pair, static_cast<std::size_t>(j0 - 1), q, window)}, {}};
}

CommandResult cubeCommand(const std::string& r, int n, int q, int window) {
  if (window < 1) throw UsageError("--window must be at least 1");
  return {{verifyCubeSequence(pairOf(r, n), q, window)}, {}};
}

CommandResult projCommand(int n, int d) {
  if (n < 1) throw UsageError("--n must be at least 1");
  const GradedDimTable dims = cohomologyDims(n, d);
  CommandResult result;
  result.lines.push_back(dims.toJson().dump());
  result.reports.push_back(projectiveCohomology(n, d));
  return result;
}

CommandResult blowupCommand(const std::string& r, const std::string& center, int q, int window) {
  const ModulusPair pair = pairOf(r);
  IndexSet centerSet;
  for (int k : parseExponents(center)) {
    if (k < 1 || k > static_cast<int>(pair.vars())) throw UsageError("center indices run from 1 to n");
    centerSet = centerSet.with(k - 1);
  }
  if (window < 1) throw UsageError("--window must be at least 1");
  const BlowupSetup setup(centerSet, pair);
  if (!setup.centerInDivisor()) throw UsageError("the center must lie in the divisor");
  return {{verifyBlowupInvariance(setup, q, window)}, {}};
}

CommandResult dvrCommand(int e, int n, int q, int rank, int window) {
  const DvrModel model{e, n, q, rank};
  const long en = static_cast<long>(e) * n;
  const int w = window > 0 ? window : static_cast<int>(3 * en);
  return {{cartesianCheck(model, {-3 * en, 3 * en}), kummerFormCartesian(model, w)}, {}};
}

CommandResult kunnethCommand(const std::string& a, const std::string& b, int qMax) {
  const ModulusPair pa = pairOf(a);
  const ModulusPair pb = pairOf(b);
  const int q = qMax >= 0 ? qMax : static_cast<int>(pa.vars() + pb.vars());
  return {{kunnethCheck(pa, pb, q)}, {}};
}

std::string formatReport(const VerificationReport& report) {
  std::string line = fmt::format("{} {} {}", report.passed ? "PASS" : "FAIL", report.statement,
                                 report.parameters.dump());
  if (report.witness) line += "\n  witness: " + *report.witness;
  return line;
}

Json reportsDocument(const std::vector<VerificationReport>& reports) {
  Json list = Json::array();
  std::size_t passed = 0;
  for (const auto& r : reports) {
    list.push_back(r.toJson());
    passed += r.passed;
  }
  Json doc;
  doc["reports"] = list;
  doc["summary"] = {{"total", reports.size()}, {"passed", passed}, {"failed", reports.size() - passed}};
  return doc;
}

int exitStatus(const std::vector<VerificationReport>& reports) {
  for (const auto& report : reports)
    if (!report.passed) return 1;
  return 0;
}

}  // namespace modhodge::cli
