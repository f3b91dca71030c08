#include "modhodge/suites.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "modhodge/atlas.hpp"
#include "modhodge/blowup.hpp"
#include "modhodge/cech.hpp"
#include "modhodge/cube.hpp"
#include "modhodge/divisor_sequences.hpp"
#include "modhodge/dvr.hpp"
#include "modhodge/errors.hpp"
#include "modhodge/form_module.hpp"
#include "modhodge/kunneth.hpp"
#include "modhodge/parallel.hpp"

namespace modhodge {

SuiteConfig SuiteConfig::quick(std::string suite) {
  SuiteConfig c;
  c.suite = std::move(suite);
  return c;
}

SuiteConfig SuiteConfig::full(std::string suite) {
  SuiteConfig c;
  c.suite = std::move(suite);
  c.nMax = 4;
  c.rMax = 4;
  c.qMax = 4;
  c.window = 5;
  c.twistMax = 8;
  return c;
}

void SuiteConfig::validate() const {
  if (window < 1) throw PreconditionError("degree window must be at least 1");
  if (nMax < 1 || rMax < 1 || qMax < 0 || twistMax < 0) throw PreconditionError("empty parameter grid");
  if (nMax > 8) throw PreconditionError("nMax above 8 is not supported");
  if (suite != "all") {
    const auto& names = suiteNames();
    if (std::find(names.begin(), names.end(), suite) == names.end())
      throw PreconditionError("unknown suite '" + suite + "'");
  }
}

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names{"basis",       "membership",   "ses-check",
                                              "cube-check",  "proj-coh",     "blowup-check",
                                              "dvr-check",   "kunneth-check"};
  return names;
}

namespace {

std::vector<ModulusPair> pairsUpTo(int n, int rMax) {
  std::vector<ModulusPair> out;
  forEachInBox(static_cast<std::size_t>(n), 0, rMax, [&](const ExponentVector& r) { out.emplace_back(r); });
  return out;
}

long closedH0(int n, int d) { return d >= 0 ? binomial(d + n, n) : 0; }
long closedHn(int n, int d) { return d <= -n - 1 ? binomial(-d - 1, n) : 0; }

using Job = std::function<VerificationReport()>;

void basisJobs(const SuiteConfig& c, std::vector<Job>& jobs) {
  for (int n = 1; n <= c.nMax; ++n)
    for (const auto& pair : pairsUpTo(n, c.rMax)) jobs.push_back([pair] { return moRingFormula(pair, 6); });
  for (int n = 1; n <= c.nMax + 1; ++n)
    for (const auto& pair : pairsUpTo(n, 2)) {
      jobs.push_back([pair] { return freeBases(pair); });
      for (int q = 0; q <= n; ++q) jobs.push_back([pair, q] { return exteriorPowerIso(pair, q); });
    }
}

void membershipJobs(const SuiteConfig& c, std::vector<Job>& jobs) {
  for (int k = 0; k < 20; ++k) jobs.push_back([seed = c.seed, k] { return filtrationExhaustion(seed, k); });
}

void sesJobs(const SuiteConfig& c, std::vector<Job>& jobs) {
  for (int n = 1; n <= c.nMax; ++n)
    for (const auto& pair : pairsUpTo(n, 2))
      for (int j0 : pair.support().elements())
        for (int q = 0; q <= std::min({c.qMax, 2, n}); ++q)
          jobs.push_back([pair, j0, q, w = c.window] { return divisorReductionSES(pair, j0, q, w); });
}

void cubeJobs(const SuiteConfig& c, std::vector<Job>& jobs) {
  for (int n = 1; n <= std::min(c.nMax, 2); ++n)
    for (const auto& pair : pairsUpTo(n, 2))
      for (int q = 0; q <= std::min(c.qMax, n + 1); ++q)
        jobs.push_back([pair, q, w = c.window] { return verifyCubeSequence(pair, q, w); });
}

void projJobs(const SuiteConfig& c, std::vector<Job>& jobs) {
  for (int n = 1; n <= c.nMax; ++n)
    for (int d = -c.twistMax; d <= c.twistMax; ++d) jobs.push_back([n, d] { return projectiveCohomology(n, d); });
  for (int n = 1; n <= std::min(c.nMax, 2); ++n)
    for (int i = -4; i <= 4; ++i) jobs.push_back([n, i] { return linePushforward(n, i); });
}

void blowupJobs(const SuiteConfig& c, std::vector<Job>& jobs) {
  const int window = std::min(c.window, 3);
  for (int vars = 2; vars <= std::min(c.nMax, 3); ++vars)
    for (IndexSet center : allSubsets(vars)) {
      if (center.size() < 2) continue;
      for (const auto& pair : pairsUpTo(vars, 2)) {
        const BlowupSetup setup(center, pair);
        if (!setup.centerInDivisor()) continue;
        for (int q = 0; q <= std::min(c.qMax, 2); ++q)
          jobs.push_back([setup, q, window] { return verifyBlowupInvariance(setup, q, window); });
      }
    }
}

void dvrJobs(const SuiteConfig& c, std::vector<Job>& jobs) {
  for (int e = 1; e <= 5; ++e)
    for (int n = 1; n <= 4; ++n) {
      const long en = static_cast<long>(e) * n;
      jobs.push_back([e, n, en] { return cartesianCheck(DvrModel{e, n, 0, 1}, {-3 * en, 3 * en}); });
    }
  for (int e = 1; e <= 3; ++e)
    for (int n = 1; n <= 2; ++n)
      for (int rank = 1; rank <= (c.nMax > 3 ? 2 : 1); ++rank)
        for (int q = 0; q <= std::min(1, rank); ++q)
          jobs.push_back([e, n, q, rank] { return kummerFormCartesian(DvrModel{e, n, q, rank}, 3 * e * n); });
}

void kunnethJobs(const SuiteConfig& c, std::vector<Job>& jobs) {
  std::vector<ModulusPair> pairs;
  for (int n = 1; n <= std::min(c.nMax, 3); ++n)
    forEachInBox(static_cast<std::size_t>(n), 0, 1, [&](const ExponentVector& pattern) {
      pairs.emplace_back(pattern.scaled(2));
    });
  for (const auto& a : pairs)
    for (const auto& b : pairs) {
      const int qMax = static_cast<int>(a.vars() + b.vars());
      jobs.push_back([a, b, qMax] { return kunnethCheck(a, b, qMax); });
    }
}

}  // namespace

VerificationReport moRingFormula(const ModulusPair& pair, int window) {
  VerificationReport report;
  report.statement = "mo-ring-formula";
  report.parameters = {{"n", pair.vars()}, {"r", pair.modulusExp().entries()}};
  report.window = window;
  const ExponentVector expected = pair.supportIndicator() - pair.modulusExp();
  if (moRing(pair).generator.generatorExponent != expected)
    report.fail("generator is " + moRing(pair).generator.generatorExponent.toString());
  const MonomialFractionalIdeal radical{radicalOfMonomial(pair.modulusExp())};
  long members = 0;
  forEachInBox(pair.vars(), -window, window, [&](const ExponentVector& c) {
    const LaurentPoly monomial = LaurentPoly::monomial(c);
    const bool brute = fracIdealMember(LaurentPoly::monomial(c + pair.modulusExp()), radical);
    members += brute;
    if (brute != moMember(monomial, pair)) report.fail("membership of x^" + c.toString() + " disagrees");
    if (brute != c.dominates(expected)) report.fail("x^" + c.toString() + " contradicts the generator");
  });
  report.note(std::to_string(members) + " window monomials in MO");
  return report;
}

VerificationReport freeBases(const ModulusPair& pair) {
  VerificationReport report;
  report.statement = "free-bases";
  report.parameters = {{"n", pair.vars()}, {"r", pair.modulusExp().entries()}};
  const int n = static_cast<int>(pair.vars());
  for (int q = 0; q <= n; ++q) {
    for (auto spec : {FormModuleSpec::pOmega(pair, q), FormModuleSpec::mOmega(pair, q)}) {
      const auto forms = basis(spec);
      const std::string label = std::string(toString(spec.kind)) + "^" + std::to_string(q);
      if (static_cast<long>(forms.size()) != binomial(n, q)) report.fail(label + " basis has wrong size");
      if (spanRank(forms) != forms.size()) report.fail(label + " basis is dependent");
      for (const auto& b : forms) {
        if (!member(b, spec)) report.fail(label + " rejects its generator " + b.toString());
        if (!inSpan(definitionalSpan(spec, *b.fullLog().multidegree()), b))
          report.fail(label + " generator " + b.toString() + " is outside the defining span");
      }
    }
  }
  return report;
}

VerificationReport projectiveCohomology(int n, int d) {
  VerificationReport report;
  report.statement = "Pn-cohomology";
  report.parameters = {{"n", n}, {"d", d}};
  const GradedDimTable dims = cohomologyDims(n, d);
  report.parameters["dims"] = dims.toJson();
  for (const auto& [k, v] : dims.dims)
    if (k != 0 && k != n) report.fail("h^" + std::to_string(k) + " = " + std::to_string(v));
  if (dims.at(0) != closedH0(n, d)) report.fail("h^0 = " + std::to_string(dims.at(0)));
  if (dims.at(n) != closedHn(n, d)) report.fail("h^n = " + std::to_string(dims.at(n)));
  long euler = 0;
  for (const auto& [k, v] : dims.dims) euler += k % 2 == 0 ? v : -v;
  // C(n+d, n) as a polynomial in d.
  Integer numerator = 1;
  for (int k = 1; k <= n; ++k) numerator *= d + k;
  Integer factorial = 1;
  for (int k = 2; k <= n; ++k) factorial *= k;
  if (Integer(euler) * factorial != numerator) report.fail("Euler characteristic " + std::to_string(euler));
  if (dims.at(n) != closedH0(n, -d - n - 1)) report.fail("h^n(d) differs from h^0(-d-n-1)");
  return report;
}

VerificationReport linePushforward(int n, int i) {
  VerificationReport report;
  report.statement = "line-pushforward";
  report.parameters = {{"n", n}, {"i", i}};
  const LinePushforward result = blowupLinePushforward(n, i);
  report.parameters["higher"] = result.higher.toJson();
  report.window = Json::array({result.directImage.begin()->first, result.directImage.rbegin()->first});
  if (i > -n - 1 && !result.higher.allZero()) report.fail("higher direct image survives for i > -n-1");
  if (i <= -n - 1 && result.higher.allZero()) report.fail("higher direct image vanishes for i <= -n-1");
  if (!result.matchesIdealPower) report.fail("direct image differs from I^i");
  return report;
}

VerificationReport filtrationExhaustion(std::uint64_t seed, int index) {
  std::mt19937_64 rng(seed * 1000003u + static_cast<std::uint64_t>(index));
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n = uniform(1, 3);
  ExponentVector r(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) r[j] = uniform(0, 3);
  r[uniform(0, n - 1)] = uniform(1, 3);
  const ModulusPair pair(r);
  const int q = uniform(0, n);

  LogForm w(pair, q);
  const auto slots = subsetsOfSize(n, q);
  const int terms = uniform(1, 3);
  for (int t = 0; t < terms; ++t) {
    ExponentVector e(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) e[j] = pair.inSupport(j) ? uniform(-8, 2) : uniform(0, 2);
    const LaurentPoly c = LaurentPoly::monomial(e, Rational(uniform(1, 9) * (uniform(0, 1) ? 1 : -1)));
    w.addTerm(slots[uniform(0, static_cast<int>(slots.size()) - 1)], c);
  }

  VerificationReport report;
  report.statement = "filtration-exhaustion";
  report.parameters = {{"seed", seed}, {"index", index}, {"r", r.entries()}, {"q", q}, {"form", w.toString()}};
  if (w.isZero()) {
    report.note("random form cancelled to zero");
    return report;
  }
  const int m = minimalFormMultiple(w, pair);
  report.parameters["m"] = m;
  if (!memberByHeightOne(w, FormModuleSpec::mOmega(pair.scaled(m), q)))
    report.fail("form is not in M-Omega at the reported multiple");
  if (m > 1 && memberByHeightOne(w, FormModuleSpec::mOmega(pair.scaled(m - 1), q)))
    report.fail("form is already in M-Omega at multiple " + std::to_string(m - 1));
  return report;
}

std::vector<VerificationReport> runSuite(const SuiteConfig& config) {
  config.validate();
  using Builder = void (*)(const SuiteConfig&, std::vector<Job>&);
  const std::vector<std::pair<std::string, Builder>> builders{
      {"basis", basisJobs},       {"membership", membershipJobs}, {"ses-check", sesJobs},
      {"cube-check", cubeJobs},   {"proj-coh", projJobs},         {"blowup-check", blowupJobs},
      {"dvr-check", dvrJobs},     {"kunneth-check", kunnethJobs}};
  std::vector<Job> jobs;
  for (const auto& [name, build] : builders)
    if (config.suite == "all" || config.suite == name) build(config, jobs);
  return parallelMap(jobs, [](const Job& job) { return job(); }, config.workers);
}

}  // namespace modhodge
