#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <functional>
#include <iostream>

#include "commands.hpp"
#include "modhodge/errors.hpp"
#include "modhodge/suites.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

int emit(const modhodge::cli::CommandResult& result, const std::string& jsonPath) {
  using namespace modhodge::cli;
  const bool jsonToStdout = jsonPath == "-";
  if (!jsonToStdout) {
    for (const auto& line : result.lines) fmt::print("{}\n", line);
    for (const auto& report : result.reports) fmt::print("{}\n", formatReport(report));
  }
  std::size_t failed = 0;
  for (const auto& report : result.reports) failed += !report.passed;
  if (!jsonPath.empty()) {
    const std::string text = reportsDocument(result.reports).dump(2) + "\n";
    if (jsonToStdout) {
      std::cout << text;
    } else {
      std::ofstream out(jsonPath);
      if (!out) throw std::runtime_error("cannot write " + jsonPath);
      out << text;
    }
  }
  if (!jsonToStdout)
    fmt::print("{} reports, {} passed, {} failed\n", result.reports.size(), result.reports.size() - failed, failed);
  return exitStatus(result.reports) == 0 ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace modhodge::cli;
  CLI::App app{"Exact certificates for modulus differential forms"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string jsonPath;
  std::uint64_t seed = 1;
  app.add_option("--json", jsonPath, "Write the reports as JSON to this path ('-' for stdout)");
  app.add_option("--seed", seed, "Seed for randomized checks");

  std::function<CommandResult()> command;

  std::string r = "1", kind = "M", form, center, a, b;
  int n = 0, q = 1, window = 4, j0 = 1, d = 0, e = 1, rank = 1, qMax = -1;

  auto* basis = app.add_subcommand("basis", "Free basis of P- or M-Omega^q");
  basis->add_option("--r", r, "Modulus exponents, comma separated")->required();
  basis->add_option("--n", n, "Number of variables (repeats a single --r value)");
  basis->add_option("--q", q, "Form degree");
  basis->add_option("--kind", kind, "P or M")->check(CLI::IsMember({"P", "M"}));
  basis->callback([&] { command = [&] { return basisCommand(r, n, q, kind); }; });

  auto* membership = app.add_subcommand("membership", "Membership of a form, with its filtration level");
  membership->add_option("--r", r, "Modulus exponents, comma separated")->required();
  membership->add_option("--form", form, "Form such as '(x1^-2) * dlog(x1) ^ d(x2)'")->required();
  membership->add_option("--kind", kind, "P, M or ambient")->check(CLI::IsMember({"P", "M", "ambient"}));
  membership->callback([&] { command = [&] { return membershipCommand(r, form, kind); }; });

  auto* ses = app.add_subcommand("ses-check", "Divisor-reduction sequences");
  ses->add_option("--r", r, "Modulus exponents, comma separated")->required();
  ses->add_option("--j0", j0, "Divisor index, from 1")->required();
  ses->add_option("--q", q, "Form degree");
  ses->add_option("--window", window, "Degree window D");
  ses->callback([&] { command = [&] { return sesCommand(r, j0, q, window); }; });

  auto* cube = app.add_subcommand("cube-check", "Split exact cube sequence for P- and M-Omega");
  cube->add_option("--r", r, "Modulus exponents, comma separated")->required();
  cube->add_option("--n", n, "Number of variables (repeats a single --r value)");
  cube->add_option("--q", q, "Form degree");
  cube->add_option("--window", window, "Degree window D");
  cube->callback([&] { command = [&] { return cubeCommand(r, n, q, window); }; });

  auto* proj = app.add_subcommand("proj-coh", "Cohomology dimensions of O(d) on P^n");
  proj->add_option("--n", n, "Dimension of projective space")->required();
  proj->add_option("--d", d, "Twist")->required()->allow_extra_args(false);
  proj->callback([&] { command = [&] { return projCommand(n, d); }; });

  auto* blowup = app.add_subcommand("blowup-check", "Blow-up invariance of M-Omega^q");
  blowup->add_option("--r", r, "Modulus exponents, comma separated")->required();
  blowup->add_option("--center", center, "Indices of the blown-up coordinates, from 1")->required();
  blowup->add_option("--q", q, "Form degree");
  blowup->add_option("--window", window, "Degree window D");
  blowup->callback([&] { command = [&] { return blowupCommand(r, center, q, window); }; });

  auto* dvr = app.add_subcommand("dvr-check", "Valuation and Kummer-cover Cartesian squares");
  int dvrWindow = 0;
  dvr->add_option("--e", e, "Ramification index")->required();
  dvr->add_option("--n", n, "Modulus valuation divided by e")->required();
  dvr->add_option("--q", q, "Form degree");
  dvr->add_option("--rank", rank, "Number of coordinates");
  dvr->add_option("--window", dvrWindow, "Pi-degree window (default 3en)");
  dvr->callback([&] { command = [&] { return dvrCommand(e, n, q, rank, dvrWindow); }; });

  auto* kunneth = app.add_subcommand("kunneth-check", "Künneth pairing on free bases");
  kunneth->add_option("--a", a, "Modulus exponents of the first factor")->required();
  kunneth->add_option("--b", b, "Modulus exponents of the second factor")->required();
  kunneth->add_option("--qmax", qMax, "Largest total degree (default m + n)");
  kunneth->callback([&] { command = [&] { return kunnethCommand(a, b, qMax); }; });

  auto* run = app.add_subcommand("run", "Run a named suite over its parameter grid");
  std::string suite;
  bool full = false;
  int runWindow = 0;
  unsigned workers = 0;
  std::vector<std::string> choices = modhodge::suiteNames();
  choices.push_back("all");
  run->add_option("suite", suite, "Suite name or 'all'")->required()->check(CLI::IsMember(choices));
  auto* quickFlag = run->add_flag("--quick", "Quick grid (default)");
  run->add_flag("--full", full, "Full grid")->excludes(quickFlag);
  run->add_option("--window", runWindow, "Override the degree window D");
  run->add_option("--workers", workers, "Worker threads (default MODHODGE_WORKERS or all cores)");
  run->callback([&] {
    command = [&] {
      auto config = full ? modhodge::SuiteConfig::full(suite) : modhodge::SuiteConfig::quick(suite);
      config.seed = seed;
      config.workers = workers;
      if (run->count("--window") > 0) config.window = runWindow;
      return CommandResult{modhodge::runSuite(config), {}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? kPass : kUsage;
  }

  try {
    return emit(command(), jsonPath);
  } catch (const UsageError& error) {
    fmt::print(stderr, "usage error: {}\n", error.what());
    return kUsage;
  } catch (const modhodge::ParseError& error) {
    fmt::print(stderr, "usage error: {}\n", error.what());
    return kUsage;
  } catch (const modhodge::PreconditionError& error) {
    fmt::print(stderr, "usage error: {}\n", error.what());
    return kUsage;
  } catch (const modhodge::DimensionError& error) {
    fmt::print(stderr, "usage error: {}\n", error.what());
    return kUsage;
  } catch (const modhodge::UnsupportedError& error) {
    fmt::print(stderr, "usage error: {}\n", error.what());
    return kUsage;
  } catch (const modhodge::DomainError& error) {
    fmt::print(stderr, "usage error: {}\n", error.what());
    return kUsage;
  } catch (const std::exception& error) {
    fmt::print(stderr, "internal error: {}\n", error.what());
    return kInternal;
  }
}
