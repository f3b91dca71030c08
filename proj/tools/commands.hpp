#pragma once

#include <string>
#include <vector>

#include "modhodge/report.hpp"

namespace modhodge::cli {

/// Invalid command-line values (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Comma-separated nonnegative exponents, e.g. "2,0,1". A single value is
/// repeated `n` times when n > 1.
std::vector<int> parseExponents(const std::string& text, int n = 0);

struct CommandResult {
  std::vector<VerificationReport> reports;
  /// Extra human-readable lines printed before the report summary.
  std::vector<std::string> lines;
};

CommandResult basisCommand(const std::string& r, int n, int q, const std::string& kind);
CommandResult membershipCommand(const std::string& r, const std::string& form, const std::string& kind);
CommandResult sesCommand(const std::string& r, int j0, int q, int window);
CommandResult cubeCommand(const std::string& r, int n, int q, int window);
CommandResult projCommand(int n, int d);
CommandResult blowupCommand(const std::string& r, const std::string& center, int q, int window);
CommandResult dvrCommand(int e, int n, int q, int rank, int window);
CommandResult kunnethCommand(const std::string& a, const std::string& b, int qMax);

/// One line per report: status, statement, parameters, witness.
std::string formatReport(const VerificationReport& report);
/// {"reports": [...], "summary": {...}}.
Json reportsDocument(const std::vector<VerificationReport>& reports);

/// Process exit status for a finished command: 0 when every report
/// passed, 1 otherwise.
int exitStatus(const std::vector<VerificationReport>& reports);

}  // namespace modhodge::cli
