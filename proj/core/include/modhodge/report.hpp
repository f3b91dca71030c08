#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace modhodge {

using Json = nlohmann::ordered_json;

/// Pass/fail certificate for one statement at one parameter point.
struct VerificationReport {
  std::string statement;
  Json parameters = Json::object();
  /// Degree window, when the check is windowed: an integer bound D or a
  /// [lo, hi] pair.
  std::optional<Json> window;
  bool passed = true;
  std::optional<std::string> witness;
  std::vector<std::string> details;

  /// Marks the report failed; keeps the first witness.
  void fail(const std::string& why);
  void note(const std::string& line) { details.push_back(line); }

  Json toJson() const;
  static VerificationReport fromJson(const Json& j);
};

}  // namespace modhodge
