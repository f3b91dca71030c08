#include "modhodge/report.hpp"

namespace modhodge {

void VerificationReport::fail(const std::string& why) {
  passed = false;
  if (!witness) witness = why;
}

Json VerificationReport::toJson() const {
  Json j;
  j["statement"] = statement;
  j["parameters"] = parameters;
  j["window"] = window ? *window : Json(nullptr);
  j["status"] = passed ? "pass" : "fail";
  if (witness) j["witness"] = *witness;
  j["details"] = details;
  return j;
}

VerificationReport VerificationReport::fromJson(const Json& j) {
  VerificationReport r;
  r.statement = j.at("statement").get<std::string>();
  r.parameters = j.at("parameters");
  if (j.contains("window") && !j.at("window").is_null()) r.window = j.at("window");
  r.passed = j.at("status").get<std::string>() == "pass";
  if (j.contains("witness")) r.witness = j.at("witness").get<std::string>();
  if (j.contains("details")) r.details = j.at("details").get<std::vector<std::string>>();
  return r;
}

}  // namespace modhodge
