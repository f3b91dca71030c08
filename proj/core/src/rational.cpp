#include "modhodge/rational.hpp"

#include <cctype>

#include "modhodge/errors.hpp"

namespace modhodge {

Rational makeRational(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

Rational parseRational(std::string_view text) {
  std::string cleaned;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
  if (cleaned.empty()) throw ParseError("empty rational");
  if (cleaned.front() == '+') cleaned.erase(cleaned.begin());

  const auto slash = cleaned.find('/');
  auto valid_integer = [](std::string_view digits, bool allow_sign) {
    if (allow_sign && !digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty()) return false;
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const std::string num = cleaned.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : cleaned.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw ParseError("malformed rational '" + std::string(text) + "'");

  const Integer denominator(den);
  if (denominator == 0) throw ParseError("rational with zero denominator");
  Rational value{Integer(num), denominator};
  value.canonicalize();
  return value;
}

std::string toString(const Rational& value) { return value.get_str(); }

}  // namespace modhodge
