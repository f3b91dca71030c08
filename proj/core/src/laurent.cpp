#include "modhodge/laurent.hpp"

#include <cctype>

#include "modhodge/errors.hpp"

namespace modhodge {

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Rational& c) {
  LaurentPoly p(nvars);
  p.addTerm(ExponentVector(nvars), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const ExponentVector& exponent, const Rational& c) {
  LaurentPoly p(exponent.size());
  p.addTerm(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t index, int power) {
  if (index >= nvars) throw DimensionError("variable index out of range");
  return monomial(ExponentVector::unit(nvars, index).scaled(power));
}

bool LaurentPoly::isUnitConstant() const {
  return terms_.size() == 1 && terms_.begin()->first.isZero();
}

Rational LaurentPoly::coefficient(const ExponentVector& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<ExponentVector, Rational> LaurentPoly::soleTerm() const {
  if (terms_.size() != 1) throw UnsupportedError("expected a single term, got " + toString());
  return *terms_.begin();
}

std::optional<int> LaurentPoly::minExponent(std::size_t j) const {
  std::optional<int> lowest;
  for (const auto& [e, c] : terms_)
    if (!lowest || e[j] < *lowest) lowest = e[j];
  return lowest;
}

bool LaurentPoly::isPolynomial() const {
  for (const auto& [e, c] : terms_)
    if (!e.isNonnegative()) return false;
  return true;
}

void LaurentPoly::addTerm(const ExponentVector& exponent, const Rational& c) {
  if (exponent.size() != nvars_) throw DimensionError("exponent length does not match ring");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::requireSameRing(const LaurentPoly& other) const {
  if (nvars_ != other.nvars_)
    throw DimensionError("Laurent polynomials in " + std::to_string(nvars_) + " and " +
                         std::to_string(other.nvars_) + " variables");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  requireSameRing(other);
  for (const auto& [e, c] : other.terms_) addTerm(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  requireSameRing(other);
  for (const auto& [e, c] : other.terms_) addTerm(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.requireSameRing(b);
  LaurentPoly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.addTerm(ea + eb, ca * cb);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  return out *= Rational(-1);
}

LaurentPoly LaurentPoly::shifted(const ExponentVector& exponent) const {
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + exponent, c);
  return out;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    auto [exp, c] = soleTerm();
    Rational inv = 1 / c;
    LaurentPoly base = monomial(-exp, inv);
    return base.pow(-e);
  }
  LaurentPoly result = constant(nvars_, 1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::partial(std::size_t j) const {
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[j] == 0) continue;
    ExponentVector lowered = e;
    --lowered[j];
    out.addTerm(lowered, c * e[j]);
  }
  return out;
}

LaurentPoly LaurentPoly::eulerPartial(std::size_t j) const {
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_)
    if (e[j] != 0) out.addTerm(e, c * e[j]);
  return out;
}

LaurentPoly LaurentPoly::embedded(std::size_t offset, std::size_t total) const {
  if (offset + nvars_ > total) throw DimensionError("embedding does not fit target ring");
  LaurentPoly out(total);
  for (const auto& [e, c] : terms_) {
    ExponentVector moved(total);
    for (std::size_t k = 0; k < nvars_; ++k) moved[offset + k] = e[k];
    out.terms_.emplace(moved, c);
  }
  return out;
}

std::string monomialToString(const ExponentVector& exponent) {
  std::string out;
  for (std::size_t k = 0; k < exponent.size(); ++k) {
    if (exponent[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(k + 1);
    if (exponent[k] != 1) out += "^" + std::to_string(exponent[k]);
  }
  return out;
}

std::string LaurentPoly::toString() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    const std::string mono = monomialToString(e);
    if (mono.empty())
      out += c.get_str();
    else if (c == 1)
      out += mono;
    else
      out += c.get_str() + "*" + mono;
  }
  return out;
}

namespace {

struct RawTerm {
  Rational coefficient = 1;
  std::map<std::size_t, int> powers;
};

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skipSpace();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool negate = false;
    while (true) {
      skipSpace();
      while (peek() == '+' || peek() == '-') {
        if (get() == '-') negate = !negate;
        skipSpace();
      }
      RawTerm term = parseTerm();
      if (negate) term.coefficient = -term.coefficient;
      terms.push_back(std::move(term));
      skipSpace();
      if (pos_ == text_.size()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negate = false;
    }
    return terms;
  }

 private:
  RawTerm parseTerm() {
    RawTerm term;
    parseFactor(term);
    skipSpace();
    while (peek() == '*') {
      ++pos_;
      skipSpace();
      parseFactor(term);
      skipSpace();
    }
    return term;
  }

  void parseFactor(RawTerm& term) {
    if (peek() == 'x') {
      ++pos_;
      const long index = parseUnsigned();
      if (index < 1) fail("variable index must be at least 1");
      int power = 1;
      skipSpace();
      if (peek() == '^') {
        ++pos_;
        skipSpace();
        const bool paren = peek() == '(';
        if (paren) ++pos_;
        skipSpace();
        bool neg = false;
        if (peek() == '-' || peek() == '+') neg = get() == '-';
        power = static_cast<int>(parseUnsigned());
        if (neg) power = -power;
        skipSpace();
        if (paren && get() != ')') fail("expected ')'");
      }
      term.powers[static_cast<std::size_t>(index - 1)] += power;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (peek() == '/') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed rational");
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
      term.coefficient *= parseRational(text_.substr(start, pos_ - start));
      return;
    }
    fail("unexpected character");
  }

  long parseUnsigned() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) +
                     "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, std::size_t nvars) {
  const auto raw = PolyParser(text).parse();
  std::size_t needed = 0;
  for (const auto& t : raw)
    for (const auto& [k, e] : t.powers) needed = std::max(needed, k + 1);
  if (nvars == 0) nvars = std::max<std::size_t>(needed, 1);
  if (needed > nvars)
    throw DimensionError("polynomial uses x" + std::to_string(needed) + " but ring has " +
                         std::to_string(nvars) + " variables");
  LaurentPoly out(nvars);
  for (const auto& t : raw) {
    ExponentVector e(nvars);
    for (const auto& [k, p] : t.powers) e[k] += p;
    out.addTerm(e, t.coefficient);
  }
  return out;
}

}  // namespace modhodge
