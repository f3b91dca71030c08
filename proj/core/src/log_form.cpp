#include "modhodge/log_form.hpp"

#include <cctype>
#include <vector>

#include "modhodge/errors.hpp"

namespace modhodge {

LogForm::LogForm(ModulusPair frame, int degree) : frame_(std::move(frame)), degree_(degree) {
  if (degree < 0) throw DomainError("negative form degree");
}

LogForm LogForm::scalar(const ModulusPair& frame, const LaurentPoly& c) {
  LogForm w(frame, 0);
  w.addTerm(IndexSet(), c);
  return w;
}

LogForm LogForm::basisElement(const ModulusPair& frame, IndexSet slots, const LaurentPoly& c) {
  LogForm w(frame, slots.size());
  w.addTerm(slots, c);
  return w;
}

LogForm LogForm::basisElement(const ModulusPair& frame, IndexSet slots) {
  return basisElement(frame, slots, LaurentPoly::constant(frame.vars(), 1));
}

LogForm LogForm::dlogVariable(const ModulusPair& frame, std::size_t j) {
  const auto n = frame.vars();
  const LaurentPoly c = frame.inSupport(j) ? LaurentPoly::constant(n, 1)
                                           : LaurentPoly::variable(n, j, -1);
  return basisElement(frame, IndexSet().with(static_cast<int>(j)), c);
}

LogForm LogForm::dVariable(const ModulusPair& frame, std::size_t j) {
  const auto n = frame.vars();
  const LaurentPoly c = frame.inSupport(j) ? LaurentPoly::variable(n, j) : LaurentPoly::constant(n, 1);
  return basisElement(frame, IndexSet().with(static_cast<int>(j)), c);
}

LaurentPoly LogForm::coefficient(IndexSet slots) const {
  auto it = coeffs_.find(slots);
  return it == coeffs_.end() ? LaurentPoly(nvars()) : it->second;
}

void LogForm::addTerm(IndexSet slots, const LaurentPoly& c) {
  if (slots.size() != degree_) throw DimensionError("basis element of the wrong degree");
  if (!slots.subsetOf(IndexSet::range(static_cast<int>(nvars()))))
    throw DimensionError("basis index outside the variable range");
  if (c.nvars() != nvars()) throw DimensionError("coefficient in the wrong ring");
  if (c.isZero()) return;
  auto [it, inserted] = coeffs_.try_emplace(slots, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) coeffs_.erase(it);
  }
}

LogForm LogForm::inFrame(const ModulusPair& frame) const {
  if (frame.vars() != nvars()) throw DimensionError("frame has a different variable count");
  const IndexSet gained = frame.support().minus(frame_.support());
  const IndexSet lost = frame_.support().minus(frame.support());
  LogForm out(frame, degree_);
  for (const auto& [slots, c] : coeffs_) {
    ExponentVector shift(nvars());
    for (int j : (slots & gained).elements()) shift[j] += 1;
    for (int j : (slots & lost).elements()) shift[j] -= 1;
    out.coeffs_.emplace(slots, c.shifted(shift));
  }
  return out;
}

LogForm LogForm::fullLog() const { return inFrame(ModulusPair::reduced(nvars())); }

std::optional<ExponentVector> LogForm::multidegree() const {
  std::optional<ExponentVector> degree;
  for (const auto& [slots, c] : coeffs_) {
    ExponentVector plain(nvars());
    for (int j : slots.minus(frame_.support()).elements()) plain[j] = 1;
    for (const auto& [e, v] : c.terms()) {
      ExponentVector d = e + plain;
      if (!degree)
        degree = d;
      else if (*degree != d)
        return std::nullopt;
    }
  }
  return degree;
}

std::map<ExponentVector, LogForm> LogForm::homogeneousParts() const {
  std::map<ExponentVector, LogForm> parts;
  for (const auto& [slots, c] : coeffs_) {
    ExponentVector plain(nvars());
    for (int j : slots.minus(frame_.support()).elements()) plain[j] = 1;
    for (const auto& [e, v] : c.terms()) {
      auto it = parts.try_emplace(e + plain, frame_, degree_).first;
      it->second.addTerm(slots, LaurentPoly::monomial(e, v));
    }
  }
  return parts;
}

void LogForm::requireCompatible(const LogForm& other) const {
  if (nvars() != other.nvars()) throw DimensionError("forms on different variable counts");
  if (degree_ != other.degree_) throw DimensionError("adding forms of different degree");
}

LogForm& LogForm::operator+=(const LogForm& other) {
  requireCompatible(other);
  const LogForm rebased = other.frame_ == frame_ ? other : other.inFrame(frame_);
  for (const auto& [slots, c] : rebased.coeffs_) addTerm(slots, c);
  return *this;
}

LogForm& LogForm::operator-=(const LogForm& other) { return *this += -other; }

LogForm LogForm::operator-() const { return scaled(Rational(-1)); }

LogForm LogForm::scaled(const Rational& c) const {
  LogForm out(frame_, degree_);
  if (c == 0) return out;
  for (const auto& [slots, p] : coeffs_) out.coeffs_.emplace(slots, p * c);
  return out;
}

LogForm LogForm::times(const LaurentPoly& p) const {
  LogForm out(frame_, degree_);
  for (const auto& [slots, c] : coeffs_) out.addTerm(slots, c * p);
  return out;
}

bool operator==(const LogForm& a, const LogForm& b) {
  if (a.nvars() != b.nvars() || a.degree_ != b.degree_) return false;
  if (a.frame_ == b.frame_) return a.coeffs_ == b.coeffs_;
  return a.coeffs_ == b.inFrame(a.frame_).coeffs_;
}

std::string LogForm::toString() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [slots, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.toString() + ")";
    bool first = true;
    for (int j : slots.elements()) {
      out += first ? " * " : " ^ ";
      first = false;
      const std::string var = "x" + std::to_string(j + 1);
      out += frame_.inSupport(j) ? "dlog(" + var + ")" : "d(" + var + ")";
    }
  }
  return out;
}

LogForm wedge(const LogForm& a, const LogForm& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("wedge of forms on different variable counts");
  const LogForm rebased = b.frame() == a.frame() ? b : b.inFrame(a.frame());
  LogForm out(a.frame(), a.degree() + b.degree());
  if (out.degree() > static_cast<int>(a.nvars())) return out;
  for (const auto& [sa, ca] : a.coefficients())
    for (const auto& [sb, cb] : rebased.coefficients()) {
      const int sign = wedgeSign(sa, sb);
      if (sign == 0) continue;
      LaurentPoly c = ca * cb;
      if (sign < 0) c = -c;
      out.addTerm(sa | sb, c);
    }
  return out;
}

LogForm differential(const LaurentPoly& f, const ModulusPair& frame) {
  if (f.nvars() != frame.vars()) throw DimensionError("function and frame differ in variables");
  LogForm out(frame, 1);
  for (std::size_t j = 0; j < frame.vars(); ++j) {
    LaurentPoly c = frame.inSupport(j) ? f.eulerPartial(j) : f.partial(j);
    out.addTerm(IndexSet().with(static_cast<int>(j)), c);
  }
  return out;
}

LogForm exteriorDerivative(const LogForm& w) {
  LogForm out(w.frame(), w.degree() + 1);
  if (out.degree() > static_cast<int>(w.nvars())) return out;
  for (const auto& [slots, c] : w.coefficients()) {
    const LogForm dc = differential(c, w.frame());
    for (const auto& [j, cj] : dc.coefficients()) {
      const int sign = wedgeSign(j, slots);
      if (sign == 0) continue;
      out.addTerm(j | slots, sign > 0 ? cj : -cj);
    }
  }
  return out;
}

LogForm dlog(const LaurentPoly& unitMonomial, const ModulusPair& frame) {
  if (unitMonomial.nvars() != frame.vars())
    throw DimensionError("dlog argument and frame differ in variables");
  if (!unitMonomial.isMonomial())
    throw UnsupportedError("dlog is only available in closed form for c*x^a, got " +
                           unitMonomial.toString());
  const ExponentVector a = unitMonomial.soleTerm().first;
  LogForm out(frame, 1);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0) continue;
    out += LogForm::dlogVariable(frame, j).scaled(Rational(a[j]));
  }
  return out;
}

namespace {

class FormParser {
 public:
  FormParser(std::string_view text, const ModulusPair& frame) : text_(text), frame_(frame) {}

  LogForm parse() {
    skip();
    if (pos_ == text_.size()) fail("empty form");
    std::vector<LogForm> terms;
    bool negate = false;
    while (true) {
      skip();
      while (peek() == '+' || peek() == '-') {
        if (get() == '-') negate = !negate;
        skip();
      }
      LogForm term = parseTerm();
      terms.push_back(negate ? -term : term);
      skip();
      if (pos_ == text_.size()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negate = false;
    }
    LogForm total(frame_, terms.front().degree());
    for (const auto& t : terms) {
      if (t.degree() != total.degree()) fail("terms of mixed degree");
      total += t;
    }
    return total;
  }

 private:
  LogForm parseTerm() {
    const std::size_t n = frame_.vars();
    LaurentPoly coefficient = LaurentPoly::constant(n, 1);
    std::vector<LogForm> oneForms;
    bool lastWasForm = false;
    while (true) {
      skip();
      if (startsWith("dlog(") || startsWith("d(")) {
        const bool isLog = startsWith("dlog(");
        pos_ += isLog ? 5 : 2;
        skip();
        if (get() != 'x') fail("expected a variable");
        const std::size_t j = parseIndex();
        skip();
        if (get() != ')') fail("expected ')'");
        oneForms.push_back(isLog ? LogForm::dlogVariable(frame_, j) : LogForm::dVariable(frame_, j));
        lastWasForm = true;
      } else if (peek() == '(') {
        const std::size_t close = matching(pos_);
        coefficient = coefficient * LaurentPoly::parse(text_.substr(pos_ + 1, close - pos_ - 1), n);
        pos_ = close + 1;
        lastWasForm = false;
      } else if (peek() == 'x' || std::isdigit(static_cast<unsigned char>(peek()))) {
        const std::size_t start = pos_;
        ++pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
        skip();
        if (peek() == '^' && text_[start] == 'x') {
          ++pos_;
          skip();
          if (peek() == '-' || peek() == '+') ++pos_;
          while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        coefficient = coefficient * LaurentPoly::parse(text_.substr(start, pos_ - start), n);
        lastWasForm = false;
      } else {
        fail("unexpected character");
      }
      skip();
      if (peek() == '*' || (peek() == '^' && lastWasForm)) {
        ++pos_;
        continue;
      }
      break;
    }
    LogForm value = LogForm::scalar(frame_, coefficient);
    for (const auto& f : oneForms) value = wedge(value, f);
    return value;
  }

  std::size_t parseIndex() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a variable index");
    const long index = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (index < 1 || static_cast<std::size_t>(index) > frame_.vars()) fail("variable out of range");
    return static_cast<std::size_t>(index - 1);
  }

  std::size_t matching(std::size_t open) const {
    int depth = 0;
    for (std::size_t i = open; i < text_.size(); ++i) {
      if (text_[i] == '(') ++depth;
      if (text_[i] == ')' && --depth == 0) return i;
    }
    fail("unbalanced parentheses");
  }

  bool startsWith(std::string_view prefix) const { return text_.substr(pos_, prefix.size()) == prefix; }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  const ModulusPair& frame_;
  std::size_t pos_ = 0;
};

}  // namespace

LogForm LogForm::parse(std::string_view text, const ModulusPair& frame) {
  if (text.find_first_not_of(" \t") != std::string_view::npos &&
      text.substr(text.find_first_not_of(" \t")) == "0")
    return LogForm(frame, 0);
  return FormParser(text, frame).parse();
}

}  // namespace modhodge
