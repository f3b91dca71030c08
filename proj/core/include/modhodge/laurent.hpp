#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "modhodge/exponent.hpp"
#include "modhodge/rational.hpp"

namespace modhodge {

/// Sparse Laurent polynomial in a fixed number of variables over Q.
/// Terms are kept in lexicographic exponent order with no zero coefficients.
class LaurentPoly {
 public:
  using TermMap = std::map<ExponentVector, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const Rational& c);
  static LaurentPoly monomial(const ExponentVector& exponent, const Rational& c = 1);
  static LaurentPoly variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t termCount() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }
  bool isMonomial() const { return terms_.size() == 1; }
  /// Nonzero constant.
  bool isUnitConstant() const;

  Rational coefficient(const ExponentVector& exponent) const;
  /// Exponent and coefficient of the single term; throws UnsupportedError
  /// otherwise.
  std::pair<ExponentVector, Rational> soleTerm() const;

  /// Smallest exponent of variable j over all terms. Empty for zero.
  std::optional<int> minExponent(std::size_t j) const;
  /// True when every term has nonnegative exponents.
  bool isPolynomial() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  LaurentPoly shifted(const ExponentVector& exponent) const;
  /// Nonnegative integer power; negative powers only for monomials.
  LaurentPoly pow(int e) const;

  /// Partial derivative d/dx_j.
  LaurentPoly partial(std::size_t j) const;
  /// x_j d/dx_j.
  LaurentPoly eulerPartial(std::size_t j) const;

  /// Moves variables into a larger ring: variable k becomes offset + k.
  LaurentPoly embedded(std::size_t offset, std::size_t total) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string toString() const;
  /// Parses the `c*x1^e1*...*xn^en + ...` grammar. Variables are 1-based.
  /// With nvars = 0 the count is inferred from the largest index used.
  static LaurentPoly parse(std::string_view text, std::size_t nvars = 0);

 private:
  void addTerm(const ExponentVector& exponent, const Rational& c);
  void requireSameRing(const LaurentPoly& other) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

std::string monomialToString(const ExponentVector& exponent);

}  // namespace modhodge
