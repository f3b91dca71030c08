#pragma once

#include "modhodge/exponent.hpp"
#include "modhodge/laurent.hpp"

namespace modhodge {

/// Principal monomial fractional ideal x^g * Q[x_1..x_n].
struct MonomialFractionalIdeal {
  ExponentVector generatorExponent;

  std::size_t nvars() const { return generatorExponent.size(); }
  LaurentPoly generator() const { return LaurentPoly::monomial(generatorExponent); }
  MonomialFractionalIdeal operator*(const MonomialFractionalIdeal& other) const {
    return {generatorExponent + other.generatorExponent};
  }
  friend bool operator==(const MonomialFractionalIdeal&, const MonomialFractionalIdeal&) = default;
};

/// Exponent of the generator of the radical of (x^r): the indicator of
/// supp(r). Throws DomainError on a negative entry.
ExponentVector radicalOfMonomial(const ExponentVector& r);

/// True iff every term x^a of p satisfies a >= g componentwise.
bool fracIdealMember(const LaurentPoly& p, const MonomialFractionalIdeal& ideal);

}  // namespace modhodge
