#pragma once

#include <cstddef>
#include <string>

#include "modhodge/exponent.hpp"
#include "modhodge/index_set.hpp"
#include "modhodge/laurent.hpp"
#include "modhodge/monomial_ideal.hpp"

namespace modhodge {

/// Affine n-space with the monomial divisor x^r.
class ModulusPair {
 public:
  ModulusPair() = default;
  /// Throws DomainError on a negative exponent.
  explicit ModulusPair(ExponentVector r);
  static ModulusPair empty(std::size_t n) { return ModulusPair(ExponentVector(n)); }
  /// Every variable in the support with multiplicity one.
  static ModulusPair reduced(std::size_t n);

  std::size_t vars() const { return r_.size(); }
  const ExponentVector& modulusExp() const { return r_; }
  IndexSet support() const { return support_; }
  bool inSupport(std::size_t j) const { return support_.contains(static_cast<int>(j)); }
  /// Indicator vector 1_S.
  ExponentVector supportIndicator() const;

  ModulusPair scaled(int m) const { return ModulusPair(r_.scaled(m)); }
  /// r + 1_S.
  ModulusPair thickened() const { return ModulusPair(r_ + supportIndicator()); }
  /// r - delta_j.
  ModulusPair reducedAt(std::size_t j) const;
  /// Drops variable j.
  ModulusPair restrictedAway(std::size_t j) const;

  friend bool operator==(const ModulusPair& a, const ModulusPair& b) { return a.r_ == b.r_; }
  std::string toString() const;

 private:
  ExponentVector r_;
  IndexSet support_;
};

/// MO(A, x^r) as the fractional ideal x^{1_S - r} A.
struct ModulusRing {
  ModulusPair pair;
  MonomialFractionalIdeal generator;
};

ModulusRing moRing(const ModulusPair& pair);
bool moMember(const LaurentPoly& p, const ModulusPair& pair);

/// Variable blocks side by side; modulus exponents concatenated.
ModulusPair tensorPair(const ModulusPair& a, const ModulusPair& b);

/// Smallest m >= 1 with p in MO(A, x^{m r}), found by increasing m and
/// testing membership. Throws NotAmbientError when p has a pole off the
/// support (no multiple ever suffices).
int minimalModulusMultiple(const LaurentPoly& p, const ModulusPair& pair);

}  // namespace modhodge
