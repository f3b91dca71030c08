#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "modhodge/exponent.hpp"
#include "modhodge/laurent.hpp"
#include "modhodge/log_form.hpp"

namespace modhodge {

/// Monomial change of coordinates y_k = x^{rows[k]} from a source ring in
/// `rows.size()` variables to a target ring in `targetVars` variables.
class MonomialSubstitution {
 public:
  MonomialSubstitution(std::size_t targetVars, std::vector<ExponentVector> rows);
  static MonomialSubstitution identity(std::size_t n);
  /// Source variable k goes to target variable offset + k.
  static MonomialSubstitution blockInclusion(std::size_t sourceVars, std::size_t offset,
                                             std::size_t targetVars);

  std::size_t sourceVars() const { return rows_.size(); }
  std::size_t targetVars() const { return targetVars_; }
  const std::vector<ExponentVector>& rows() const { return rows_; }

  /// Exponent of the image of x^c.
  ExponentVector mapExponent(const ExponentVector& c) const;
  LaurentPoly apply(const LaurentPoly& p) const;
  /// Pulls a form back along the substitution. The result is written in the
  /// full-log frame of the target ring.
  LogForm apply(const LogForm& w) const;

  /// The unique integral c with mapExponent(c) = d, if any. Requires the
  /// exponent matrix to be injective.
  std::optional<ExponentVector> preimageExponent(const ExponentVector& d) const;

  bool isInjective() const;
  /// Inverse substitution when the exponent matrix is unimodular.
  std::optional<MonomialSubstitution> inverse() const;
  /// this after first: x -> first(x) -> this(first(x)).
  MonomialSubstitution after(const MonomialSubstitution& first) const;

 private:
  std::size_t targetVars_;
  std::vector<ExponentVector> rows_;
};

}  // namespace modhodge
