#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "modhodge/exponent.hpp"
#include "modhodge/log_form.hpp"
#include "modhodge/substitution.hpp"

namespace modhodge {

enum class VarRole {
  Polynomial,  // exponents >= 0
  Laurent,     // any exponent (inverted variable)
  Pinned,      // exponent exactly 0 (quotient by the variable)
};

/// Monomial coefficient ring: a localization of Q[x_1..x_n] at some
/// variables, possibly reduced modulo others.
class MonomialRing {
 public:
  MonomialRing() = default;
  explicit MonomialRing(std::vector<VarRole> roles) : roles_(std::move(roles)) {}
  static MonomialRing polynomial(std::size_t n);
  static MonomialRing laurent(std::size_t n);

  std::size_t nvars() const { return roles_.size(); }
  VarRole role(std::size_t j) const { return roles_[j]; }
  MonomialRing localizedAt(IndexSet vars) const;
  MonomialRing pinnedAt(std::size_t j) const;

  /// Whether x^s lies in the ring.
  bool admits(const ExponentVector& s) const;
  bool contains(const LaurentPoly& p) const;

  friend bool operator==(const MonomialRing&, const MonomialRing&) = default;

 private:
  std::vector<VarRole> roles_;
};

/// Submodule of forms over a monomial ring generated by multihomogeneous
/// forms. The piece in a multidegree is spanned by x^s * g for generators g.
class GradedSubmodule {
 public:
  GradedSubmodule(MonomialRing ring, ModulusPair frame, int degree, std::vector<LogForm> generators);

  const MonomialRing& ring() const { return ring_; }
  const ModulusPair& frame() const { return frame_; }
  int degree() const { return degree_; }
  const std::vector<LogForm>& generators() const { return generators_; }

  std::vector<LogForm> spanningForms(const ExponentVector& multidegree) const;

 private:
  MonomialRing ring_;
  ModulusPair frame_;
  int degree_;
  std::vector<LogForm> generators_;
  std::vector<ExponentVector> generatorDegrees_;
};

/// A module placed in common coordinates: its forms are pulled back along
/// `toCommon` (identity if absent) and compared in the full-log frame of
/// the common ring. The piece at common degree d is the module's piece at
/// common degree d + shift.
struct Summand {
  std::string label;
  GradedSubmodule module;
  std::optional<MonomialSubstitution> toCommon;
  std::optional<ExponentVector> shift;

  std::vector<LogForm> piece(const ExponentVector& commonDegree) const;
  ExponentVector shiftedDegree(const ExponentVector& commonDegree) const;
};

struct GradedTerm {
  std::vector<Summand> summands;
};

/// An element of a term: one common-frame form per summand.
using TermElement = std::vector<LogForm>;

/// Image of a form sitting in one summand of the source term, as one form
/// per summand of the target term.
using GradedMap = std::function<TermElement(std::size_t summand, const LogForm& form)>;

struct DegreeAnalysis {
  ExponentVector degree;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> ranks;
  std::vector<long> cohomology;
  bool wellDefined = true;
  bool squaresToZero = true;
  std::string witness;

  bool exact() const;
};

/// Finite complex of graded terms with multidegree-preserving maps.
class GradedComplex {
 public:
  GradedComplex(std::size_t commonVars, std::vector<GradedTerm> terms, std::vector<GradedMap> maps);

  std::size_t commonVars() const { return commonVars_; }
  const std::vector<GradedTerm>& terms() const { return terms_; }

  /// Spanning elements of term k at a common degree.
  std::vector<TermElement> spanningElements(std::size_t k, const ExponentVector& degree) const;
  TermElement applyMap(std::size_t k, const TermElement& element) const;

  DegreeAnalysis analyze(const ExponentVector& degree) const;

 private:
  std::size_t commonVars_;
  std::vector<GradedTerm> terms_;
  std::vector<GradedMap> maps_;
};

/// Rank of a family of term elements.
std::size_t spanRank(const std::vector<TermElement>& elements);
/// Rank of a family of forms.
std::size_t spanRank(const std::vector<LogForm>& forms);
/// Whether `candidate` lies in the span of `forms`.
bool inSpan(const std::vector<LogForm>& forms, const LogForm& candidate);

std::string describe(const TermElement& element);

}  // namespace modhodge
