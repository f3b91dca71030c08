#pragma once

#include <map>
#include <vector>

#include "modhodge/exponent.hpp"
#include "modhodge/index_set.hpp"
#include "modhodge/report.hpp"

namespace modhodge {

/// Cohomological degree -> dimension. Degrees with dimension zero are
/// omitted.
struct GradedDimTable {
  std::map<int, long> dims;

  long at(int degree) const;
  bool allZero() const { return dims.empty(); }
  Json toJson() const;
  friend bool operator==(const GradedDimTable&, const GradedDimTable&) = default;
};

/// Alternating Čech complex of the standard cover {t_j != 0} of P^n in the
/// Z^{n+1}-degree a: C^p is spanned by the (p+1)-subsets sigma containing
/// every j with a_j < 0.
struct CechComplex {
  int n = 0;
  ExponentVector degree;
  std::vector<std::vector<IndexSet>> levels;

  static CechComplex standard(int n, const ExponentVector& a);
  /// Cochain dimensions minus ranks of the differentials.
  std::vector<long> cohomology() const;
};

/// h^i(P^n, O(d)) from exact ranks of the Čech complex, one monomial degree
/// at a time. Throws DomainError for n < 1.
GradedDimTable cohomologyDims(int n, int d);

/// Sheaf cohomology of O(i) on the blow-up of A^{n+1} at the origin along
/// the origin fiber, with O(1) the ideal of the exceptional divisor.
struct LinePushforward {
  int n = 0;
  int i = 0;
  /// q >= 1: total dimension of R^q f_* O(i).
  GradedDimTable higher;
  /// Fiber degree -> dim of f_* O(i) in that degree, on the inspected window.
  std::map<int, long> directImage;
  /// Whether f_* O(i) agrees with I^i degree by degree on the window.
  bool matchesIdealPower = true;
};

/// Čech computation on the n+1 standard charts of the blow-up. Degree
/// classes with an infinite number of monomials must be acyclic in positive
/// degree; finite classes are enumerated one monomial degree at a time.
LinePushforward blowupLinePushforward(int n, int i, int window = 4);

}  // namespace modhodge
