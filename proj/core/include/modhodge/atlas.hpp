#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "modhodge/form_module.hpp"
#include "modhodge/index_set.hpp"
#include "modhodge/modulus.hpp"
#include "modhodge/substitution.hpp"

namespace modhodge {

/// Blow-up of A^I, I = {0..n}, along the coordinate subspace {x_nu = 0 :
/// nu in N}, with the pulled-back monomial modulus x^r.
class BlowupSetup {
 public:
  /// Throws PreconditionError unless |N| >= 2 and N is inside I.
  BlowupSetup(IndexSet center, ModulusPair pair);

  std::size_t vars() const { return pair_.vars(); }
  int n() const { return static_cast<int>(pair_.vars()) - 1; }
  const ModulusPair& pair() const { return pair_; }
  /// N.
  IndexSet center() const { return center_; }
  /// T = I \ N.
  IndexSet complement() const { return IndexSet::range(static_cast<int>(vars())).minus(center_); }
  /// M = supp(r).
  IndexSet support() const { return pair_.support(); }
  /// Whether the center lies in the divisor, i.e. M and N meet.
  bool centerInDivisor() const { return !(support() & center_).empty(); }

  std::string toString() const;

 private:
  IndexSet center_;
  ModulusPair pair_;
};

/// Chart U_j, j in N, with coordinates y_tau = x_tau, y_nu = x_nu / x_j and
/// y_j = x_j, indexed like the x variables.
class BlowupChart {
 public:
  BlowupChart(const BlowupSetup& setup, int j);

  int index() const { return j_; }
  /// y -> x, used to compare chart forms in common x coordinates.
  const MonomialSubstitution& toBase() const { return toBase_; }
  /// x -> y, the pullback along the blow-down.
  const MonomialSubstitution& fromBase() const { return fromBase_; }
  /// Pulled-back modulus in the y coordinates: the x_j exponent becomes the
  /// sum of r over N.
  const ModulusPair& pair() const { return pair_; }

  /// Form module on U_j localized at y_k for k in `inverted`.
  FormModuleSpec spec(FormKind kind, int q, IndexSet inverted = {}) const;

 private:
  int j_;
  ModulusPair pair_;
  MonomialSubstitution toBase_;
  MonomialSubstitution fromBase_;
};

/// Charts U_j for j in N, in increasing order of j.
std::vector<BlowupChart> blowupCharts(const BlowupSetup& setup);

}  // namespace modhodge
