#pragma once

#include <map>
#include <vector>

#include "modhodge/atlas.hpp"
#include "modhodge/graded.hpp"
#include "modhodge/log_form.hpp"
#include "modhodge/report.hpp"

namespace modhodge {

/// One graded piece O_E(twist) of the cokernel of O -> O(k).
struct TwistPiece {
  int k = 0;
  int j = 0;
  int twist = 0;
};

struct CokernelTwistProfile {
  /// |M ∩ N|.
  int i = 0;
  /// |M^c ∩ N|.
  int complementSize = 0;
  /// k -> number of q-th exterior power basis elements with k factors
  /// (1/x_j) dx_nu.
  std::map<int, long> multiplicities;
  std::vector<TwistPiece> pieces;
  /// Every piece satisfies -|N| < twist < 0.
  bool boundsHold = true;

  Json toJson() const;
};

/// P-Omega^1 generators on U_j written in the x coordinates: dlog x_mu for
/// mu in M, dx_tau for tau in T \ M, (1/x_j) dx_nu for nu in N \ M.
/// Throws PreconditionError when the center is not in the divisor.
std::vector<LogForm> chartBasis(const BlowupSetup& setup, int j);

/// Throws PreconditionError when the center is not in the divisor.
CokernelTwistProfile comparisonProfile(const BlowupSetup& setup, int q);

/// Augmented Čech complex M-Omega^q(A) -> prod_j M-Omega^q(U_j) -> ... of
/// the chart cover, in the x multidegree grading.
GradedComplex blowupCechComplex(const BlowupSetup& setup, int q);

/// Twist bounds with projective-space vanishing, the pullback of the base
/// basis on every chart, chart gluing, and exactness of the augmented Čech
/// complex on the box [-window, window]^{n+1}.
VerificationReport verifyBlowupInvariance(const BlowupSetup& setup, int q, int window);

}  // namespace modhodge
