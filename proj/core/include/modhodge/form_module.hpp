#pragma once

#include <vector>

#include "modhodge/graded.hpp"
#include "modhodge/log_form.hpp"
#include "modhodge/modulus.hpp"
#include "modhodge/report.hpp"

namespace modhodge {

enum class FormKind { POmega, MOmega, OmegaAmbient };

const char* toString(FormKind kind);

/// P-Omega^q, M-Omega^q or the ambient Omega^q of (Spec R, x^r), where R is
/// Q[x_1..x_n] localized at the Laurent variables of `ring`.
struct FormModuleSpec {
  FormKind kind = FormKind::POmega;
  ModulusPair pair;
  int degree = 0;
  MonomialRing ring;

  static FormModuleSpec pOmega(const ModulusPair& pair, int q);
  static FormModuleSpec mOmega(const ModulusPair& pair, int q);
  static FormModuleSpec ambient(const ModulusPair& pair, int q);
  FormModuleSpec localizedAt(IndexSet vars) const;
  FormModuleSpec withKind(FormKind k) const;
};

/// Exponent of the coefficient ideal generator x^g, so that the module is
/// the free R-module on the e_T with coefficients in x^g R.
ExponentVector coefficientTwist(const FormModuleSpec& spec);

/// Free generators, one per q-subset. Throws DomainError for the ambient
/// kind.
std::vector<LogForm> basis(const FormModuleSpec& spec);

/// Membership test. Throws NotAmbientError when a coefficient has a pole
/// along a polynomial variable outside the support.
bool member(const LogForm& w, const FormModuleSpec& spec);

/// Same answer as member() for P- and M-Omega, obtained by testing each
/// height-one localization at (x_j) separately.
bool memberByHeightOne(const LogForm& w, const FormModuleSpec& spec);

GradedSubmodule asGraded(const FormModuleSpec& spec);

/// Spanning set of the multidegree-d piece read off from the generator
/// description: R-multiples of wedges of dlog x_j (j in S) and d(x^c).
std::vector<LogForm> definitionalSpan(const FormModuleSpec& spec, const ExponentVector& d);

/// Wedges of q-subsets of basis(P-Omega^1) against basis(P-Omega^q).
VerificationReport exteriorPowerIso(const ModulusPair& pair, int q);

/// Smallest m >= 1 with w in M-Omega^q(m r), searched by direct membership.
int minimalFormMultiple(const LogForm& w, const ModulusPair& pair);

}  // namespace modhodge
