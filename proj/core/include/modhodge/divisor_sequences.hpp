#pragma once

#include <cstddef>

#include "modhodge/graded.hpp"
#include "modhodge/log_form.hpp"
#include "modhodge/modulus.hpp"
#include "modhodge/report.hpp"

namespace modhodge {

/// Residue along D0 = {x_j0 = 0}: the coefficient of dlog x_j0 (moved to the
/// front, sign (-1)^position) reduced modulo x_j0. The result keeps all n
/// variables, has no j0 slot and no x_j0 in its coefficients. Throws
/// MembershipError if a coefficient has a pole along x_j0.
LogForm residue(const LogForm& w, std::size_t j0);

/// Terms of w whose coefficient has x_j0-exponent 0 (in a frame where j0
/// is logarithmic); higher powers vanish modulo x_j0.
LogForm reduceModVariable(const LogForm& w, std::size_t j0);

/// Complex attached to dropping one multiplicity of D0, starting with the
/// smaller pair. For r_j0 > 1 the P-Omega version is the two-term
/// inclusion (an equality when exact) and the M-Omega version ends in
/// P-Omega^q(r) / x_j0. For r_j0 = 1 both end in degree q-1 forms on D0
/// via the residue.
GradedComplex divisorComplex(const ModulusPair& pair, std::size_t j0, int q, bool modulusVersion);

/// Checks the divisor-reduction sequences on the box [-window, window]^n.
VerificationReport divisorReductionSES(const ModulusPair& pair, std::size_t j0, int q, int window);

}  // namespace modhodge
