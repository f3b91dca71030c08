#pragma once

#include <map>

#include "modhodge/modulus.hpp"
#include "modhodge/report.hpp"

namespace modhodge {

/// q -> free rank of M-Omega^q.
struct GradedRankVector {
  std::map<int, long> ranks;
};

GradedRankVector formRanks(const ModulusPair& pair);

/// The wedge pairing M-Omega^s(a) x M-Omega^t(b) -> M-Omega^{s+t}(a ⊗ b)
/// after block inclusion of the variables, for P- and M-Omega: basis pairs
/// go bijectively onto the target basis, ranks satisfy the Vandermonde
/// identity, MO twists multiply, and swapping factors costs (-1)^{st}.
VerificationReport kunnethCheck(const ModulusPair& a, const ModulusPair& b, int qMax);

}  // namespace modhodge
