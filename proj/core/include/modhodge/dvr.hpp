#pragma once

#include <utility>
#include <vector>

#include "modhodge/report.hpp"

namespace modhodge {

/// Totally ramified extension O_K -> O_L of index e, x = pi^e, with modulus
/// of valuation e*n upstairs. Forms of degree q live on `ambientRank`
/// coordinates: the uniformiser and ambientRank - 1 unit coordinates t_k.
struct DvrModel {
  int e = 1;
  int n = 1;
  int q = 0;
  int ambientRank = 1;

  /// Throws DomainError unless e, n, ambientRank >= 1 and 0 <= q <= ambientRank.
  void validate() const;
};

/// {start + step * k : k >= 0}.
struct ArithmeticProgression {
  long start = 0;
  long step = 1;

  bool contains(long v) const;
  std::vector<long> within(long lo, long hi) const;
};

struct ValuationWindow {
  long lo = 0;
  long hi = 0;
};

struct ValuationImages {
  ArithmeticProgression base;
  ArithmeticProgression cover;
};

/// Valuations of the nonzero elements of MO downstairs and upstairs, both
/// measured in powers of pi.
ValuationImages moValuationImages(const DvrModel& m);

/// (cover image) ∩ eZ = base image on the window, with both sides computed
/// from MO membership and compared with the closed forms. Throws
/// PreconditionError unless the window covers [-en, en].
VerificationReport cartesianCheck(const DvrModel& m, const ValuationWindow& w);

/// M-Omega^q(cover) ⊆ pi^{1-e} MO(cover) P-Omega^q(base) and
/// M-Omega^q(base) = M-Omega^q(cover) ∩ Omega^q(K), on pi-degrees in
/// [-window, window] and unit-coordinate degrees in [-1, 1].
VerificationReport kummerFormCartesian(const DvrModel& m, int window);

}  // namespace modhodge
