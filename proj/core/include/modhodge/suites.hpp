#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modhodge/modulus.hpp"
#include "modhodge/report.hpp"

namespace modhodge {

/// Parameter grid for a batch of certificates.
struct SuiteConfig {
  /// One of suiteNames() or "all".
  std::string suite = "all";
  /// Largest number of affine variables.
  int nMax = 3;
  /// Largest modulus exponent.
  int rMax = 3;
  /// Largest form degree.
  int qMax = 3;
  /// Degree window D for the graded exactness checks.
  int window = 4;
  /// Largest |d| for projective-space twists.
  int twistMax = 6;
  /// Seed for the randomized filtration check.
  std::uint64_t seed = 1;
  /// 0 uses defaultWorkers().
  unsigned workers = 0;

  static SuiteConfig quick(std::string suite);
  static SuiteConfig full(std::string suite);
  /// Throws PreconditionError on an empty grid or a window below 1.
  void validate() const;
};

/// basis, membership, ses-check, cube-check, proj-coh, blowup-check,
/// dvr-check, kunneth-check.
const std::vector<std::string>& suiteNames();

/// Runs every parameter point of the selected suite. Reports come out in a
/// fixed order independent of the worker count.
std::vector<VerificationReport> runSuite(const SuiteConfig& config);

/// MO(A, x^r) against brute-force membership x^{c+r} in rad(x^r) for every
/// c in [-window, window]^n.
VerificationReport moRingFormula(const ModulusPair& pair, int window);

/// P- and M-Omega^q bases have C(n,q) elements for every q, are linearly
/// independent, and lie in the span of the defining generators.
VerificationReport freeBases(const ModulusPair& pair);

/// Exact Čech dimensions against the closed forms, the Euler
/// characteristic, and h^n(d) = h^0(-d-n-1).
VerificationReport projectiveCohomology(int n, int d);

/// R^q f_* O(i) vanishes for q > 0 exactly when i > -n-1, and f_* O(i)
/// is I^i.
VerificationReport linePushforward(int n, int i);

/// A random Laurent form with poles on the support; its least filtration
/// multiple is re-verified by membership at each height-one prime.
VerificationReport filtrationExhaustion(std::uint64_t seed, int index);

}  // namespace modhodge
