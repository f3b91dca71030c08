#pragma once

#include "modhodge/form_module.hpp"
#include "modhodge/graded.hpp"
#include "modhodge/report.hpp"

namespace modhodge {

/// The three rings over A = Q[x_1..x_n] with the cube coordinate appended
/// as variable n+1: A[t] with modulus f, A[1/t] in the coordinate u = 1/t
/// with modulus f*u, and A[t, 1/t] with modulus f.
enum class CubeChart { Poly, InvPoly, Laurent };

struct CubeRing {
  ModulusPair base;
  CubeChart which = CubeChart::Poly;

  std::size_t vars() const { return base.vars() + 1; }
  std::size_t cubeIndex() const { return base.vars(); }
  ModulusPair pair() const;
  MonomialRing ring() const;
  FormModuleSpec spec(FormKind kind, int q) const;
};

/// w = alpha + beta ^ tau, tau = e_{n+1} (dt, or dlog u on the A[1/t] chart).
struct CubeDecomposition {
  LogForm alpha;
  LogForm beta;
};

/// Splits a form of the given cube ring. Throws MembershipError if w is not
/// in the claimed module.
CubeDecomposition decompose(const LogForm& w, const CubeRing& ring, FormKind kind);
LogForm reconstruct(const CubeDecomposition& parts, const CubeRing& ring);

/// u = 1/t, as a substitution from the A[1/t] chart into (x, t).
MonomialSubstitution inverseCubeCoordinate(std::size_t baseVars);

/// 0 -> M(A) -> M(A[t]) + M(A[1/t]) -> M(A[t,1/t]) -> 0 in the common
/// coordinates (x, t), with maps w -> (w, w) and (a, b) -> b - a.
GradedComplex cubeComplex(const ModulusPair& pair, int q, FormKind kind);

/// Section of the difference map: a monomial basis form goes to (-w, 0)
/// when it lies in the A[t] summand and to (0, w) otherwise.
TermElement cubeSplitting(const GradedComplex& complex, const LogForm& w,
                          const ExponentVector& degree);

/// Exactness and splitting on the box [-window, window]^{n+1}, for both
/// P-Omega and M-Omega.
VerificationReport verifyCubeSequence(const ModulusPair& pair, int q, int window);

}  // namespace modhodge
