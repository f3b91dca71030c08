#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "modhodge/index_set.hpp"
#include "modhodge/laurent.hpp"
#include "modhodge/modulus.hpp"

namespace modhodge {

/// Differential q-form sum_T c_T e_T on A[1/f], A = Q[x_1..x_n]. The frame
/// pair fixes the basis: e_j = dlog x_j for j in supp(r), e_j = dx_j
/// otherwise, and e_T = e_{t1} ^ ... ^ e_{tq} for t1 < ... < tq.
class LogForm {
 public:
  using CoeffMap = std::map<IndexSet, LaurentPoly>;

  LogForm() = default;
  LogForm(ModulusPair frame, int degree);

  static LogForm scalar(const ModulusPair& frame, const LaurentPoly& c);
  static LogForm basisElement(const ModulusPair& frame, IndexSet slots,
                              const LaurentPoly& coefficient);
  static LogForm basisElement(const ModulusPair& frame, IndexSet slots);
  /// dlog x_j and dx_j written in the frame.
  static LogForm dlogVariable(const ModulusPair& frame, std::size_t j);
  static LogForm dVariable(const ModulusPair& frame, std::size_t j);

  const ModulusPair& frame() const { return frame_; }
  std::size_t nvars() const { return frame_.vars(); }
  int degree() const { return degree_; }
  const CoeffMap& coefficients() const { return coeffs_; }
  LaurentPoly coefficient(IndexSet slots) const;
  bool isZero() const { return coeffs_.empty(); }

  /// Adds c * e_T.
  void addTerm(IndexSet slots, const LaurentPoly& c);

  /// Same form written against another frame on the same variables.
  LogForm inFrame(const ModulusPair& frame) const;
  /// Same form written with every e_j = dlog x_j.
  LogForm fullLog() const;

  /// Multidegree of x^c e_T is c + 1_{T \ S}; defined when every term has
  /// the same multidegree. Zero forms have no multidegree.
  std::optional<ExponentVector> multidegree() const;

  /// Splits into multihomogeneous components keyed by multidegree.
  std::map<ExponentVector, LogForm> homogeneousParts() const;

  LogForm& operator+=(const LogForm& other);
  LogForm& operator-=(const LogForm& other);
  friend LogForm operator+(LogForm a, const LogForm& b) { return a += b; }
  friend LogForm operator-(LogForm a, const LogForm& b) { return a -= b; }
  LogForm operator-() const;
  LogForm scaled(const Rational& c) const;
  LogForm times(const LaurentPoly& p) const;

  friend bool operator==(const LogForm& a, const LogForm& b);

  std::string toString() const;
  /// Parses `(poly) * dlog(x1) ^ d(x2) + ...` and rewrites in the given frame.
  static LogForm parse(std::string_view text, const ModulusPair& frame);

 private:
  void requireCompatible(const LogForm& other) const;

  ModulusPair frame_;
  int degree_ = 0;
  CoeffMap coeffs_;
};

LogForm wedge(const LogForm& a, const LogForm& b);
LogForm exteriorDerivative(const LogForm& w);
/// dlog of c x^a in the given frame. Throws UnsupportedError for
/// non-monomial input.
LogForm dlog(const LaurentPoly& unitMonomial, const ModulusPair& frame);
/// d of a function, as a 1-form in the frame.
LogForm differential(const LaurentPoly& f, const ModulusPair& frame);

}  // namespace modhodge
