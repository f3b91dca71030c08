#pragma once

#include <ostream>
#include <random>

#include "modhodge/laurent.hpp"
#include "modhodge/log_form.hpp"
#include "modhodge/modulus.hpp"

namespace modhodge {

inline void PrintTo(const LaurentPoly& p, std::ostream* os) { *os << p.toString(); }
inline void PrintTo(const LogForm& w, std::ostream* os) { *os << w.toString(); }
inline void PrintTo(const ExponentVector& e, std::ostream* os) { *os << e.toString(); }
inline void PrintTo(const ModulusPair& p, std::ostream* os) { *os << p.toString(); }

}  // namespace modhodge

namespace modhodge::testing {

/// Seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational() {
    const int num = integer(-9, 9);
    return makeRational(num == 0 ? 1 : num, integer(1, 4));
  }

  ExponentVector exponent(std::size_t n, int lo, int hi) {
    ExponentVector e(n);
    for (std::size_t j = 0; j < n; ++j) e[j] = integer(lo, hi);
    return e;
  }

  LaurentPoly poly(std::size_t n, int terms, int lo, int hi) {
    LaurentPoly p(n);
    for (int t = 0; t < terms; ++t) p += LaurentPoly::monomial(exponent(n, lo, hi), rational());
    return p;
  }

  /// Coefficients with poles of order up to `depth` on the support only.
  LaurentPoly polyWithPolesOn(const ModulusPair& pair, int terms, int depth) {
    LaurentPoly p(pair.vars());
    for (int t = 0; t < terms; ++t) {
      ExponentVector e(pair.vars());
      for (std::size_t j = 0; j < pair.vars(); ++j) e[j] = integer(pair.inSupport(j) ? -depth : 0, 2);
      p += LaurentPoly::monomial(e, rational());
    }
    return p;
  }

  ModulusPair pair(std::size_t n, int rMax) { return ModulusPair(exponent(n, 0, rMax)); }

  LogForm form(const ModulusPair& pair, int q, int terms, int depth) {
    LogForm w(pair, q);
    const auto slots = subsetsOfSize(static_cast<int>(pair.vars()), q);
    for (int t = 0; t < terms; ++t)
      w.addTerm(slots[integer(0, static_cast<int>(slots.size()) - 1)], polyWithPolesOn(pair, 1, depth));
    return w;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace modhodge::testing
