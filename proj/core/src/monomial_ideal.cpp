#include "modhodge/monomial_ideal.hpp"

#include "modhodge/errors.hpp"

namespace modhodge {

ExponentVector radicalOfMonomial(const ExponentVector& r) {
  ExponentVector out(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j] < 0) throw DomainError("monomial exponent " + r.toString() + " has a negative entry");
    out[j] = r[j] > 0 ? 1 : 0;
  }
  return out;
}

bool fracIdealMember(const LaurentPoly& p, const MonomialFractionalIdeal& ideal) {
  if (p.nvars() != ideal.nvars())
    throw DimensionError("ideal and polynomial live in different rings");
  for (const auto& [e, c] : p.terms())
    if (!e.dominates(ideal.generatorExponent)) return false;
  return true;
}

}  // namespace modhodge
