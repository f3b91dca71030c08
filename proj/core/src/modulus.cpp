#include "modhodge/modulus.hpp"

#include "modhodge/errors.hpp"

namespace modhodge {

ModulusPair::ModulusPair(ExponentVector r) : r_(std::move(r)) {
  if (r_.size() > 31) throw DimensionError("at most 31 variables are supported");
  for (std::size_t j = 0; j < r_.size(); ++j) {
    if (r_[j] < 0) throw DomainError("modulus exponent " + r_.toString() + " has a negative entry");
    if (r_[j] > 0) support_ = support_.with(static_cast<int>(j));
  }
}

ModulusPair ModulusPair::reduced(std::size_t n) {
  ExponentVector ones(n);
  for (std::size_t j = 0; j < n; ++j) ones[j] = 1;
  return ModulusPair(ones);
}

ExponentVector ModulusPair::supportIndicator() const { return radicalOfMonomial(r_); }

ModulusPair ModulusPair::reducedAt(std::size_t j) const {
  if (!inSupport(j)) throw DomainError("index " + std::to_string(j) + " is not in the support");
  ExponentVector r = r_;
  --r[j];
  return ModulusPair(r);
}

ModulusPair ModulusPair::restrictedAway(std::size_t j) const {
  std::vector<int> kept;
  for (std::size_t k = 0; k < r_.size(); ++k)
    if (k != j) kept.push_back(r_[k]);
  return ModulusPair(ExponentVector(std::move(kept)));
}

std::string ModulusPair::toString() const {
  return "(n=" + std::to_string(vars()) + ", r=" + r_.toString() + ")";
}

ModulusRing moRing(const ModulusPair& pair) {
  return {pair, MonomialFractionalIdeal{pair.supportIndicator() - pair.modulusExp()}};
}

bool moMember(const LaurentPoly& p, const ModulusPair& pair) {
  return fracIdealMember(p, moRing(pair).generator);
}

ModulusPair tensorPair(const ModulusPair& a, const ModulusPair& b) {
  return ModulusPair(a.modulusExp().concat(b.modulusExp()));
}

int minimalModulusMultiple(const LaurentPoly& p, const ModulusPair& pair) {
  if (p.nvars() != pair.vars()) throw DimensionError("polynomial and pair differ in variables");
  int bound = 1;
  for (const auto& [e, c] : p.terms())
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] >= 0) continue;
      if (!pair.inSupport(j))
        throw NotAmbientError("pole along x" + std::to_string(j + 1) + " outside the support");
      // need 1 - m r_j <= e_j
      const int r = pair.modulusExp()[j];
      bound = std::max(bound, (1 - e[j] + r - 1) / r);
    }
  for (int m = 1; m <= bound; ++m)
    if (moMember(p, pair.scaled(m))) return m;
  throw std::logic_error("membership did not stabilise at the predicted multiple");
}

}  // namespace modhodge
