#include "modhodge/graded.hpp"

#include <map>
#include <tuple>

#include "modhodge/errors.hpp"
#include "modhodge/linalg.hpp"

namespace modhodge {

MonomialRing MonomialRing::polynomial(std::size_t n) {
  return MonomialRing(std::vector<VarRole>(n, VarRole::Polynomial));
}

MonomialRing MonomialRing::laurent(std::size_t n) {
  return MonomialRing(std::vector<VarRole>(n, VarRole::Laurent));
}

MonomialRing MonomialRing::localizedAt(IndexSet vars) const {
  MonomialRing out(*this);
  for (int j : vars.elements()) out.roles_.at(j) = VarRole::Laurent;
  return out;
}

MonomialRing MonomialRing::pinnedAt(std::size_t j) const {
  MonomialRing out(*this);
  out.roles_.at(j) = VarRole::Pinned;
  return out;
}

bool MonomialRing::admits(const ExponentVector& s) const {
  if (s.size() != roles_.size()) throw DimensionError("exponent does not match ring");
  for (std::size_t j = 0; j < roles_.size(); ++j) {
    switch (roles_[j]) {
      case VarRole::Polynomial:
        if (s[j] < 0) return false;
        break;
      case VarRole::Pinned:
        if (s[j] != 0) return false;
        break;
      case VarRole::Laurent:
        break;
    }
  }
  return true;
}

bool MonomialRing::contains(const LaurentPoly& p) const {
  for (const auto& [e, c] : p.terms())
    if (!admits(e)) return false;
  return true;
}

GradedSubmodule::GradedSubmodule(MonomialRing ring, ModulusPair frame, int degree,
                                 std::vector<LogForm> generators)
    : ring_(std::move(ring)), frame_(std::move(frame)), degree_(degree) {
  if (ring_.nvars() != frame_.vars()) throw DimensionError("ring and frame differ in variables");
  for (auto& g : generators) {
    if (g.isZero()) continue;
    if (g.degree() != degree_ || g.nvars() != frame_.vars())
      throw DimensionError("generator does not match the module");
    auto d = g.multidegree();
    if (!d) throw PreconditionError("generator is not multihomogeneous: " + g.toString());
    generatorDegrees_.push_back(*d);
    generators_.push_back(g.inFrame(frame_));
  }
}

std::vector<LogForm> GradedSubmodule::spanningForms(const ExponentVector& multidegree) const {
  std::vector<LogForm> out;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const ExponentVector s = multidegree - generatorDegrees_[i];
    if (!ring_.admits(s)) continue;
    out.push_back(generators_[i].times(LaurentPoly::monomial(s)));
  }
  return out;
}

ExponentVector Summand::shiftedDegree(const ExponentVector& commonDegree) const {
  return shift ? commonDegree + *shift : commonDegree;
}

std::vector<LogForm> Summand::piece(const ExponentVector& commonDegree) const {
  const ExponentVector target = shiftedDegree(commonDegree);
  std::vector<LogForm> out;
  if (!toCommon) {
    for (const auto& f : module.spanningForms(target)) out.push_back(f.fullLog());
    return out;
  }
  const auto source = toCommon->preimageExponent(target);
  if (!source) return out;
  for (const auto& f : module.spanningForms(*source)) out.push_back(toCommon->apply(f));
  return out;
}

bool DegreeAnalysis::exact() const {
  if (!wellDefined || !squaresToZero) return false;
  for (long h : cohomology)
    if (h != 0) return false;
  return true;
}

GradedComplex::GradedComplex(std::size_t commonVars, std::vector<GradedTerm> terms,
                             std::vector<GradedMap> maps)
    : commonVars_(commonVars), terms_(std::move(terms)), maps_(std::move(maps)) {
  if (!terms_.empty() && maps_.size() + 1 != terms_.size())
    throw DimensionError("a complex with k terms needs k-1 maps");
}

std::vector<TermElement> GradedComplex::spanningElements(std::size_t k,
                                                         const ExponentVector& degree) const {
  std::vector<TermElement> out;
  const auto& summands = terms_[k].summands;
  for (std::size_t s = 0; s < summands.size(); ++s) {
    for (const auto& f : summands[s].piece(degree)) {
      TermElement element;
      for (std::size_t t = 0; t < summands.size(); ++t)
        element.push_back(t == s ? f : LogForm(f.frame(), f.degree()));
      out.push_back(std::move(element));
    }
  }
  return out;
}

TermElement GradedComplex::applyMap(std::size_t k, const TermElement& element) const {
  TermElement total;
  for (std::size_t s = 0; s < element.size(); ++s) {
    if (element[s].isZero()) continue;
    TermElement image = maps_[k](s, element[s]);
    if (total.empty()) {
      total = std::move(image);
      continue;
    }
    for (std::size_t t = 0; t < image.size(); ++t) total[t] += image[t];
  }
  if (total.empty()) {
    const std::size_t targets = terms_[k + 1].summands.size();
    const ModulusPair frame = ModulusPair::reduced(commonVars_);
    for (std::size_t t = 0; t < targets; ++t) total.emplace_back(frame, 0);
  }
  return total;
}

namespace {

using Key = std::tuple<std::size_t, IndexSet, ExponentVector>;

std::vector<std::map<Key, Rational>> vectorize(const std::vector<TermElement>& elements) {
  std::vector<std::map<Key, Rational>> out;
  for (const auto& element : elements) {
    std::map<Key, Rational> v;
    for (std::size_t s = 0; s < element.size(); ++s) {
      const LogForm full = element[s].fullLog();
      for (const auto& [slots, c] : full.coefficients())
        for (const auto& [e, value] : c.terms()) v[{s, slots, e}] += value;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rankOf(const std::vector<std::map<Key, Rational>>& vectors) {
  std::map<Key, std::size_t> columns;
  for (const auto& v : vectors)
    for (const auto& [k, value] : v)
      if (value != 0) columns.emplace(k, 0);
  if (columns.empty()) return 0;
  std::size_t idx = 0;
  for (auto& [k, c] : columns) c = idx++;
  RationalMatrix m;
  for (const auto& v : vectors) {
    std::vector<Rational> row(columns.size());
    bool nonzero = false;
    for (const auto& [k, value] : v) {
      if (value == 0) continue;
      row[columns.at(k)] = value;
      nonzero = true;
    }
    if (nonzero) m.push_back(std::move(row));
  }
  return rank(m);
}

bool allZero(const TermElement& element) {
  for (const auto& f : element)
    if (!f.isZero()) return false;
  return true;
}

}  // namespace

std::string describe(const TermElement& element) {
  std::string out = "[";
  for (std::size_t s = 0; s < element.size(); ++s) {
    if (s) out += ", ";
    out += element[s].toString();
  }
  return out + "]";
}

std::size_t spanRank(const std::vector<TermElement>& elements) { return rankOf(vectorize(elements)); }

std::size_t spanRank(const std::vector<LogForm>& forms) {
  std::vector<TermElement> elements;
  for (const auto& f : forms) elements.push_back({f});
  return spanRank(elements);
}

bool inSpan(const std::vector<LogForm>& forms, const LogForm& candidate) {
  if (candidate.isZero()) return true;
  std::vector<LogForm> extended(forms);
  extended.push_back(candidate);
  return spanRank(extended) == spanRank(forms);
}

DegreeAnalysis GradedComplex::analyze(const ExponentVector& degree) const {
  DegreeAnalysis result;
  result.degree = degree;
  const std::size_t count = terms_.size();
  std::vector<std::vector<TermElement>> spans(count);
  for (std::size_t k = 0; k < count; ++k) {
    spans[k] = spanningElements(k, degree);
    result.dims.push_back(spanRank(spans[k]));
  }
  for (std::size_t k = 0; k + 1 < count; ++k) {
    std::vector<TermElement> images;
    for (const auto& element : spans[k]) images.push_back(applyMap(k, element));
    result.ranks.push_back(spanRank(images));

    std::vector<TermElement> combined(spans[k + 1]);
    combined.insert(combined.end(), images.begin(), images.end());
    if (spanRank(combined) != result.dims[k + 1] && result.wellDefined) {
      result.wellDefined = false;
      for (const auto& image : images) {
        std::vector<TermElement> probe(spans[k + 1]);
        probe.push_back(image);
        if (spanRank(probe) != result.dims[k + 1]) {
          result.witness = "image " + describe(image) + " leaves term " + std::to_string(k + 1) +
                           " at degree " + degree.toString();
          break;
        }
      }
    }
    if (k + 2 < count && result.squaresToZero) {
      for (const auto& image : images) {
        const TermElement twice = applyMap(k + 1, image);
        if (!allZero(twice)) {
          result.squaresToZero = false;
          if (result.witness.empty())
            result.witness = "d∘d nonzero on " + describe(image) + " at degree " + degree.toString();
          break;
        }
      }
    }
  }
  for (std::size_t k = 0; k < count; ++k) {
    long h = static_cast<long>(result.dims[k]);
    if (k < result.ranks.size()) h -= static_cast<long>(result.ranks[k]);
    if (k > 0) h -= static_cast<long>(result.ranks[k - 1]);
    result.cohomology.push_back(h);
    if (h != 0 && result.witness.empty())
      result.witness = "H^" + std::to_string(k) + " = " + std::to_string(h) + " at degree " +
                       degree.toString();
  }
  return result;
}

}  // namespace modhodge
