#include "modhodge/substitution.hpp"

#include "modhodge/errors.hpp"
#include "modhodge/linalg.hpp"

namespace modhodge {

MonomialSubstitution::MonomialSubstitution(std::size_t targetVars, std::vector<ExponentVector> rows)
    : targetVars_(targetVars), rows_(std::move(rows)) {
  for (const auto& row : rows_)
    if (row.size() != targetVars_) throw DimensionError("substitution row of the wrong length");
}

MonomialSubstitution MonomialSubstitution::identity(std::size_t n) {
  return blockInclusion(n, 0, n);
}

MonomialSubstitution MonomialSubstitution::blockInclusion(std::size_t sourceVars, std::size_t offset,
                                                          std::size_t targetVars) {
  if (offset + sourceVars > targetVars) throw DimensionError("block does not fit");
  std::vector<ExponentVector> rows;
  for (std::size_t k = 0; k < sourceVars; ++k) rows.push_back(ExponentVector::unit(targetVars, offset + k));
  return MonomialSubstitution(targetVars, std::move(rows));
}

ExponentVector MonomialSubstitution::mapExponent(const ExponentVector& c) const {
  if (c.size() != rows_.size()) throw DimensionError("exponent does not match substitution source");
  ExponentVector out(targetVars_);
  for (std::size_t k = 0; k < rows_.size(); ++k)
    if (c[k] != 0) out += rows_[k].scaled(c[k]);
  return out;
}

LaurentPoly MonomialSubstitution::apply(const LaurentPoly& p) const {
  LaurentPoly out(targetVars_);
  for (const auto& [e, c] : p.terms()) out += LaurentPoly::monomial(mapExponent(e), c);
  return out;
}

LogForm MonomialSubstitution::apply(const LogForm& w) const {
  if (w.nvars() != rows_.size()) throw DimensionError("form does not match substitution source");
  const ModulusPair targetFrame = ModulusPair::reduced(targetVars_);
  const LogForm source = w.fullLog();
  LogForm out(targetFrame, w.degree());
  if (w.degree() > static_cast<int>(targetVars_)) return out;
  const auto targets = subsetsOfSize(static_cast<int>(targetVars_), w.degree());
  for (const auto& [slots, c] : source.coefficients()) {
    const LaurentPoly image = apply(c);
    const auto sourceIdx = slots.elements();
    for (IndexSet u : targets) {
      const auto targetIdx = u.elements();
      std::vector<std::vector<int>> minor;
      for (int k : sourceIdx) {
        std::vector<int> row;
        for (int l : targetIdx) row.push_back(rows_[k][l]);
        minor.push_back(std::move(row));
      }
      const long det = integerDeterminant(minor);
      if (det != 0) out.addTerm(u, image * Rational(det));
    }
  }
  return out;
}

std::optional<ExponentVector> MonomialSubstitution::preimageExponent(const ExponentVector& d) const {
  if (d.size() != targetVars_) throw DimensionError("exponent does not match substitution target");
  if (!isInjective()) throw PreconditionError("preimage requires an injective exponent matrix");
  RationalMatrix a(targetVars_, std::vector<Rational>(rows_.size()));
  std::vector<Rational> b(targetVars_);
  for (std::size_t l = 0; l < targetVars_; ++l) {
    for (std::size_t k = 0; k < rows_.size(); ++k) a[l][k] = rows_[k][l];
    b[l] = d[l];
  }
  const auto x = solve(a, b);
  if (!x) return std::nullopt;
  ExponentVector c(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if ((*x)[k].get_den() != 1) return std::nullopt;
    c[k] = static_cast<int>((*x)[k].get_num().get_si());
  }
  return c;
}

bool MonomialSubstitution::isInjective() const {
  RationalMatrix m;
  for (const auto& row : rows_) {
    std::vector<Rational> q;
    for (int v : row) q.emplace_back(v);
    m.push_back(std::move(q));
  }
  return rank(m) == rows_.size();
}

std::optional<MonomialSubstitution> MonomialSubstitution::inverse() const {
  if (rows_.size() != targetVars_) return std::nullopt;
  std::vector<std::vector<int>> m;
  for (const auto& row : rows_) m.push_back(row.entries());
  const long det = integerDeterminant(m);
  if (det != 1 && det != -1) return std::nullopt;
  std::vector<ExponentVector> inv;
  for (std::size_t l = 0; l < targetVars_; ++l) {
    auto c = preimageExponent(ExponentVector::unit(targetVars_, l));
    if (!c) return std::nullopt;
    inv.push_back(*c);
  }
  return MonomialSubstitution(rows_.size(), std::move(inv));
}

MonomialSubstitution MonomialSubstitution::after(const MonomialSubstitution& first) const {
  if (first.targetVars() != sourceVars()) throw DimensionError("substitutions do not compose");
  std::vector<ExponentVector> rows;
  for (const auto& row : first.rows()) rows.push_back(mapExponent(row));
  return MonomialSubstitution(targetVars_, std::move(rows));
}

}  // namespace modhodge
