#include "modhodge/atlas.hpp"

#include "modhodge/errors.hpp"

namespace modhodge {

BlowupSetup::BlowupSetup(IndexSet center, ModulusPair pair) : center_(center), pair_(std::move(pair)) {
  if (!center_.subsetOf(IndexSet::range(static_cast<int>(pair_.vars()))))
    throw PreconditionError("blow-up center " + center_.toString() + " uses unknown variables");
  if (center_.size() < 2) throw PreconditionError("blow-up center needs at least two coordinates");
}

std::string BlowupSetup::toString() const {
  return "Bl(N=" + center_.toString() + ", r=" + pair_.modulusExp().toString() + ")";
}

namespace {

ModulusPair chartPair(const BlowupSetup& setup, int j) {
  ExponentVector r = setup.pair().modulusExp();
  int total = 0;
  for (int nu : setup.center().elements()) total += r[nu];
  r[j] = total;
  return ModulusPair(r);
}

MonomialSubstitution chartToBase(const BlowupSetup& setup, int j) {
  const std::size_t n = setup.vars();
  std::vector<ExponentVector> rows;
  for (std::size_t k = 0; k < n; ++k) {
    ExponentVector row = ExponentVector::unit(n, k);
    if (setup.center().contains(static_cast<int>(k)) && static_cast<int>(k) != j)
      row -= ExponentVector::unit(n, j);
    rows.push_back(row);
  }
  return MonomialSubstitution(n, std::move(rows));
}

}  // namespace

BlowupChart::BlowupChart(const BlowupSetup& setup, int j)
    : j_(j),
      pair_(chartPair(setup, j)),
      toBase_(chartToBase(setup, j)),
      fromBase_(*chartToBase(setup, j).inverse()) {
  if (!setup.center().contains(j)) throw DomainError("chart index must lie in the center");
}

FormModuleSpec BlowupChart::spec(FormKind kind, int q, IndexSet inverted) const {
  FormModuleSpec s{kind, pair_, q, MonomialRing::polynomial(pair_.vars())};
  return inverted.empty() ? s : s.localizedAt(inverted);
}

std::vector<BlowupChart> blowupCharts(const BlowupSetup& setup) {
  std::vector<BlowupChart> charts;
  for (int j : setup.center().elements()) charts.emplace_back(setup, j);
  return charts;
}

}  // namespace modhodge
