#include "modhodge/cech.hpp"

#include <stdexcept>

#include "modhodge/errors.hpp"
#include "modhodge/linalg.hpp"

namespace modhodge {

long GradedDimTable::at(int degree) const {
  auto it = dims.find(degree);
  return it == dims.end() ? 0 : it->second;
}

Json GradedDimTable::toJson() const {
  Json j = Json::object();
  for (const auto& [k, v] : dims) j[std::to_string(k)] = v;
  return j;
}

namespace {

IndexSet negativeSet(const ExponentVector& a) {
  IndexSet s;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] < 0) s = s.with(static_cast<int>(j));
  return s;
}

CechComplex chartComplex(int n, const ExponentVector& a, bool present) {
  CechComplex c;
  c.n = n;
  c.degree = a;
  const IndexSet negatives = negativeSet(a);
  for (int p = 0; p <= n; ++p) {
    std::vector<IndexSet> level;
    if (present)
      for (IndexSet sigma : subsetsOfSize(n + 1, p + 1))
        if (negatives.subsetOf(sigma)) level.push_back(sigma);
    c.levels.push_back(std::move(level));
  }
  return c;
}

/// Exponent vector with negative set `negatives` and total degree d.
ExponentVector representative(int n, IndexSet negatives, long d) {
  ExponentVector a(n + 1);
  for (int j : negatives.elements()) a[j] = -1;
  const long rest = d - a.total();
  const IndexSet others = IndexSet::range(n + 1).minus(negatives);
  if (rest >= 0) {
    a[others.elements().front()] += static_cast<int>(rest);
  } else {
    a[negatives.elements().front()] += static_cast<int>(rest);
  }
  return a;
}

void accumulate(GradedDimTable& table, const std::vector<long>& h) {
  for (std::size_t p = 0; p < h.size(); ++p)
    if (h[p] != 0) table.dims[static_cast<int>(p)] += h[p];
}

bool acyclic(const std::vector<long>& h) {
  for (long v : h)
    if (v != 0) return false;
  return true;
}

/// Visits every a with every entry in [lo, hi] and |a| = d.
template <class Visitor>
void forEachWithTotal(int size, int lo, int hi, long d, Visitor&& visit) {
  forEachInBox(static_cast<std::size_t>(size), lo, hi, [&](const ExponentVector& a) {
    if (a.total() == d) visit(a);
  });
}

}  // namespace

CechComplex CechComplex::standard(int n, const ExponentVector& a) { return chartComplex(n, a, true); }

std::vector<long> CechComplex::cohomology() const {
  const std::size_t count = levels.size();
  std::vector<std::size_t> ranks(count, 0);
  for (std::size_t p = 0; p + 1 < count; ++p) {
    if (levels[p].empty() || levels[p + 1].empty()) continue;
    RationalMatrix m(levels[p + 1].size(), std::vector<Rational>(levels[p].size()));
    for (std::size_t row = 0; row < levels[p + 1].size(); ++row) {
      const IndexSet target = levels[p + 1][row];
      const auto elems = target.elements();
      for (std::size_t k = 0; k < elems.size(); ++k) {
        const IndexSet face = target.without(elems[k]);
        for (std::size_t col = 0; col < levels[p].size(); ++col)
          if (levels[p][col] == face) m[row][col] = k % 2 == 0 ? 1 : -1;
      }
    }
    ranks[p] = rank(m);
  }
  std::vector<long> h(count);
  for (std::size_t p = 0; p < count; ++p) {
    long v = static_cast<long>(levels[p].size()) - static_cast<long>(ranks[p]);
    if (p > 0) v -= static_cast<long>(ranks[p - 1]);
    h[p] = v;
  }
  return h;
}

GradedDimTable cohomologyDims(int n, int d) {
  if (n < 1) throw DomainError("projective space needs n >= 1");
  if (n > 30) throw DimensionError("dimension too large");
  GradedDimTable table;
  const IndexSet all = IndexSet::range(n + 1);
  for (IndexSet negatives : allSubsets(n + 1)) {
    if (negatives.empty()) {
      if (d < 0) continue;
      forEachWithTotal(n + 1, 0, d, d, [&](const ExponentVector& a) {
        accumulate(table, CechComplex::standard(n, a).cohomology());
      });
    } else if (negatives == all) {
      if (d > -(n + 1)) continue;
      forEachWithTotal(n + 1, d + n, -1, d, [&](const ExponentVector& a) {
        accumulate(table, CechComplex::standard(n, a).cohomology());
      });
    } else {
      // Infinitely many monomials share this complex.
      const auto h = CechComplex::standard(n, representative(n, negatives, d)).cohomology();
      if (!acyclic(h))
        throw std::logic_error("degree class " + negatives.toString() + " is not acyclic");
    }
  }
  for (auto it = table.dims.begin(); it != table.dims.end();)
    it = it->second == 0 ? table.dims.erase(it) : std::next(it);
  return table;
}

LinePushforward blowupLinePushforward(int n, int i, int window) {
  if (n < 1) throw DomainError("the blow-up needs n >= 1");
  LinePushforward result;
  result.n = n;
  result.i = i;
  const IndexSet all = IndexSet::range(n + 1);
  // Sections of O(i) over an intersection of charts are the x^a regular
  // there with |a| >= i.
  const auto complexAt = [&](const ExponentVector& a) {
    return chartComplex(n, a, a.total() >= i).cohomology();
  };

  const int lowest = std::min(i, 0);
  const int highest = std::max(i, 0) + window;
  for (int d = lowest; d <= highest; ++d) result.directImage[d] = 0;

  for (IndexSet negatives : allSubsets(n + 1)) {
    if (negatives.empty()) {
      for (int d = std::max(lowest, 0); d <= highest; ++d) {
        forEachWithTotal(n + 1, 0, d, d, [&](const ExponentVector& a) {
          const auto h = complexAt(a);
          result.directImage[d] += h[0];
          for (std::size_t q = 1; q < h.size(); ++q)
            if (h[q] != 0) throw std::logic_error("polynomial degree class has higher cohomology");
        });
      }
    } else if (negatives == all) {
      for (int d = i; d <= -(n + 1); ++d) {
        forEachWithTotal(n + 1, d + n, -1, d, [&](const ExponentVector& a) {
          const auto h = complexAt(a);
          if (h[0] != 0) result.directImage[d] += h[0];
          for (std::size_t q = 1; q < h.size(); ++q)
            if (h[q] != 0) result.higher.dims[static_cast<int>(q)] += h[q];
        });
      }
    } else {
      const auto h = complexAt(representative(n, negatives, std::max<long>(i, 0)));
      if (!acyclic(h)) throw std::logic_error("degree class " + negatives.toString() + " is not acyclic");
    }
  }
  for (const auto& [d, dim] : result.directImage) {
    const long idealPower = d >= std::max(i, 0) ? binomial(d + n, n) : 0;
    if (dim != idealPower) result.matchesIdealPower = false;
  }
  return result;
}

}  // namespace modhodge
