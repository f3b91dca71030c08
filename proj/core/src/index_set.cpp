#include "modhodge/index_set.hpp"

#include <algorithm>

namespace modhodge {

IndexSet IndexSet::of(std::initializer_list<int> indices) {
  IndexSet s;
  for (int i : indices) s = s.with(i);
  return s;
}

IndexSet IndexSet::fromVector(const std::vector<int>& indices) {
  IndexSet s;
  for (int i : indices) s = s.with(i);
  return s;
}

std::vector<int> IndexSet::elements() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::strong_ordering operator<=>(IndexSet a, IndexSet b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (a == b) return std::strong_ordering::equal;
  // Equal sizes: the set holding the lowest differing element sorts first.
  const std::uint32_t lowest = (a.bits() ^ b.bits()) & (~(a.bits() ^ b.bits()) + 1u);
  return (a.bits() & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string IndexSet::toString() const {
  std::string out = "{";
  bool first = true;
  for (int i : elements()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::vector<IndexSet> subsetsOfSize(int n, int q) {
  std::vector<IndexSet> out;
  if (q < 0 || q > n) return out;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
    if (std::popcount(bits) == q) out.emplace_back(bits);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndexSet> allSubsets(int n) {
  std::vector<IndexSet> out;
  for (int q = 0; q <= n; ++q) {
    auto level = subsetsOfSize(n, q);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

int wedgeSign(IndexSet a, IndexSet b) {
  if (!a.disjoint(b)) return 0;
  int inversions = 0;
  for (std::uint32_t bits = a.bits(); bits; bits &= bits - 1) inversions += b.rank(std::countr_zero(bits));
  return inversions % 2 == 0 ? 1 : -1;
}

long binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  long value = 1;
  for (int i = 1; i <= k; ++i) value = value * (n - k + i) / i;
  return value;
}

}  // namespace modhodge
