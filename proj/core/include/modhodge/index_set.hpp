#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace modhodge {

/// Subset of {0, ..., 31} stored as a bitmask. Used for the index sets T of
/// wedge basis elements e_T and for supports of modulus exponents.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}
  static IndexSet of(std::initializer_list<int> indices);
  static IndexSet fromVector(const std::vector<int>& indices);
  static constexpr IndexSet range(int n) {
    return IndexSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr IndexSet with(int i) const { return IndexSet(bits_ | (1u << i)); }
  constexpr IndexSet without(int i) const { return IndexSet(bits_ & ~(1u << i)); }
  constexpr IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
  constexpr IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
  constexpr IndexSet minus(IndexSet o) const { return IndexSet(bits_ & ~o.bits_); }
  constexpr bool disjoint(IndexSet o) const { return (bits_ & o.bits_) == 0; }
  constexpr bool subsetOf(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }

  /// Number of elements strictly smaller than i.
  constexpr int rank(int i) const { return std::popcount(bits_ & ((1u << i) - 1u)); }

  std::vector<int> elements() const;

  friend constexpr bool operator==(IndexSet, IndexSet) = default;
  /// Orders by size first, then lexicographically on the sorted elements.
  friend std::strong_ordering operator<=>(IndexSet a, IndexSet b);

  std::string toString() const;

 private:
  std::uint32_t bits_ = 0;
};

/// All q-element subsets of {0..n-1} in the canonical order.
std::vector<IndexSet> subsetsOfSize(int n, int q);

/// All subsets of {0..n-1}.
std::vector<IndexSet> allSubsets(int n);

/// Sign of the permutation sorting the concatenation (sorted a, sorted b).
/// Returns 0 when a and b intersect.
int wedgeSign(IndexSet a, IndexSet b);

long binomial(int n, int k);

}  // namespace modhodge
