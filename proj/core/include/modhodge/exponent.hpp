#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace modhodge {

/// Integer exponent vector of a Laurent monomial x^a. Length is the number
/// of ambient variables; entries may be negative.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t size) : entries_(size, 0) {}
  ExponentVector(std::initializer_list<int> entries) : entries_(entries) {}
  explicit ExponentVector(std::vector<int> entries) : entries_(std::move(entries)) {}

  static ExponentVector unit(std::size_t size, std::size_t index);

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int& operator[](std::size_t i) { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<int>& entries() const { return entries_; }

  /// Sum of entries.
  long total() const;
  bool isZero() const;
  bool isNonnegative() const;
  /// Componentwise a >= b.
  bool dominates(const ExponentVector& other) const;

  ExponentVector& operator+=(const ExponentVector& other);
  ExponentVector& operator-=(const ExponentVector& other);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
  ExponentVector operator-() const;
  ExponentVector scaled(int factor) const;

  /// Concatenation of variable blocks.
  ExponentVector concat(const ExponentVector& tail) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) {
    return a.entries_ <=> b.entries_;
  }

  std::string toString() const;

 private:
  std::vector<int> entries_;
};

/// Every exponent vector of the given length with entries in [lo, hi],
/// in lexicographic order.
std::vector<ExponentVector> exponentBox(std::size_t size, int lo, int hi);

/// Calls visit(e) for every exponent vector in the box [lo, hi]^size.
template <class Visitor>
void forEachInBox(std::size_t size, int lo, int hi, Visitor&& visit) {
  ExponentVector e(size);
  for (std::size_t i = 0; i < size; ++i) e[i] = lo;
  if (lo > hi) return;
  while (true) {
    visit(static_cast<const ExponentVector&>(e));
    std::size_t i = size;
    while (i > 0) {
      --i;
      if (e[i] < hi) {
        ++e[i];
        break;
      }
      e[i] = lo;
      if (i == 0) return;
    }
    if (size == 0) return;
  }
}

}  // namespace modhodge
