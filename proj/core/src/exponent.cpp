#include "modhodge/exponent.hpp"

#include <numeric>

#include "modhodge/errors.hpp"

namespace modhodge {

namespace {
void requireSameSize(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size())
    throw DimensionError("exponent vectors of length " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
}
}  // namespace

ExponentVector ExponentVector::unit(std::size_t size, std::size_t index) {
  ExponentVector e(size);
  e[index] = 1;
  return e;
}

long ExponentVector::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0L);
}

bool ExponentVector::isZero() const {
  for (int v : entries_)
    if (v != 0) return false;
  return true;
}

bool ExponentVector::isNonnegative() const {
  for (int v : entries_)
    if (v < 0) return false;
  return true;
}

bool ExponentVector::dominates(const ExponentVector& other) const {
  requireSameSize(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] < other.entries_[i]) return false;
  return true;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
  requireSameSize(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& other) {
  requireSameSize(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ExponentVector ExponentVector::operator-() const { return scaled(-1); }

ExponentVector ExponentVector::scaled(int factor) const {
  ExponentVector out(*this);
  for (int& v : out.entries_) v *= factor;
  return out;
}

ExponentVector ExponentVector::concat(const ExponentVector& tail) const {
  std::vector<int> joined(entries_);
  joined.insert(joined.end(), tail.entries_.begin(), tail.entries_.end());
  return ExponentVector(std::move(joined));
}

std::string ExponentVector::toString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

std::vector<ExponentVector> exponentBox(std::size_t size, int lo, int hi) {
  std::vector<ExponentVector> out;
  forEachInBox(size, lo, hi, [&](const ExponentVector& e) { out.push_back(e); });
  return out;
}

}  // namespace modhodge
