#include "modhodge/linalg.hpp"

#include <optional>
#include <utility>

#include "modhodge/errors.hpp"

namespace modhodge {

namespace {

std::vector<std::vector<Integer>> clearDenominators(const RationalMatrix& rows) {
  std::vector<std::vector<Integer>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    Integer lcm = 1;
    for (const auto& v : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> scaled;
    scaled.reserve(row.size());
    for (const auto& v : row) scaled.push_back(v.get_num() * (lcm / v.get_den()));
    out.push_back(std::move(scaled));
  }
  return out;
}

}  // namespace

std::size_t rank(const RationalMatrix& rows) {
  if (rows.empty()) return 0;
  auto m = clearDenominators(rows);
  const std::size_t nrows = m.size();
  const std::size_t ncols = m.front().size();
  for (const auto& row : m)
    if (row.size() != ncols) throw DimensionError("ragged matrix");

  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
    std::size_t pivot = r;
    while (pivot < nrows && m[pivot][col] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = col + 1; j < ncols; ++j) {
        m[i][j] = m[r][col] * m[i][j] - m[i][col] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[r][col];
    ++r;
  }
  return r;
}

namespace {

/// Fraction-free Bareiss elimination on 64-bit integers. Returns nullopt if
/// an intermediate value overflows.
std::optional<long> bareissDeterminant(std::vector<std::vector<long>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  long sign = 1;
  long previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        long a = 0, b = 0, difference = 0;
        if (__builtin_mul_overflow(m[i][j], m[k][k], &a) || __builtin_mul_overflow(m[i][k], m[k][j], &b) ||
            __builtin_sub_overflow(a, b, &difference))
          return std::nullopt;
        m[i][j] = difference / previous;
      }
      m[i][k] = 0;
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

long integerDeterminant(const std::vector<std::vector<int>>& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw DimensionError("determinant of a non-square matrix");
  std::vector<std::vector<long>> wide;
  wide.reserve(m.size());
  for (const auto& row : m) wide.emplace_back(row.begin(), row.end());
  if (const auto det = bareissDeterminant(std::move(wide))) return *det;
  RationalMatrix q;
  for (const auto& row : m) {
    std::vector<Rational> qrow;
    for (int v : row) qrow.emplace_back(v);
    q.push_back(std::move(qrow));
  }
  const Rational d = determinant(std::move(q));
  return d.get_num().get_si();
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionError("determinant of a non-square matrix");
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      const Rational factor = m[i][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= factor * m[col][j];
    }
  }
  return det;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t nrows = a.size();
  if (b.size() != nrows) throw DimensionError("right-hand side length mismatch");
  const std::size_t ncols = nrows == 0 ? 0 : a.front().size();
  RationalMatrix m(a);
  for (std::size_t i = 0; i < nrows; ++i) m[i].push_back(b[i]);

  std::vector<std::size_t> pivotCols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
    std::size_t pivot = r;
    while (pivot < nrows && m[pivot][col] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(m[pivot], m[r]);
    const Rational inv = 1 / m[r][col];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || m[i][col] == 0) continue;
      const Rational factor = m[i][col];
      for (std::size_t j = col; j <= ncols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivotCols.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < nrows; ++i)
    if (m[i][ncols] != 0) return std::nullopt;
  std::vector<Rational> x(ncols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivotCols[i]] = m[i][ncols];
  return x;
}

LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m, std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(nvars, 1);
  if (n == 1) return m[0][0];
  LaurentPoly total(nvars);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].isZero()) continue;
    std::vector<std::vector<LaurentPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<LaurentPoly> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    LaurentPoly term = m[0][col] * determinant(minor, nvars);
    if (col % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

}  // namespace modhodge
