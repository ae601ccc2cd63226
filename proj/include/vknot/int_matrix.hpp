#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vknot/errors.hpp"

namespace vknot {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) : rows_(rows.size()) {
    cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix rows");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  long long& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  long long operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  long long at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    return (*this)(i, j);
  }

  /// Copy with row `r` and column `c` deleted.
  IntMatrix without(std::size_t r, std::size_t c) const {
    IntMatrix m(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
        if (j == c) continue;
        m(mi, mj++) = (*this)(i, j);
      }
      ++mi;
    }
    return m;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<long long> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with 128-bit intermediates. The
/// empty matrix has determinant 1. Throws DimensionMismatch for non-square input and
/// std::overflow_error if a leading minor leaves the 64-bit range.
inline long long int_det(const IntMatrix& m) {
  if (!m.square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<__int128> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  auto at = [&](std::size_t i, std::size_t j) -> __int128& { return a[i * n + j]; };
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 v = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("determinant intermediate overflows 64 bits");
        at(i, j) = v;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * static_cast<long long>(at(n - 1, n - 1));
}

/// |det S| for a mock Seifert matrix S.
inline long long mock_det(const IntMatrix& s) {
  const long long d = int_det(s);
  return d < 0 ? -d : d;
}

/// [[S0, x], [y^T, a]].
inline IntMatrix bordered(const IntMatrix& s0, const std::vector<long long>& x, const std::vector<long long>& y, long long a) {
  if (!s0.square() || x.size() != s0.rows() || y.size() != s0.rows())
    throw DimensionMismatch("bordered matrix needs square S0 and columns of matching length");
  const std::size_t n = s0.rows();
  IntMatrix m(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = s0(i, j);
    m(i, n) = x[i];
    m(n, i) = y[i];
  }
  m(n, n) = a;
  return m;
}

/// Checks det S+ - det S- == 2 det S0 for S+ = [[S0,x],[y^T,a]] and S- = [[S0,x],[y^T,a-2]].
inline bool skein_block_check(const IntMatrix& s0, const std::vector<long long>& x, const std::vector<long long>& y, long long a) {
  const long long plus = int_det(bordered(s0, x, y, a));
  const long long minus = int_det(bordered(s0, x, y, a - 2));
  return plus - minus == 2 * int_det(s0);
}

/// Reads one row per non-empty line of space-separated integers; '#' starts a comment.
inline IntMatrix read_int_matrix(std::istream& in) {
  std::vector<std::vector<long long>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw std::invalid_argument("line " + std::to_string(line_no) + ": not an integer: '" + tok + "'");
      row.push_back(v);
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw DimensionMismatch("line " + std::to_string(line_no) + ": row length " + std::to_string(row.size()) +
                              " differs from " + std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

inline void write_int_matrix(std::ostream& out, const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
}

}  // namespace vknot
