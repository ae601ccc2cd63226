#pragma once

// Cofactor expansion along the first row; exponential, for small test matrices only.

#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<long long>>;

inline long long laplace_det(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Matrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    total += (j % 2 ? -1 : 1) * m[0][j] * laplace_det(minor);
  }
  return total;
}

}  // namespace oracle
