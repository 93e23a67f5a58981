#pragma once

// Hook lengths, p-power diagrams and the row/column form of the James-Mathas
// irreducibility test.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "pblock/partition.hpp"

namespace pblock {

/// A tableau of shape lambda; row i (0-based) has lambda_{i+1} entries.
using Tableau = std::vector<std::vector<int>>;

/// h(i,j) = lambda_i - i + lambda'_j - j + 1 at every node.
inline Tableau hook_lengths(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  Tableau out;
  for (int i = 1; i <= lambda.length(); ++i) {
    std::vector<int> row;
    for (int j = 1; j <= lambda.part(i); ++j)
      row.push_back(lambda.part(i) - i + conj.part(j) - j + 1);
    out.push_back(std::move(row));
  }
  return out;
}

/// Exponent of the largest power of p dividing h > 0.
inline int nu_p(int h, int p) {
  if (h <= 0) throw std::invalid_argument("nu_p needs a positive argument");
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  int e = 0;
  while (h % p == 0) {
    h /= p;
    ++e;
  }
  return e;
}

inline Tableau p_power_diagram(const Partition& lambda, int p) {
  Tableau t = hook_lengths(lambda);
  for (auto& row : t)
    for (int& h : row) h = nu_p(h, p);
  return t;
}

/// For every node with nu_p(h) > 0, either its row or its column of the
/// p-power diagram is constant.
inline bool is_jm_direct(const Partition& lambda, int p) {
  const Tableau d = p_power_diagram(lambda, p);
  const Partition conj = conjugate(lambda);
  auto at = [&](int i, int j) {
    return d[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  };
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      if (at(i, j) == 0) continue;
      bool row_equal = true;
      for (int c = 2; c <= lambda.part(i) && row_equal; ++c) row_equal = at(i, c) == at(i, 1);
      if (row_equal) continue;
      bool col_equal = true;
      for (int r = 2; r <= conj.part(j) && col_equal; ++r) col_equal = at(r, j) == at(1, j);
      if (!col_equal) return false;
    }
  }
  return true;
}

}  // namespace pblock
