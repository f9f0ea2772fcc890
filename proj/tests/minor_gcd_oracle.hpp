// Brute-force Smith normal form oracle: the k-th invariant factor is
// gcd(all k x k minors) / gcd(all (k-1) x (k-1) minors).

#ifndef TESTS_MINOR_GCD_ORACLE_HPP
#define TESTS_MINOR_GCD_ORACLE_HPP

#include <algorithm>
#include <vector>

#include "snc/matrix.hpp"

namespace oracle {

inline snc::BigInt determinant(const snc::IntMatrix& m, const std::vector<int>& rows,
                               const std::vector<int>& cols) {
  const size_t n = rows.size();
  if (n == 1) return m(rows[0], cols[0]);
  snc::BigInt det(0);
  int sign = 1;
  for (size_t j = 0; j < n; ++j) {
    std::vector<int> sub_cols;
    for (size_t k = 0; k < n; ++k)
      if (k != j) sub_cols.push_back(cols[k]);
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    snc::BigInt cofactor = m(rows[0], cols[j]) * determinant(m, sub_rows, sub_cols);
    det = (sign > 0) ? det + cofactor : det - cofactor;
    sign = -sign;
  }
  return det;
}

inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

/// gcd of all k x k minors; zero when every minor vanishes.
inline snc::BigInt minor_gcd(const snc::IntMatrix& m, int k) {
  snc::BigInt g(0);
  for (const auto& rs : subsets(static_cast<int>(m.rows()), k))
    for (const auto& cs : subsets(static_cast<int>(m.cols()), k))
      g = abs(gcd(g, determinant(m, rs, cs)));
  return g;
}

inline std::vector<snc::BigInt> smith_diagonal(const snc::IntMatrix& m) {
  std::vector<snc::BigInt> out;
  snc::BigInt prev(1);
  const int bound = static_cast<int>(std::min(m.rows(), m.cols()));
  for (int k = 1; k <= bound; ++k) {
    snc::BigInt g = minor_gcd(m, k);
    if (g == snc::BigInt(0)) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

}  // namespace oracle

#endif  // TESTS_MINOR_GCD_ORACLE_HPP
