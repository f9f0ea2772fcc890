// Smith normal form of integer matrices.

#ifndef SNC_SMITH_HPP
#define SNC_SMITH_HPP

#include <vector>

#include "snc/matrix.hpp"

namespace snc {

struct SmithResult {
  /// Positive diagonal entries d1 | d2 | ... | dr.
  std::vector<BigInt> diagonal;
  /// Rank of the input matrix (= diagonal.size()).
  int rank = 0;
};

/// Diagonalize m by unimodular row and column operations. Pivoting is by
/// least absolute value, which keeps entry growth in check; the diagonal
/// is normalized to be positive and divisibility-ordered.
///
/// In debug builds the accumulated transforms are re-multiplied against the
/// input to confirm U * m * V equals the diagonal matrix.
SmithResult smith_normal_form(const IntMatrix& m);

/// Rank of m over the rationals.
int rank_of(const IntMatrix& m);

}  // namespace snc

#endif  // SNC_SMITH_HPP
