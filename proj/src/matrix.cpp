#include "snc/matrix.hpp"

#include <ostream>

namespace snc {

std::ostream& operator<<(std::ostream& os, const BigInt& x) {
  return os << x.value();
}

bool is_zero_matrix(const IntMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

}  // namespace snc
