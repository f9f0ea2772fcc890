#include "snc/smith.hpp"

#include <cassert>
#include <utility>

namespace snc {

namespace {

// Locate the nonzero entry of least absolute value in the submatrix with
// corner (t, t). Ties break by row then column, for determinism.
bool find_pivot(const IntMatrix& a, Eigen::Index t, Eigen::Index& pi, Eigen::Index& pj) {
  bool found = false;
  BigInt best;
  for (Eigen::Index i = t; i < a.rows(); ++i) {
    for (Eigen::Index j = t; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      BigInt v = abs(a(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const Eigen::Index rows = a.rows(), cols = a.cols();

#ifndef NDEBUG
  IntMatrix u = IntMatrix::Zero(rows, rows), v = IntMatrix::Zero(cols, cols);
  for (Eigen::Index i = 0; i < rows; ++i) u(i, i) = 1;
  for (Eigen::Index j = 0; j < cols; ++j) v(j, j) = 1;
#define SNC_ROW_OP(op) op
#define SNC_COL_OP(op) op
#else
#define SNC_ROW_OP(op)
#define SNC_COL_OP(op)
#endif

  Eigen::Index t = 0;
  while (t < rows && t < cols) {
    Eigen::Index pi, pj;
    if (!find_pivot(a, t, pi, pj)) break;
    if (pi != t) {
      a.row(t).swap(a.row(pi));
      SNC_ROW_OP(u.row(t).swap(u.row(pi)));
    }
    if (pj != t) {
      a.col(t).swap(a.col(pj));
      SNC_COL_OP(v.col(t).swap(v.col(pj)));
    }

    for (;;) {
      // Clear column t below the pivot.
      bool dirty = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t).is_zero()) continue;
        BigInt q = a(i, t) / a(t, t);
        if (!q.is_zero()) {
          a.row(i) -= a.row(t) * q;
          SNC_ROW_OP(u.row(i) -= u.row(t) * q);
        }
        if (!a(i, t).is_zero()) {
          // Remainder is strictly smaller than the pivot; promote it.
          a.row(t).swap(a.row(i));
          SNC_ROW_OP(u.row(t).swap(u.row(i)));
          dirty = true;
        }
      }
      if (dirty) continue;
      // Clear row t right of the pivot.
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j).is_zero()) continue;
        BigInt q = a(t, j) / a(t, t);
        if (!q.is_zero()) {
          a.col(j) -= a.col(t) * q;
          SNC_COL_OP(v.col(j) -= v.col(t) * q);
        }
        if (!a(t, j).is_zero()) {
          a.col(t).swap(a.col(j));
          SNC_COL_OP(v.col(t).swap(v.col(j)));
          dirty = true;
        }
      }
      if (dirty) continue;
      // Pivot must divide every remaining entry for the diagonal to be
      // divisibility-ordered; fold in an offending row and redo.
      bool fixed = true;
      for (Eigen::Index i = t + 1; i < rows && fixed; ++i) {
        for (Eigen::Index j = t + 1; j < cols && fixed; ++j) {
          if (!(a(i, j) % a(t, t)).is_zero()) {
            a.row(t) += a.row(i);
            SNC_ROW_OP(u.row(t) += u.row(i));
            fixed = false;
          }
        }
      }
      if (fixed) break;
    }
    ++t;
  }

  SmithResult out;
  out.rank = static_cast<int>(t);
  for (Eigen::Index k = 0; k < t; ++k) {
    BigInt d = a(k, k);
    if (d < BigInt(0)) {
      d = -d;
      a.row(k) = -a.row(k);
      SNC_ROW_OP(u.row(k) = -u.row(k));
    }
    out.diagonal.push_back(d);
  }

#ifndef NDEBUG
  IntMatrix check = u * m * v;
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      BigInt expect = (i == j && i < t) ? out.diagonal[static_cast<size_t>(i)] : BigInt(0);
      assert(check(i, j) == expect && "smith transforms are not unimodular");
    }
  }
#endif
#undef SNC_ROW_OP
#undef SNC_COL_OP

  return out;
}

int rank_of(const IntMatrix& m) {
  // Fraction-free (Bareiss) elimination; exact and much cheaper than a full
  // Smith reduction when only the rank is needed.
  IntMatrix a = m;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  BigInt prev(1);
  Eigen::Index t = 0;
  while (t < rows && t < cols) {
    Eigen::Index pi, pj;
    if (!find_pivot(a, t, pi, pj)) break;
    if (pi != t) a.row(t).swap(a.row(pi));
    if (pj != t) a.col(t).swap(a.col(pj));
    for (Eigen::Index i = t + 1; i < rows; ++i) {
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        a(i, j) = (a(t, t) * a(i, j) - a(i, t) * a(t, j)) / prev;
      }
      a(i, t) = BigInt(0);
    }
    prev = a(t, t);
    ++t;
  }
  return static_cast<int>(t);
}

}  // namespace snc
