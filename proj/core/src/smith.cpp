#include "coadjoint/smith.hpp"

#include <cstdlib>
#include <stdexcept>

#include "coadjoint/errors.hpp"

namespace coadjoint {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("Smith form: int64 overflow");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("Smith form: int64 overflow");
  return out;
}

// Work state: D = L M R, with Linv kept equal to L^{-1}.
struct State {
  IntMatrix d, l, linv, r;

  // row_i -= k row_j
  void row_axpy(int i, int j, std::int64_t k) {
    if (k == 0) return;
    for (int c = 0; c < d.cols(); ++c) d(i, c) = checked_sub(d(i, c), checked_mul(k, d(j, c)));
    for (int c = 0; c < l.cols(); ++c) l(i, c) = checked_sub(l(i, c), checked_mul(k, l(j, c)));
    // inverse: col_j += k col_i
    for (int rr = 0; rr < linv.rows(); ++rr)
      linv(rr, j) = checked_sub(linv(rr, j), checked_mul(-k, linv(rr, i)));
  }
  // col_i -= k col_j
  void col_axpy(int i, int j, std::int64_t k) {
    if (k == 0) return;
    for (int rr = 0; rr < d.rows(); ++rr) d(rr, i) = checked_sub(d(rr, i), checked_mul(k, d(rr, j)));
    for (int rr = 0; rr < r.rows(); ++rr) r(rr, i) = checked_sub(r(rr, i), checked_mul(k, r(rr, j)));
  }
  void swap_rows(int i, int j) {
    if (i == j) return;
    d.row(i).swap(d.row(j));
    l.row(i).swap(l.row(j));
    linv.col(i).swap(linv.col(j));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    d.col(i).swap(d.col(j));
    r.col(i).swap(r.col(j));
  }
  void negate_row(int i) {
    d.row(i) *= -1;
    l.row(i) *= -1;
    linv.col(i) *= -1;
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  if (rows == 0 || cols == 0) throw InvalidInput("Smith form of an empty matrix");

  State s{m, IntMatrix::Identity(rows, rows), IntMatrix::Identity(rows, rows),
          IntMatrix::Identity(cols, cols)};
  const int n = std::min(rows, cols);

  for (int t = 0; t < n; ++t) {
    while (true) {
      // smallest nonzero |entry| in the trailing block becomes the pivot
      int pi = -1, pj = -1;
      std::int64_t best = 0;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j) {
          const std::int64_t v = std::llabs(s.d(i, j));
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) break;  // trailing block is zero
      s.swap_rows(t, pi);
      s.swap_cols(t, pj);

      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        s.row_axpy(i, t, s.d(i, t) / s.d(t, t));
        if (s.d(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        s.col_axpy(j, t, s.d(t, j) / s.d(t, t));
        if (s.d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into row t and go again
      int bad = -1;
      for (int i = t + 1; i < rows && bad < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (s.d(i, j) % s.d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      s.row_axpy(t, bad, -1);
    }
    if (s.d(t, t) < 0) s.negate_row(t);
  }
  return {s.l, s.linv, s.r, s.d};
}

std::int64_t determinant(const IntMatrix& m) {
  const int n = static_cast<int>(m.rows());
  if (n != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
  int sign = 1;
  __int128 prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return static_cast<std::int64_t>(sign * a[n - 1][n - 1]);
}

}  // namespace coadjoint
