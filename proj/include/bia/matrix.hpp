// Dense rational matrices with exact (fraction-free) and floating-point rank.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "bia/error.hpp"
#include "bia/numeric.hpp"

namespace bia {

class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

  /// Horizontal concatenation [a | b]; row counts must agree.
  static RatMat hcat(const RatMat& a, const RatMat& b) {
    if (a.rows() != b.rows()) throw Error(Errc::Domain, "hcat: row mismatch");
    RatMat r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
      for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
      for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
  }

  static RatMat identity(int n) {
    RatMat r(n, n);
    for (int i = 0; i < n; ++i) r.at(i, i) = 1;
    return r;
  }

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

/// Exact rank by Bareiss fraction-free elimination with full pivoting.
/// Rows are first scaled by their denominator lcm, which leaves rank unchanged.
inline int rank_exact(const RatMat& m) {
  const int R = m.rows(), C = m.cols();
  if (R == 0 || C == 0) return 0;
  std::vector<std::vector<Int>> a(R, std::vector<Int>(C));
  for (int i = 0; i < R; ++i) {
    Int l = 1;
    for (int j = 0; j < C; ++j) l = boost::multiprecision::lcm(l, rat_den(m.at(i, j)));
    for (int j = 0; j < C; ++j) a[i][j] = rat_num(m.at(i, j)) * (l / rat_den(m.at(i, j)));
  }
  Int prev = 1;
  int step = 0;
  const int lim = std::min(R, C);
  while (step < lim) {
    int pr = -1, pc = -1;
    for (int i = step; i < R && pr < 0; ++i)
      for (int j = step; j < C; ++j)
        if (a[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr < 0) break;
    std::swap(a[step], a[pr]);
    if (pc != step)
      for (int i = 0; i < R; ++i) std::swap(a[i][step], a[i][pc]);
    for (int i = step + 1; i < R; ++i) {
      for (int j = step + 1; j < C; ++j)
        a[i][j] = (a[step][step] * a[i][j] - a[i][step] * a[step][j]) / prev;
      a[i][step] = 0;
    }
    prev = a[step][step];
    ++step;
  }
  return step;
}

/// Floating-point rank: one-sided Jacobi orthogonalization; singular values are
/// the final column norms, counted above tol * largest.
inline int rank_float(const RatMat& m, double tol = 1e-9) {
  const int R = m.rows(), C = m.cols();
  if (R == 0 || C == 0) return 0;
  std::vector<std::vector<double>> col(C, std::vector<double>(R));
  for (int j = 0; j < C; ++j)
    for (int i = 0; i < R; ++i) col[j][i] = m.at(i, j).convert_to<double>();
  auto dot = [&](int x, int y) {
    double s = 0;
    for (int i = 0; i < R; ++i) s += col[x][i] * col[y][i];
    return s;
  };
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < C; ++p)
      for (int q = p + 1; q < C; ++q) {
        double app = dot(p, p), aqq = dot(q, q), apq = dot(p, q);
        if (std::abs(apq) <= 1e-15 * std::sqrt(app * aqq)) continue;
        rotated = true;
        double theta = 0.5 * std::atan2(2 * apq, app - aqq);
        double c = std::cos(theta), s = std::sin(theta);
        for (int i = 0; i < R; ++i) {
          double xp = col[p][i], xq = col[q][i];
          col[p][i] = c * xp + s * xq;
          col[q][i] = -s * xp + c * xq;
        }
      }
    if (!rotated) break;
  }
  std::vector<double> sv(C);
  double maxsv = 0;
  for (int j = 0; j < C; ++j) {
    sv[j] = std::sqrt(dot(j, j));
    maxsv = std::max(maxsv, sv[j]);
  }
  if (maxsv == 0) return 0;
  int r = 0;
  for (int j = 0; j < C; ++j)
    if (sv[j] > tol * maxsv) ++r;
  return r;
}

}  // namespace bia
