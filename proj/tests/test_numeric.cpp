// Scalar helpers, exact/float rank, and the rational simplex.
#include <doctest.h>

#include <functional>

#include "bia/converse.hpp"
#include "bia/matrix.hpp"
#include "bia/numeric.hpp"

using namespace bia;

TEST_CASE("rational rendering") {
  CHECK(rat_str(Rat(10, 7)) == "10/7");
  CHECK(rat_str(Rat(4, 2)) == "2");
  CHECK(rat_str(Rat(0)) == "0");
  CHECK(rat_decimal(Rat(10, 7)) == "1.428571");
  CHECK(rat_decimal(Rat(3, 2)) == "1.500000");
  CHECK(rat_decimal(Rat(2)) == "2.000000");
  CHECK(rat_decimal(Rat(-10, 7)) == "-1.428571");
}

TEST_CASE("integer helpers") {
  CHECK(ceil_div(3, 2) == 2);
  CHECK(ceil_div(4, 2) == 2);
  CHECK(ceil_sqrt_ratio(7, 1) == 3);
  CHECK(floor_sqrt_ratio(7, 1) == 2);
  CHECK(ceil_sqrt_ratio(2, 3) == 1);
  CHECK(binomial_capped(8, 4, 1000) == 70);
  CHECK(binomial_capped(30, 15, 1000) == 1001);  // capped
}

TEST_CASE("splitmix64 is stable") {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 16; ++i) CHECK(a.next() == b.next());
  SplitMix64 c(42), d(43);
  bool differs = false;
  for (int i = 0; i < 4; ++i) differs |= (c.next() != d.next());
  CHECK(differs);
}

static RatMat from_rows(const std::vector<std::vector<long>>& rows) {
  RatMat m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

TEST_CASE("exact rank basics") {
  CHECK(rank_exact(RatMat::identity(3)) == 3);
  CHECK(rank_exact(RatMat(4, 3)) == 0);
  CHECK(rank_exact(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank_exact(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
  RatMat frac(2, 2);
  frac.at(0, 0) = Rat(1, 2);
  frac.at(0, 1) = Rat(1, 3);
  frac.at(1, 0) = Rat(3, 2);
  frac.at(1, 1) = 2;
  CHECK(rank_exact(frac) == 2);
  frac.at(1, 1) = 1;  // now the rows are proportional
  CHECK(rank_exact(frac) == 1);
}

TEST_CASE("exact and float ranks agree on a random grid") {
  for (std::uint64_t seed = 1; seed <= 24; ++seed) {
    SplitMix64 gen(seed);
    int r = 2 + int(gen.next() % 2);  // inner rank
    int n = 5 + int(gen.next() % 3);
    RatMat B(n, r), C(r, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < r; ++j) B.at(i, j) = long(gen.next() % 19) - 9;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < n; ++j) C.at(i, j) = long(gen.next() % 19) - 9;
    RatMat A(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rat s = 0;
        for (int k = 0; k < r; ++k) s += B.at(i, k) * C.at(k, j);
        A.at(i, j) = s;
      }
    int re = rank_exact(A);
    CHECK(re <= r);
    CHECK(re == rank_float(A));
  }
}

TEST_CASE("exact rank survives large entries") {
  SplitMix64 gen(99);
  RatMat A(12, 12);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) A.at(i, j) = long(gen.next() % 1000000) + 1;
  CHECK(rank_exact(A) == 12);
  CHECK(rank_float(A) == 12);
}

TEST_CASE("simplex solves small programs exactly") {
  // max x + y s.t. x <= 1, y <= 2
  std::vector<std::vector<Rat>> A = {{1, 0}, {0, 1}};
  std::vector<Rat> b = {1, 2};
  std::vector<Rat> c = {1, 1};
  CHECK(simplex_max(A, b, c) == Rat(3));

  // degenerate rows do not cycle under Bland's rule
  std::vector<std::vector<Rat>> A2 = {{1, 1}, {1, 0}, {0, 1}};
  std::vector<Rat> b2 = {1, 0, 1};
  std::vector<Rat> c2 = {2, 3};
  CHECK(simplex_max(A2, b2, c2) == Rat(3));

  // fractional optimum
  std::vector<std::vector<Rat>> A3 = {{2, 1}, {1, 3}};
  std::vector<Rat> b3 = {1, 1};
  std::vector<Rat> c3 = {1, 1};
  CHECK(simplex_max(A3, b3, c3) == Rat(3, 5));
}

TEST_CASE("simplex reports unbounded objectives") {
  std::vector<std::vector<Rat>> A = {{-1, 0}};
  std::vector<Rat> b = {0};
  std::vector<Rat> c = {1, 0};
  CHECK_THROWS_AS(simplex_max(A, b, c), Error);
}

// Independent oracle: naive fully-pivoted rational Gaussian elimination.
static int gauss_rank(RatMat m) {
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int piv = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (m.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(rank, j), m.at(piv, j));
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || m.at(r, c) == 0) continue;
      Rat f = m.at(r, c) / m.at(rank, c);
      for (int j = 0; j < m.cols(); ++j) m.at(r, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

TEST_CASE("fraction-free rank agrees with plain rational elimination") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    SplitMix64 gen(seed * 31);
    int r = 4 + int(gen.next() % 4), c = 4 + int(gen.next() % 4);
    RatMat M(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        long num = long(gen.next() % 15) - 7;
        long den = 1 + long(gen.next() % 4);
        if (gen.next() % 3 == 0) num = 0;
        M.at(i, j) = Rat(num, den);
      }
    CHECK(rank_exact(M) == gauss_rank(M));
  }
}

// Independent oracle: enumerate all basic points of {Ax <= b, x >= 0} and
// take the best feasible objective value.
static Rat vertex_max(std::vector<std::vector<Rat>> A, std::vector<Rat> b,
                      const std::vector<Rat>& c) {
  const int n = int(c.size());
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> r(n, Rat(0));
    r[i] = -1;
    A.push_back(r);
    b.push_back(Rat(0));
  }
  const int R = int(A.size());
  Rat best(0);
  std::vector<int> comb(n);
  std::function<void(int, int)> rec = [&](int start, int k) {
    if (k == n) {
      RatMat M(n, n + 1);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) M.at(i, j) = A[comb[i]][j];
        M.at(i, n) = b[comb[i]];
      }
      std::vector<int> where(n, -1);
      int row = 0;
      for (int col = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int r = row; r < n; ++r)
          if (M.at(r, col) != 0) {
            piv = r;
            break;
          }
        if (piv < 0) return;
        for (int j = 0; j <= n; ++j) std::swap(M.at(row, j), M.at(piv, j));
        for (int r = 0; r < n; ++r) {
          if (r == row || M.at(r, col) == 0) continue;
          Rat f = M.at(r, col) / M.at(row, col);
          for (int j = 0; j <= n; ++j) M.at(r, j) -= f * M.at(row, j);
        }
        where[col] = row;
        ++row;
      }
      if (row < n) return;
      std::vector<Rat> x(n);
      for (int col = 0; col < n; ++col) x[col] = M.at(where[col], n) / M.at(where[col], col);
      for (int i = 0; i < R; ++i) {
        Rat lhs(0);
        for (int j = 0; j < n; ++j) lhs += A[i][j] * x[j];
        if (lhs > b[i]) return;
      }
      Rat v(0);
      for (int j = 0; j < n; ++j) v += c[j] * x[j];
      best = std::max(best, v);
      return;
    }
    for (int i = start; i < R; ++i) {
      comb[k] = i;
      rec(i + 1, k + 1);
    }
  };
  rec(0, 0);
  return best;
}

TEST_CASE("simplex optimum matches basic-point enumeration") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    SplitMix64 gen(seed);
    int n = 2 + int(gen.next() % 2), m = 2 + int(gen.next() % 3);
    std::vector<std::vector<Rat>> A(m, std::vector<Rat>(n));
    std::vector<Rat> b(m), c(n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) A[i][j] = long(gen.next() % 9) - 3;
      b[i] = long(gen.next() % 8);
    }
    for (int j = 0; j < n; ++j) c[j] = long(gen.next() % 7) - 3;
    for (int j = 0; j < n; ++j) {  // box to keep the program bounded
      std::vector<Rat> r(n, Rat(0));
      r[j] = 1;
      A.push_back(r);
      b.push_back(Rat(5));
    }
    CHECK(simplex_max(A, b, c) == vertex_max(A, b, c));
  }
}
