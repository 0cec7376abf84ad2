// Counting-argument machinery behind the converse: per-set efficiency
// dimensions, the multiset optimality oracle, and the converse itself as an
// explicit linear program solved exactly over the rationals.
#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bia/bounds.hpp"
#include "bia/error.hpp"
#include "bia/model.hpp"
#include "bia/numeric.hpp"

namespace bia {

/// Dimensions occupied by one alignment set of cardinality n across all
/// receivers: f in the desired subspaces, h in the interfering ones.
struct EfficiencyPair {
  long f = 0;
  long h = 0;
};

inline EfficiencyPair alignment_efficiency(int M, int K, int n) {
  if (M < 1 || K < 1) throw Error(Errc::Domain, "alignment_efficiency requires M,K >= 1");
  if (n < 1 || n > M * K)
    throw Error(Errc::Domain, "alignment_efficiency requires 1 <= n <= M*K");
  long q = ceil_div(n, M);
  return {long(n), (q - 1) * n + K - q};
}

/// Sum-DoF ceiling for a mix of alignment-set cardinalities:
/// K * sum f(n_g) / (sum f(n_g) + sum h(n_g)). Empty multiset yields 0.
inline Rat bound_for_cardinalities(int M, int K, const std::vector<int>& cards) {
  if (cards.empty()) return Rat(0);
  long F = 0, H = 0;
  for (int n : cards) {
    EfficiencyPair e = alignment_efficiency(M, K, n);
    F += e.f;
    H += e.h;
  }
  return make_rat(Int(K) * F, Int(F) + H);
}

struct SymmetricOptimality {
  std::vector<int> best_multiset;
  Rat best_value;
  bool symmetric_is_max = false;
};

/// Exhaustively enumerates all cardinality multisets of size <= max_sets drawn
/// from [1:min(N,MK)] and reports the maximizer of bound_for_cardinalities,
/// plus whether a uniform multiset attains the maximum.
inline SymmetricOptimality check_symmetric_optimality(const SystemConfig& cfg, int max_sets) {
  cfg.require_valid();
  if (max_sets < 1) throw Error(Errc::Domain, "max_sets must be >= 1");
  const int cap = std::min(cfg.N, cfg.antennas());

  SymmetricOptimality out;
  out.best_value = Rat(0);
  std::vector<int> cur;
  // Non-decreasing sequences enumerate each multiset exactly once.
  auto rec = [&](auto&& self, int min_card) -> void {
    if (!cur.empty()) {
      Rat v = bound_for_cardinalities(cfg.M, cfg.K, cur);
      if (v > out.best_value) {
        out.best_value = v;
        out.best_multiset = cur;
      }
    }
    if (int(cur.size()) == max_sets) return;
    for (int n = min_card; n <= cap; ++n) {
      cur.push_back(n);
      self(self, n);
      cur.pop_back();
    }
  };
  rec(rec, 1);

  Rat uniform_max(0);
  for (int n = 1; n <= cap; ++n)
    uniform_max = std::max(uniform_max, bound_for_cardinalities(cfg.M, cfg.K, {n}));
  out.symmetric_is_max = (uniform_max == out.best_value);
  return out;
}

// ---------------------------------------------------------------------------
// The converse as a linear program (m normalized to 1):
//   maximize  sum_b d_b
//   s.t.  per receiver j:  sum_b d_b - (n-1) * sum_{T : j not in users(T)} x_T <= 1
//         per antenna  b:  sum_{T containing b} x_T - d_b <= 0
//         all variables >= 0
// where b ranges over the MK transmit antennas and T over all n-antenna
// subsets. The per-receiver and per-antenna inequalities are the primitive
// facts; summed forms are left to emerge from the solve.

struct ConverseLp {
  int M = 1, K = 2, n = 1;
  std::vector<std::vector<int>> subsets;   // antenna indices, ascending
  std::vector<std::string> var_names;      // d vars then x vars
  std::vector<std::vector<Rat>> A;         // constraints, row-major
  std::vector<Rat> b;
  std::vector<Rat> c;                      // objective
  std::vector<std::string> row_names;

  std::size_t num_vars() const { return var_names.size(); }
};

inline ConverseLp build_converse_lp(const SystemConfig& cfg, int n,
                                    unsigned long long subset_budget = 1000000ULL) {
  cfg.require_valid();
  const int A_total = cfg.antennas();
  if (n < 1 || n > std::min(cfg.N, A_total))
    throw Error(Errc::Domain, "build_converse_lp requires 1 <= n <= min(N, M*K)");
  unsigned long long count = binomial_capped(A_total, n, subset_budget);
  if (count > subset_budget)
    throw Error(Errc::BudgetExceeded, "C(" + std::to_string(A_total) + "," + std::to_string(n) +
                                          ") exceeds subset budget " +
                                          std::to_string(subset_budget));

  ConverseLp lp;
  lp.M = cfg.M;
  lp.K = cfg.K;
  lp.n = n;

  for (int b_i = 0; b_i < A_total; ++b_i) {
    AntennaId id = antenna_at(cfg, b_i);
    lp.var_names.push_back("d_" + std::to_string(id.transmitter) + "_" +
                           std::to_string(id.antenna));
  }
  // Enumerate n-subsets of the antenna list in lexicographic order.
  std::vector<int> comb(n);
  for (int i = 0; i < n; ++i) comb[i] = i;
  while (true) {
    lp.subsets.push_back(comb);
    std::string name = "x";
    for (int b_i : comb) {
      AntennaId id = antenna_at(cfg, b_i);
      name += "_" + std::to_string(id.transmitter) + "_" + std::to_string(id.antenna);
    }
    lp.var_names.push_back(name);
    int i = n - 1;
    while (i >= 0 && comb[i] == A_total - n + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
  }

  const std::size_t S = lp.subsets.size();
  const std::size_t V = A_total + S;
  lp.c.assign(V, Rat(0));
  for (int b_i = 0; b_i < A_total; ++b_i) lp.c[b_i] = 1;

  for (int j = 1; j <= cfg.K; ++j) {
    std::vector<Rat> row(V, Rat(0));
    for (int b_i = 0; b_i < A_total; ++b_i) row[b_i] = 1;
    for (std::size_t t = 0; t < S; ++t) {
      bool j_in = false;
      for (int b_i : lp.subsets[t])
        if (antenna_at(cfg, b_i).transmitter == j) {
          j_in = true;
          break;
        }
      if (!j_in) row[A_total + t] = -(n - 1);
    }
    lp.A.push_back(std::move(row));
    lp.b.push_back(Rat(1));
    lp.row_names.push_back("recv_" + std::to_string(j));
  }
  for (int b_i = 0; b_i < A_total; ++b_i) {
    std::vector<Rat> row(V, Rat(0));
    row[b_i] = -1;
    for (std::size_t t = 0; t < S; ++t)
      for (int x : lp.subsets[t])
        if (x == b_i) row[A_total + t] = 1;
    lp.A.push_back(std::move(row));
    lp.b.push_back(Rat(0));
    AntennaId id = antenna_at(cfg, b_i);
    lp.row_names.push_back("ant_" + std::to_string(id.transmitter) + "_" +
                           std::to_string(id.antenna));
  }
  return lp;
}

/// Exact primal simplex for max c'x, Ax <= b, x >= 0, with b >= 0 (the slack
/// basis is feasible). Bland's rule on both the entering and leaving choices
/// guarantees termination under degeneracy.
inline Rat simplex_max(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                       const std::vector<Rat>& c) {
  const std::size_t m = A.size(), n = c.size();
  for (const Rat& bi : b)
    if (bi < 0) throw Error(Errc::Infeasible, "simplex_max requires b >= 0");

  // Tableau: m rows of [structural | slack | rhs], plus objective row.
  std::vector<std::vector<Rat>> T(m + 1, std::vector<Rat>(n + m + 1, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][n + m] = b[i];
  }
  for (std::size_t j = 0; j < n; ++j) T[m][j] = -c[j];
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  while (true) {
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j)
      if (T[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter == n + m) break;  // optimal

    std::size_t leave = m;
    Rat best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rat ratio = T[i][n + m] / T[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        best_ratio = ratio;
        leave = i;
      }
    }
    if (leave == m) throw Error(Errc::Unbounded, "objective unbounded above");

    Rat piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rat f = T[i][enter];
      for (std::size_t j = 0; j <= n + m; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  return T[m][n + m];
}

inline Rat solve_converse_lp(const ConverseLp& lp) { return simplex_max(lp.A, lp.b, lp.c); }

/// LP-format text export for external cross-checking.
inline std::string lp_text(const ConverseLp& lp) {
  auto coef = [](const Rat& r) {
    return rat_den(r) == 1 ? rat_num(r).str() : rat_num(r).str() + "/" + rat_den(r).str();
  };
  std::ostringstream o;
  o << "\\ converse LP: M=" << lp.M << " K=" << lp.K << " n=" << lp.n << "\n";
  o << "Maximize\n obj:";
  bool first = true;
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    if (lp.c[j] == 0) continue;
    o << (first ? " " : " + ") << (lp.c[j] == 1 ? "" : coef(lp.c[j]) + " ") << lp.var_names[j];
    first = false;
  }
  o << "\nSubject To\n";
  for (std::size_t i = 0; i < lp.A.size(); ++i) {
    o << " " << lp.row_names[i] << ":";
    bool f2 = true;
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
      const Rat& a = lp.A[i][j];
      if (a == 0) continue;
      if (a > 0)
        o << (f2 ? " " : " + ") << (a == 1 ? "" : coef(a) + " ");
      else
        o << (f2 ? " -" : " - ") << (a == -1 ? "" : coef(-a) + " ");
      o << lp.var_names[j];
      f2 = false;
    }
    o << " <= " << coef(lp.b[i]) << "\n";
  }
  o << "Bounds\n";
  for (const auto& v : lp.var_names) o << " 0 <= " << v << "\n";
  o << "End\n";
  return o.str();
}

}  // namespace bia
