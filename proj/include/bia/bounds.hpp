// Linear sum-DoF upper bounds and optimal preset-mode selection for the
// (M,N,K) interference channel and its cellular variants.
#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bia/error.hpp"
#include "bia/model.hpp"
#include "bia/numeric.hpp"

namespace bia {

/// D(n) = nK / (K + ceil(n/M)(n-1)): the sum-DoF ceiling when alignment sets
/// of cardinality n are used throughout.
inline Rat ldof_function(int M, int K, int n) {
  if (M < 1 || K < 1) throw Error(Errc::Domain, "ldof_function requires M,K >= 1");
  if (n < 1) throw Error(Errc::Domain, "ldof_function requires n >= 1");
  Int den = Int(K) + Int(ceil_div(n, M)) * (n - 1);
  return make_rat(Int(n) * K, den);
}

struct BoundResult {
  int n_star = 1;
  Rat bound;
  // Decomposition of the effective mode count N_eff = M*gamma + alpha.
  int gamma = 0;
  int alpha = 0;
  std::optional<int> gamma_opt;
  enum class Branch { MGamma, FullN, GammaOpt, BruteForce } branch = Branch::BruteForce;
};

inline const char* branch_name(BoundResult::Branch b) {
  switch (b) {
    case BoundResult::Branch::MGamma: return "alpha<=threshold(n*=M*Gamma)";
    case BoundResult::Branch::FullN: return "alpha>threshold(n*=N)";
    case BoundResult::Branch::GammaOpt: return "N>=M*ceil(sqrt(K/M))(n*=M*Gamma_opt)";
    case BoundResult::Branch::BruteForce: return "brute-force";
  }
  return "?";
}

namespace detail {

/// Mode-count selection shared by the IC and cellular bounds.
/// K_total: users counted by the bound; antennas_total: network antenna count
/// capping the alignment-set cardinality; N_eff: usable preset modes.
inline BoundResult bound_core(int M, int N_eff, int K_total, int antennas_total) {
  if (M < 1 || N_eff < 1) throw Error(Errc::Domain, "bound requires M,N >= 1");
  if (K_total < 2) throw Error(Errc::Domain, "bound requires at least 2 users");

  BoundResult r;
  r.gamma = N_eff / M;
  r.alpha = N_eff % M;

  const long csr = ceil_sqrt_ratio(K_total, M);  // ceil(sqrt(K/M))
  auto brute = [&]() {
    int cap = std::min<long>(N_eff, antennas_total);
    r.branch = BoundResult::Branch::BruteForce;
    r.n_star = 1;
    r.bound = ldof_function(M, K_total, 1);
    for (int n = 2; n <= cap; ++n) {
      Rat v = ldof_function(M, K_total, n);
      if (v > r.bound) {
        r.bound = v;
        r.n_star = n;
      }
    }
    return r;
  };

  if (N_eff >= M * csr) {
    long lo = std::max(1L, floor_sqrt_ratio(K_total, M));
    long hi = csr;
    // g(gamma) = M*gamma + K/gamma, compared exactly; ties go to the smaller
    // gamma (same bound, fewer preset modes used).
    auto g_le = [&](long x, long y) {
      return (Int(M) * x * x + K_total) * y <= (Int(M) * y * y + K_total) * x;
    };
    long gopt = g_le(lo, hi) ? lo : hi;
    r.gamma_opt = int(gopt);
    r.branch = BoundResult::Branch::GammaOpt;
    r.n_star = int(M * gopt);
  } else if (K_total - r.gamma - 1 <= 0) {
    // The threshold in the mode-count formula divides by K - Gamma - 1; for
    // these tiny configurations fall back to direct maximization.
    return brute();
  } else if (Int(r.alpha) * (K_total - r.gamma - 1) <= Int(N_eff) * (Int(M) * r.gamma - 1)) {
    r.branch = BoundResult::Branch::MGamma;
    r.n_star = M * r.gamma;
  } else {
    r.branch = BoundResult::Branch::FullN;
    r.n_star = N_eff;
  }
  if (r.n_star < 1 || r.n_star > antennas_total) return brute();
  r.bound = ldof_function(M, K_total, r.n_star);
  return r;
}

}  // namespace detail

/// Optimal preset-mode count and sum-DoF ceiling for the (M,N,K) IC.
inline BoundResult optimal_preset_modes(const SystemConfig& cfg) {
  cfg.require_valid();
  return detail::bound_core(cfg.M, cfg.N, cfg.K, cfg.antennas());
}

/// Single-antenna special case (M = 1).
inline BoundResult siso_bound(int N, int K) {
  return optimal_preset_modes(SystemConfig{1, N, K});
}

/// Fully connected G-cell downlink with K users per cell: the network has only
/// M*G transmit antennas, so the usable mode count is min(N, M*G) and the user
/// count is K*G.
inline BoundResult downlink_cell_bound(const CellularConfig& cell) {
  cell.require_valid();
  if (cell.direction != CellDirection::Downlink)
    throw Error(Errc::Domain, "downlink_cell_bound requires downlink direction");
  int n_bar = std::min(cell.N, cell.M * cell.G);
  if (cell.K * cell.G < 2) throw Error(Errc::Domain, "downlink bound requires at least 2 users");
  return detail::bound_core(cell.M, n_bar, cell.K * cell.G, cell.M * cell.G);
}

/// Fully connected interfering multiple-access uplink: with no transmitter
/// cooperation gain, a cell whose transmitters hold M antennas in total acts
/// as one M-antenna transmitter. All cells must sum to the same M.
inline BoundResult uplink_cell_bound(const std::vector<std::vector<int>>& antennas_per_cell,
                                     int N) {
  if (antennas_per_cell.size() < 2)
    throw Error(Errc::Domain, "uplink bound requires at least 2 cells");
  long M = -1;
  for (std::size_t c = 0; c < antennas_per_cell.size(); ++c) {
    long sum = 0;
    for (int a : antennas_per_cell[c]) {
      if (a < 1) throw Error(Errc::Domain, "antenna counts must be positive");
      sum += a;
    }
    if (M < 0)
      M = sum;
    else if (sum != M)
      throw Error(Errc::AsymmetricCells, "cell " + std::to_string(c + 1) + " sums to " +
                                             std::to_string(sum) + ", expected " +
                                             std::to_string(M));
  }
  return optimal_preset_modes(SystemConfig{int(M), N, int(antennas_per_cell.size())});
}

struct SweepRow {
  int N;
  int n_star;
  Rat bound;
};

/// One bound per mode count N in [1:n_max]; non-decreasing and eventually
/// constant in N.
inline std::vector<SweepRow> sweep_bound(int M, int K, int n_max) {
  if (n_max < 1) throw Error(Errc::Domain, "sweep requires n_max >= 1");
  std::vector<SweepRow> rows;
  for (int N = 1; N <= n_max; ++N) {
    BoundResult b = optimal_preset_modes(SystemConfig{M, N, K});
    rows.push_back({N, b.n_star, b.bound});
  }
  return rows;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream o;
  o << "N,n_star,bound_num,bound_den,bound_decimal\n";
  for (const auto& r : rows)
    o << r.N << "," << r.n_star << "," << rat_num(r.bound).str() << ","
      << rat_den(r.bound).str() << "," << rat_decimal(r.bound) << "\n";
  return o.str();
}

}  // namespace bia
