// Achievability ground truth: seeded generic channels, exact (or float) rank,
// per-user measured DoF, and the Monte Carlo harness.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bia/error.hpp"
#include "bia/matrix.hpp"
#include "bia/model.hpp"
#include "bia/numeric.hpp"

namespace bia {

struct RankBackend {
  enum class Mode { Exact, Float } mode = Mode::Exact;
  double float_tolerance = 1e-9;  // used only in float mode

  static RankBackend exact() { return {Mode::Exact, 0.0}; }
  static RankBackend floating(double tol = 1e-9) { return {Mode::Float, tol}; }
};

inline int rank(const RatMat& m, const RankBackend& backend = RankBackend::exact()) {
  return backend.mode == RankBackend::Mode::Exact ? rank_exact(m)
                                                  : rank_float(m, backend.float_tolerance);
}

/// Deterministic generic channel draw: every coefficient is an integer from
/// [1:10^6], taken from a splitmix64 stream seeded by `seed` and consumed in
/// (receiver, antenna, mode) order. Nonzero by construction; identical seeds
/// give identical realizations.
inline ChannelRealization sample_channel(const SystemConfig& cfg, std::uint64_t seed) {
  cfg.require_valid();
  ChannelRealization ch(cfg);
  SplitMix64 gen(seed);
  for (int j = 1; j <= cfg.K; ++j)
    for (int idx = 0; idx < cfg.antennas(); ++idx)
      for (int mode = 1; mode <= cfg.N; ++mode)
        ch.at(j, antenna_at(cfg, idx), mode) = Rat(long(gen.next() % 1000000ULL) + 1);
  return ch;
}

namespace detail {

/// Effective columns at receiver j of every antenna in `transmit_filter`
/// (true = include), concatenated in network antenna order.
inline RatMat stacked_columns(const Scheme& s, const ChannelRealization& ch, int j,
                              bool desired_only, bool interference_only) {
  RatMat out(s.m, 0);
  for (int idx = 0; idx < s.config.antennas(); ++idx) {
    AntennaId id = antenna_at(s.config, idx);
    bool is_desired = (id.transmitter == j);
    if (desired_only && !is_desired) continue;
    if (interference_only && is_desired) continue;
    if (s.symbols_of(id) == 0) continue;
    out = RatMat::hcat(out, effective_columns(s, ch, j, id));
  }
  return out;
}

inline RatMat one_effective_column(const Scheme& s, const ChannelRealization& ch, int j,
                                   const SymbolRef& ref) {
  RatMat all = effective_columns(s, ch, j, ref.antenna);
  RatMat col(s.m, 1);
  for (int t = 0; t < s.m; ++t) col.at(t, 0) = all.at(t, ref.symbol - 1);
  return col;
}

}  // namespace detail

struct UserMeasurement {
  int dof = 0;
  int desired_rank = 0;
  int interference_rank = 0;
};

/// Measured linear DoF of user j on one realization:
/// dof = rank([interference | desired]) - rank(interference), the dimension of
/// the desired signal projected off the interference subspace.
inline UserMeasurement measure_user_ldof(const Scheme& s, const ChannelRealization& ch, int j,
                                         const RankBackend& backend = RankBackend::exact()) {
  if (j < 1 || j > s.config.K) throw Error(Errc::Domain, "receiver out of range");
  RatMat interference = detail::stacked_columns(s, ch, j, false, true);
  RatMat desired = detail::stacked_columns(s, ch, j, true, false);
  UserMeasurement m;
  m.interference_rank = rank(interference, backend);
  m.desired_rank = rank(desired, backend);
  m.dof = rank(RatMat::hcat(interference, desired), backend) - m.interference_rank;
  return m;
}

/// Interference dimension predicted by the alignment structure at receiver j:
/// each foreign set collapses to one dimension; an owned set leaves one
/// dimension per member that j does not transmit. Requires the sets to cover
/// every transmit symbol of the scheme.
inline int expected_interference_rank(const Scheme& s, int j) {
  if (j < 1 || j > s.config.K) throw Error(Errc::Domain, "receiver out of range");
  std::set<SymbolRef> covered;
  for (const auto& set : s.sets)
    for (const auto& mem : set.members) covered.insert(mem);
  for (const auto& [id, cols] : s.beamforming)
    for (int d = 1; d <= int(cols.size()); ++d)
      if (!covered.count(SymbolRef{id, d}))
        throw Error(Errc::Domain,
                    "alignment sets do not cover symbol " + id.str() + "," + std::to_string(d));

  int total = 0;
  for (const auto& set : s.sets) {
    bool owned = false;
    for (int t : set.transmitters)
      if (t == j) owned = true;
    if (!owned) {
      total += 1;
    } else {
      int foreign = 0;
      for (const auto& mem : set.members)
        if (mem.antenna.transmitter != j) ++foreign;
      total += foreign;
    }
  }
  return total;
}

struct UserVerification {
  int measured_dof = 0;
  int expected_dof = 0;
  int desired_rank = 0;
  int interference_rank = 0;
  int expected_interference = 0;
  int decod_cols = 0;       // desired + foreign members of owned sets + 1 per foreign set
  int decod_rank = 0;
  bool decodable = false;   // decodability matrix square of size m and full rank
  bool pass = false;
};

struct VerificationReport {
  std::map<int, UserVerification> per_user;
  Rat sum_dof;
  bool passed = false;
};

/// Full check of one realization: measured DoF against the symbol counts,
/// measured interference rank against the structural prediction, plus the
/// square decodability matrix built from all desired columns and one
/// representative of every aligned interference dimension.
inline VerificationReport verify(const Scheme& s, const ChannelRealization& ch,
                                 const RankBackend& backend = RankBackend::exact()) {
  VerificationReport rep;
  rep.passed = true;
  Int dof_sum = 0;
  for (int j = 1; j <= s.config.K; ++j) {
    UserVerification u;
    UserMeasurement m = measure_user_ldof(s, ch, j, backend);
    u.measured_dof = m.dof;
    u.desired_rank = m.desired_rank;
    u.interference_rank = m.interference_rank;
    u.expected_dof = s.symbols_of_transmitter(j);
    u.expected_interference = expected_interference_rank(s, j);

    RatMat decod = detail::stacked_columns(s, ch, j, true, false);
    for (const auto& set : s.sets) {
      bool owned = false;
      for (int t : set.transmitters)
        if (t == j) owned = true;
      if (owned) {
        for (const auto& mem : set.members)
          if (mem.antenna.transmitter != j)
            decod = RatMat::hcat(decod, detail::one_effective_column(s, ch, j, mem));
      } else if (!set.members.empty()) {
        decod = RatMat::hcat(decod, detail::one_effective_column(s, ch, j, set.members.front()));
      }
    }
    u.decod_cols = decod.cols();
    u.decod_rank = rank(decod, backend);
    u.decodable = (u.decod_cols == s.m && u.decod_rank == s.m);

    u.pass = (u.measured_dof == u.expected_dof) &&
             (u.interference_rank == u.expected_interference);
    rep.passed = rep.passed && u.pass;
    dof_sum += u.measured_dof;
    rep.per_user[j] = u;
  }
  rep.sum_dof = make_rat(dof_sum, Int(s.m));
  return rep;
}

struct MonteCarloReport {
  int trials = 0;
  int passes = 0;
  bool all_passed = false;
  Rat sum_dof;  // from the first trial
  std::vector<int> failing_trials;
  std::optional<VerificationReport> first_failure;
};

/// Runs verify() on `trials` independent realizations. Trial t uses the
/// (t+1)-th output of a splitmix64 stream seeded with master_seed, so the
/// aggregate is reproducible regardless of execution order.
inline MonteCarloReport monte_carlo(const Scheme& s, int trials, std::uint64_t master_seed,
                                    const RankBackend& backend = RankBackend::exact()) {
  if (trials < 1) throw Error(Errc::Domain, "trials must be >= 1");
  MonteCarloReport rep;
  rep.trials = trials;
  SplitMix64 gen(master_seed);
  for (int t = 0; t < trials; ++t) {
    std::uint64_t seed = gen.next();
    VerificationReport r = verify(s, sample_channel(s.config, seed), backend);
    if (t == 0) rep.sum_dof = r.sum_dof;
    if (r.passed) {
      ++rep.passes;
    } else {
      rep.failing_trials.push_back(t);
      if (!rep.first_failure) rep.first_failure = r;
    }
  }
  rep.all_passed = (rep.passes == rep.trials);
  return rep;
}

/// Structured text: one row per user.
inline std::string report_text(const VerificationReport& rep) {
  std::ostringstream o;
  o << "j, d_j, expected, interference_rank, expected_interference, pass\n";
  for (const auto& [j, u] : rep.per_user)
    o << j << ", " << u.measured_dof << ", " << u.expected_dof << ", " << u.interference_rank
      << ", " << u.expected_interference << ", " << (u.pass ? "yes" : "no") << "\n";
  o << "sum_dof=" << rat_str(rep.sum_dof) << " passed=" << (rep.passed ? "yes" : "no") << "\n";
  return o.str();
}

}  // namespace bia
