// Alignment-set partitions: construction templates, structural validation,
// and per-receiver symbol-extension accounting.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "bia/bounds.hpp"
#include "bia/error.hpp"
#include "bia/model.hpp"

namespace bia {

/// Minimum number of corresponding receivers for an alignment set of n
/// symbols: ceil(n/M).
inline int minimal_transmitter_count(int n, int M) {
  if (n < 1 || M < 1) throw Error(Errc::Domain, "requires n >= 1 and M >= 1");
  return int(ceil_div(n, M));
}

/// A full partition of eta replicated transmit symbols into alignment sets.
struct PartitionPlan {
  int eta = 1;                               // symbols per antenna (0 entries allowed per map)
  std::vector<AlignmentSet> sets;
  std::map<AntennaId, int> symbols_per_antenna;

  int total_symbols() const {
    int t = 0;
    for (const auto& [id, n] : symbols_per_antenna) t += n;
    return t;
  }
};

enum class PartitionViolationCode {
  EXCLUSIVITY,
  UNCOVERED_SYMBOL,
  CARDINALITY_EXCEEDS_MODES,
  TRANSMITTERS_MISMATCH,
  UNKNOWN_SET_MEMBER,
};

inline const char* partition_violation_name(PartitionViolationCode c) {
  switch (c) {
    case PartitionViolationCode::EXCLUSIVITY: return "EXCLUSIVITY";
    case PartitionViolationCode::UNCOVERED_SYMBOL: return "UNCOVERED_SYMBOL";
    case PartitionViolationCode::CARDINALITY_EXCEEDS_MODES: return "CARDINALITY_EXCEEDS_MODES";
    case PartitionViolationCode::TRANSMITTERS_MISMATCH: return "TRANSMITTERS_MISMATCH";
    case PartitionViolationCode::UNKNOWN_SET_MEMBER: return "UNKNOWN_SET_MEMBER";
  }
  return "UNKNOWN";
}

struct PartitionViolation {
  PartitionViolationCode code;
  std::string where;
};

/// Empty result iff every symbol lies in exactly one set, no set is larger
/// than min(N, MK) (receivers expose at most N independent channel states),
/// and each set's transmitter list equals the transmitters of its members.
inline std::vector<PartitionViolation> validate_partition(const PartitionPlan& plan,
                                                          const SystemConfig& cfg) {
  std::vector<PartitionViolation> out;
  auto add = [&](PartitionViolationCode c, const std::string& w) { out.push_back({c, w}); };
  const int card_cap = std::min(cfg.N, cfg.antennas());

  std::set<SymbolRef> seen;
  for (std::size_t si = 0; si < plan.sets.size(); ++si) {
    const auto& set = plan.sets[si];
    const std::string tag = "set " + std::to_string(si + 1);
    if (int(set.members.size()) > card_cap) add(PartitionViolationCode::CARDINALITY_EXCEEDS_MODES, tag);
    std::set<int> member_trans;
    for (const auto& mem : set.members) {
      const std::string mtag =
          tag + " member " + mem.antenna.str() + "," + std::to_string(mem.symbol);
      auto it = plan.symbols_per_antenna.find(mem.antenna);
      int have = it == plan.symbols_per_antenna.end() ? 0 : it->second;
      if (mem.symbol < 1 || mem.symbol > have) add(PartitionViolationCode::UNKNOWN_SET_MEMBER, mtag);
      if (!seen.insert(mem).second) add(PartitionViolationCode::EXCLUSIVITY, mtag);
      member_trans.insert(mem.antenna.transmitter);
    }
    std::set<int> declared(set.transmitters.begin(), set.transmitters.end());
    if (declared != member_trans) add(PartitionViolationCode::TRANSMITTERS_MISMATCH, tag);
  }
  for (const auto& [id, count] : plan.symbols_per_antenna)
    for (int d = 1; d <= count; ++d)
      if (!seen.count(SymbolRef{id, d}))
        add(PartitionViolationCode::UNCOVERED_SYMBOL, id.str() + "," + std::to_string(d));
  return out;
}

struct ExtensionReport {
  std::map<int, int> per_receiver;  // j -> m_j
  bool balanced = false;
};

/// Per-receiver dimension requirement: an owned set occupies |set| dimensions,
/// a foreign set one. Balanced plans admit a common symbol extension.
inline ExtensionReport required_extension(const PartitionPlan& plan, const SystemConfig& cfg) {
  cfg.require_valid();
  ExtensionReport rep;
  for (int j = 1; j <= cfg.K; ++j) {
    int mj = 0;
    for (const auto& set : plan.sets) {
      bool owns = std::find(set.transmitters.begin(), set.transmitters.end(), j) !=
                  set.transmitters.end();
      mj += owns ? int(set.members.size()) : 1;
    }
    rep.per_receiver[j] = mj;
  }
  rep.balanced = true;
  for (const auto& [j, mj] : rep.per_receiver)
    if (mj != rep.per_receiver.begin()->second) rep.balanced = false;
  return rep;
}

// ---------------------------------------------------------------------------
// Partition templates. These produce the set structure only; the scheme
// synthesizer reuses them and adds beamforming vectors and mode patterns.

namespace detail {

/// Mixed-radix digits of `rank` with `digits` positions over base `base`,
/// most significant first.
inline std::vector<int> tuple_of_rank(long rank, int digits, int base) {
  std::vector<int> t(digits, 0);
  for (int i = digits - 1; i >= 0; --i) {
    t[i] = int(rank % base);
    rank /= base;
  }
  return t;
}

inline long rank_of_tuple(const std::vector<int>& t, int base) {
  long r = 0;
  for (int d : t) r = r * base + d;
  return r;
}

/// One singleton set per user: the round-robin baseline when only one preset
/// mode is worth using.
inline PartitionPlan tdma_partition(const SystemConfig& cfg) {
  PartitionPlan plan;
  plan.eta = 1;
  for (int idx = 0; idx < cfg.antennas(); ++idx) plan.symbols_per_antenna[antenna_at(cfg, idx)] = 0;
  for (int j = 1; j <= cfg.K; ++j) {
    AntennaId first{j, 1};
    plan.symbols_per_antenna[first] = 1;
    plan.sets.push_back({{j}, {SymbolRef{first, 1}}});
  }
  return plan;
}

/// Grouped partition: users are split into R2 groups of R1; each group's
/// n* antennas contribute one symbol to each of (n*-1)^(R2-1) sets.
inline PartitionPlan grouped_partition(const SystemConfig& cfg, int n_star) {
  const int R1 = n_star / cfg.M;
  const int R2 = cfg.antennas() / n_star;
  const int B = n_star - 1;
  long per_antenna = 1;
  for (int i = 0; i < R2 - 1; ++i) per_antenna *= B;

  PartitionPlan plan;
  plan.eta = int(per_antenna);
  for (int idx = 0; idx < cfg.antennas(); ++idx)
    plan.symbols_per_antenna[antenna_at(cfg, idx)] = int(per_antenna);
  for (int g = 0; g < R2; ++g) {
    std::vector<int> transmitters;
    for (int u = g * R1 + 1; u <= (g + 1) * R1; ++u) transmitters.push_back(u);
    for (long d = 0; d < per_antenna; ++d) {
      AlignmentSet set;
      set.transmitters = transmitters;
      for (int u : transmitters)
        for (int a = 1; a <= cfg.M; ++a) set.members.push_back({AntennaId{u, a}, int(d) + 1});
      plan.sets.push_back(std::move(set));
    }
  }
  return plan;
}

/// Cyclic pair partition for M=1, n*=2, K odd: user j's second symbol aligns
/// with user j+1's first, wrapping around.
inline PartitionPlan cyclic_pair_partition(const SystemConfig& cfg) {
  PartitionPlan plan;
  plan.eta = 2;
  for (int j = 1; j <= cfg.K; ++j) plan.symbols_per_antenna[AntennaId{j, 1}] = 2;
  for (int j = 1; j <= cfg.K; ++j) {
    int next = j % cfg.K + 1;
    AlignmentSet set;
    set.transmitters = {std::min(j, next), std::max(j, next)};
    set.members = {SymbolRef{AntennaId{j, 1}, 2}, SymbolRef{AntennaId{next, 1}, 1}};
    plan.sets.push_back(std::move(set));
  }
  return plan;
}

/// Cyclic antenna-window partition for n* = M+1: every window of n*
/// consecutive antennas (network order, wrapping) forms one set; window s uses
/// symbol index ((s-1) mod n*) + 1 of each antenna it covers. Each antenna
/// lands in n* windows with distinct symbol indices, so eta = n*.
inline PartitionPlan window_partition(const SystemConfig& cfg, int n_star) {
  const int A_total = cfg.antennas();
  PartitionPlan plan;
  plan.eta = n_star;
  for (int idx = 0; idx < A_total; ++idx)
    plan.symbols_per_antenna[antenna_at(cfg, idx)] = n_star;
  for (int s = 0; s < A_total; ++s) {
    AlignmentSet set;
    std::set<int> trans;
    for (int o = 0; o < n_star; ++o) {
      AntennaId id = antenna_at(cfg, (s + o) % A_total);
      set.members.push_back({id, s % n_star + 1});
      trans.insert(id.transmitter);
    }
    set.transmitters.assign(trans.begin(), trans.end());
    plan.sets.push_back(std::move(set));
  }
  return plan;
}

}  // namespace detail

/// Builds a balanced full partition at the optimal cardinality n*. Routing:
/// grouped template when n*/M and MK/n* are integers, cyclic pairs for the
/// single-antenna n*=2 odd-K family, antenna windows for n* = M+1, singleton
/// round-robin when n* = 1. Other shapes have no template here.
inline PartitionPlan construct_partition(const SystemConfig& cfg) {
  cfg.require_valid();
  BoundResult br = optimal_preset_modes(cfg);
  const int n_star = br.n_star;

  if (n_star == 1) return detail::tdma_partition(cfg);
  if (n_star % cfg.M == 0 && cfg.antennas() % n_star == 0 && cfg.antennas() / n_star >= 2)
    return detail::grouped_partition(cfg, n_star);
  if (cfg.M == 1 && n_star == 2 && cfg.K % 2 == 1 && cfg.K >= 3)
    return detail::cyclic_pair_partition(cfg);
  if (n_star == cfg.M + 1 && cfg.M >= 2)
    return detail::window_partition(cfg, n_star);
  throw Error(Errc::UnsupportedConfig,
              "no partition template for (M,N,K)=(" + std::to_string(cfg.M) + "," +
                  std::to_string(cfg.N) + "," + std::to_string(cfg.K) +
                  ") with n*=" + std::to_string(n_star));
}

}  // namespace bia
