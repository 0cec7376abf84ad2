// Core domain model: system configuration, schemes (beamforming + preset mode
// patterns + alignment sets), channel realizations, and structural validation.
//
// All indices exposed here are 1-based: transmitters and receivers run over
// [1:K], antennas over [1:M], preset modes over [1:N], and symbols over
// [1:d_{i(a)}]. Types are immutable values; operations are pure functions.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "bia/error.hpp"
#include "bia/matrix.hpp"
#include "bia/numeric.hpp"

namespace bia {

struct SystemConfig {
  int M = 1;  // transmit antennas per transmitter
  int N = 1;  // preset modes per receive antenna
  int K = 2;  // transmitter-receiver pairs

  bool valid() const { return M >= 1 && N >= 1 && K >= 2; }
  void require_valid() const {
    if (!valid()) throw Error(Errc::Domain, "config requires M>=1, N>=1, K>=2");
  }
  int antennas() const { return M * K; }
  friend bool operator==(const SystemConfig&, const SystemConfig&) = default;
};

enum class CellDirection { Downlink, Uplink };

struct CellularConfig {
  int G = 1;  // cells
  int K = 1;  // users per cell
  int M = 1;  // base-station antennas
  int N = 1;  // preset modes per user antenna
  CellDirection direction = CellDirection::Downlink;

  void require_valid() const {
    if (G < 1 || K < 1 || M < 1 || N < 1)
      throw Error(Errc::Domain, "cellular config requires positive counts");
  }
};

/// Antenna a of transmitter i, written i(a). Ordering follows the network-wide
/// antenna list 1(1), ..., 1(M), 2(1), ..., K(M).
struct AntennaId {
  int transmitter = 1;
  int antenna = 1;

  auto operator<=>(const AntennaId&) const = default;
  std::string str() const {
    return std::to_string(transmitter) + "(" + std::to_string(antenna) + ")";
  }
};

/// Linear position of an antenna in the network-wide ordering, 0-based.
inline int antenna_index(const SystemConfig& cfg, const AntennaId& a) {
  return (a.transmitter - 1) * cfg.M + (a.antenna - 1);
}

inline AntennaId antenna_at(const SystemConfig& cfg, int index) {
  return AntennaId{index / cfg.M + 1, index % cfg.M + 1};
}

/// One transmit symbol: column `symbol` of antenna `antenna`'s beamforming matrix.
struct SymbolRef {
  AntennaId antenna;
  int symbol = 1;
  auto operator<=>(const SymbolRef&) const = default;
};

/// A group of transmit symbols that collapses to one dimension at every
/// receiver outside `transmitters` while staying separable inside it.
struct AlignmentSet {
  std::vector<int> transmitters;  // ascending
  std::vector<SymbolRef> members;
  friend bool operator==(const AlignmentSet&, const AlignmentSet&) = default;
};

using BinaryColumn = std::vector<int>;  // length m, entries 0/1

struct Scheme {
  SystemConfig config;
  int m = 0;                                           // symbol-extension length
  std::map<AntennaId, std::vector<BinaryColumn>> beamforming;  // antenna -> columns
  std::map<int, std::vector<int>> patterns;            // receiver -> modes, length m
  std::vector<AlignmentSet> sets;

  int symbols_of(const AntennaId& a) const {
    auto it = beamforming.find(a);
    return it == beamforming.end() ? 0 : int(it->second.size());
  }
  int symbols_of_transmitter(int i) const {
    int total = 0;
    for (int a = 1; a <= config.M; ++a) total += symbols_of(AntennaId{i, a});
    return total;
  }
  int total_symbols() const {
    int total = 0;
    for (const auto& [id, cols] : beamforming) total += int(cols.size());
    return total;
  }
  friend bool operator==(const Scheme&, const Scheme&) = default;
};

/// Channel coefficients h_{j,i(a)}(mode), one nonzero exact rational per
/// (receiver, antenna, mode) triple. Dense storage over the full index cube.
struct ChannelRealization {
  SystemConfig config;
  std::vector<Rat> coeff;  // [j-1][antenna_index][mode-1]

  explicit ChannelRealization(const SystemConfig& c = {})
      : config(c), coeff(std::size_t(c.K) * c.antennas() * c.N, Rat(1)) {}

  std::size_t pos(int j, const AntennaId& a, int mode) const {
    return (std::size_t(j - 1) * config.antennas() + antenna_index(config, a)) * config.N +
           (mode - 1);
  }
  const Rat& at(int j, const AntennaId& a, int mode) const { return coeff[pos(j, a, mode)]; }
  Rat& at(int j, const AntennaId& a, int mode) { return coeff[pos(j, a, mode)]; }
  std::size_t size() const { return coeff.size(); }
};

// ---------------------------------------------------------------------------
// Structural validation. Violations are data, not errors.

enum class ViolationCode {
  CONFIG_INVALID,
  PATTERN_MISSING,
  PATTERN_LENGTH,
  PATTERN_OUT_OF_RANGE,
  ANTENNA_OUT_OF_RANGE,
  BEAMFORMING_SHAPE,
  BEAMFORMING_NOT_BINARY,
  EMPTY_TRANSMITTER_SET,
  MEMBER_OUTSIDE_TRANSMITTERS,
  UNKNOWN_SET_MEMBER,
  DUPLICATE_SET_MEMBERSHIP,
};

inline const char* violation_name(ViolationCode c) {
  switch (c) {
    case ViolationCode::CONFIG_INVALID: return "CONFIG_INVALID";
    case ViolationCode::PATTERN_MISSING: return "PATTERN_MISSING";
    case ViolationCode::PATTERN_LENGTH: return "PATTERN_LENGTH";
    case ViolationCode::PATTERN_OUT_OF_RANGE: return "PATTERN_OUT_OF_RANGE";
    case ViolationCode::ANTENNA_OUT_OF_RANGE: return "ANTENNA_OUT_OF_RANGE";
    case ViolationCode::BEAMFORMING_SHAPE: return "BEAMFORMING_SHAPE";
    case ViolationCode::BEAMFORMING_NOT_BINARY: return "BEAMFORMING_NOT_BINARY";
    case ViolationCode::EMPTY_TRANSMITTER_SET: return "EMPTY_TRANSMITTER_SET";
    case ViolationCode::MEMBER_OUTSIDE_TRANSMITTERS: return "MEMBER_OUTSIDE_TRANSMITTERS";
    case ViolationCode::UNKNOWN_SET_MEMBER: return "UNKNOWN_SET_MEMBER";
    case ViolationCode::DUPLICATE_SET_MEMBERSHIP: return "DUPLICATE_SET_MEMBERSHIP";
  }
  return "UNKNOWN";
}

struct Violation {
  ViolationCode code;
  std::string where;
};

/// Empty result iff the Scheme invariants hold: binary beamforming entries,
/// pattern entries in [1:N] for all m slots of every receiver, set members that
/// reference existing symbols of their own transmitter set, and no symbol in
/// more than one alignment set.
inline std::vector<Violation> validate_scheme(const Scheme& s) {
  std::vector<Violation> out;
  auto add = [&](ViolationCode c, const std::string& w) { out.push_back({c, w}); };

  if (!s.config.valid() || s.m < 1) {
    add(ViolationCode::CONFIG_INVALID, "config/m");
    return out;
  }
  const auto& cfg = s.config;

  for (int j = 1; j <= cfg.K; ++j) {
    auto it = s.patterns.find(j);
    if (it == s.patterns.end()) {
      add(ViolationCode::PATTERN_MISSING, "receiver " + std::to_string(j));
      continue;
    }
    if (int(it->second.size()) != s.m) {
      add(ViolationCode::PATTERN_LENGTH, "receiver " + std::to_string(j));
      continue;
    }
    for (int t = 0; t < s.m; ++t) {
      int mode = it->second[t];
      if (mode < 1 || mode > cfg.N)
        add(ViolationCode::PATTERN_OUT_OF_RANGE,
            "receiver " + std::to_string(j) + " slot " + std::to_string(t + 1));
    }
  }
  for (const auto& [j, pat] : s.patterns)
    if (j < 1 || j > cfg.K) add(ViolationCode::PATTERN_OUT_OF_RANGE, "receiver " + std::to_string(j));

  for (const auto& [id, cols] : s.beamforming) {
    if (id.transmitter < 1 || id.transmitter > cfg.K || id.antenna < 1 || id.antenna > cfg.M) {
      add(ViolationCode::ANTENNA_OUT_OF_RANGE, id.str());
      continue;
    }
    for (std::size_t d = 0; d < cols.size(); ++d) {
      if (int(cols[d].size()) != s.m) {
        add(ViolationCode::BEAMFORMING_SHAPE, id.str() + " column " + std::to_string(d + 1));
        continue;
      }
      for (int t = 0; t < s.m; ++t)
        if (cols[d][t] != 0 && cols[d][t] != 1)
          add(ViolationCode::BEAMFORMING_NOT_BINARY,
              id.str() + " column " + std::to_string(d + 1) + " slot " + std::to_string(t + 1));
    }
  }

  std::set<SymbolRef> seen;
  for (std::size_t si = 0; si < s.sets.size(); ++si) {
    const auto& set = s.sets[si];
    const std::string tag = "set " + std::to_string(si + 1);
    if (set.transmitters.empty()) add(ViolationCode::EMPTY_TRANSMITTER_SET, tag);
    std::set<int> trans(set.transmitters.begin(), set.transmitters.end());
    for (const auto& mem : set.members) {
      const std::string mtag = tag + " member " + mem.antenna.str() + "," + std::to_string(mem.symbol);
      if (!trans.count(mem.antenna.transmitter)) add(ViolationCode::MEMBER_OUTSIDE_TRANSMITTERS, mtag);
      if (mem.symbol < 1 || mem.symbol > s.symbols_of(mem.antenna))
        add(ViolationCode::UNKNOWN_SET_MEMBER, mtag);
      if (!seen.insert(mem).second) add(ViolationCode::DUPLICATE_SET_MEMBERSHIP, mtag);
    }
  }
  return out;
}

inline bool has_violation(const std::vector<Violation>& v, ViolationCode c) {
  for (const auto& x : v)
    if (x.code == c) return true;
  return false;
}

// ---------------------------------------------------------------------------

/// Effective received columns of one antenna at one receiver over the symbol
/// extension: entry (t, d) = h_{j,i(a)}(l_j(t)) * v_{i(a),d}(t). The result is
/// m x d_{i(a)}; a zero-symbol antenna yields an m x 0 matrix.
inline RatMat effective_columns(const Scheme& s, const ChannelRealization& ch, int receiver,
                                const AntennaId& antenna) {
  if (receiver < 1 || receiver > s.config.K) throw Error(Errc::Domain, "receiver out of range");
  auto pit = s.patterns.find(receiver);
  if (pit == s.patterns.end() || int(pit->second.size()) != s.m)
    throw Error(Errc::Domain, "pattern missing for receiver " + std::to_string(receiver));
  const auto& pattern = pit->second;
  const int d = s.symbols_of(antenna);
  RatMat out(s.m, d);
  if (d == 0) return out;
  const auto& cols = s.beamforming.at(antenna);
  for (int t = 0; t < s.m; ++t) {
    const int mode = pattern[t];
    if (mode < 1 || mode > s.config.N)
      throw Error(Errc::PatternOutOfRange,
                  "receiver " + std::to_string(receiver) + " slot " + std::to_string(t + 1));
    const Rat& h = ch.at(receiver, antenna, mode);
    for (int c = 0; c < d; ++c)
      if (cols[c][t]) out.at(t, c) = h;
  }
  return out;
}

}  // namespace bia
