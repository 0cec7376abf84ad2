// Scheme interchange format: a single self-describing JSON document.
//
// Layout (version 1):
//   { "version": 1,
//     "config": {"M":., "N":., "K":.},
//     "m": .,
//     "beamforming": { "i(a)": [[column of m 0/1 entries], ...], ... },
//     "patterns": { "j": [m modes in 1..N], ... },
//     "sets": [ {"transmitters":[..], "members":[{"antenna":"i(a)","symbol":d},..]}, .. ] }
//
// save() emits a fixed canonical layout: two-space indentation, antennas in
// network order 1(1)..K(M), receivers ascending, arrays inline. load(save(s))
// is the identity, byte for byte, on canonicalized schemes.
#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bia/error.hpp"
#include "bia/model.hpp"

namespace bia {

inline constexpr int kSchemeFormatVersion = 1;

namespace detail {

inline std::string int_array(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

inline AntennaId parse_antenna_key(const std::string& key) {
  auto open = key.find('(');
  auto close = key.find(')');
  if (open == std::string::npos || close == std::string::npos || close != key.size() - 1 ||
      open == 0)
    throw Error(Errc::ParseError, "bad antenna key '" + key + "'");
  try {
    int t = std::stoi(key.substr(0, open));
    int a = std::stoi(key.substr(open + 1, close - open - 1));
    return AntennaId{t, a};
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "bad antenna key '" + key + "'");
  }
}

}  // namespace detail

inline std::string save_scheme(const Scheme& s) {
  std::ostringstream o;
  o << "{\n";
  o << "  \"version\": " << kSchemeFormatVersion << ",\n";
  o << "  \"config\": {\"M\": " << s.config.M << ", \"N\": " << s.config.N
    << ", \"K\": " << s.config.K << "},\n";
  o << "  \"m\": " << s.m << ",\n";
  o << "  \"beamforming\": {\n";
  {
    bool first = true;
    for (int idx = 0; idx < s.config.antennas(); ++idx) {
      AntennaId id = antenna_at(s.config, idx);
      auto it = s.beamforming.find(id);
      if (it == s.beamforming.end()) continue;
      if (!first) o << ",\n";
      first = false;
      o << "    \"" << id.str() << "\": [";
      for (std::size_t c = 0; c < it->second.size(); ++c) {
        if (c) o << ", ";
        o << detail::int_array(it->second[c]);
      }
      o << "]";
    }
    o << "\n  },\n";
  }
  o << "  \"patterns\": {\n";
  {
    bool first = true;
    for (const auto& [j, pat] : s.patterns) {
      if (!first) o << ",\n";
      first = false;
      o << "    \"" << j << "\": " << detail::int_array(pat);
    }
    o << "\n  },\n";
  }
  o << "  \"sets\": [\n";
  for (std::size_t i = 0; i < s.sets.size(); ++i) {
    const auto& set = s.sets[i];
    o << "    {\"transmitters\": " << detail::int_array(set.transmitters) << ", \"members\": [";
    for (std::size_t k = 0; k < set.members.size(); ++k) {
      if (k) o << ", ";
      o << "{\"antenna\": \"" << set.members[k].antenna.str()
        << "\", \"symbol\": " << set.members[k].symbol << "}";
    }
    o << "]}";
    if (i + 1 < s.sets.size()) o << ",";
    o << "\n";
  }
  o << "  ]\n";
  o << "}\n";
  return o.str();
}

inline Scheme load_scheme(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
  auto need = [&](const nlohmann::json& j, const char* field) -> const nlohmann::json& {
    if (!j.is_object() || !j.contains(field))
      throw Error(Errc::ParseError, std::string("missing field '") + field + "'");
    return j.at(field);
  };
  auto as_int = [&](const nlohmann::json& j, const std::string& field) -> int {
    if (!j.is_number_integer()) throw Error(Errc::ParseError, "field '" + field + "' must be an integer");
    return j.get<int>();
  };
  auto as_int_array = [&](const nlohmann::json& j, const std::string& field) -> std::vector<int> {
    if (!j.is_array()) throw Error(Errc::ParseError, "field '" + field + "' must be an array");
    std::vector<int> v;
    for (const auto& e : j) v.push_back(as_int(e, field));
    return v;
  };

  int version = as_int(need(doc, "version"), "version");
  if (version != kSchemeFormatVersion)
    throw Error(Errc::SchemaVersionMismatch,
                "document version " + std::to_string(version) + ", expected " +
                    std::to_string(kSchemeFormatVersion));

  Scheme s;
  const auto& cfg = need(doc, "config");
  s.config.M = as_int(need(cfg, "M"), "config.M");
  s.config.N = as_int(need(cfg, "N"), "config.N");
  s.config.K = as_int(need(cfg, "K"), "config.K");
  s.m = as_int(need(doc, "m"), "m");

  const auto& bf = need(doc, "beamforming");
  if (!bf.is_object()) throw Error(Errc::ParseError, "field 'beamforming' must be an object");
  for (auto it = bf.begin(); it != bf.end(); ++it) {
    AntennaId id = detail::parse_antenna_key(it.key());
    if (!it.value().is_array())
      throw Error(Errc::ParseError, "beamforming entry '" + it.key() + "' must be an array");
    std::vector<BinaryColumn> cols;
    for (const auto& col : it.value()) cols.push_back(as_int_array(col, "beamforming." + it.key()));
    s.beamforming[id] = std::move(cols);
  }

  const auto& pats = need(doc, "patterns");
  if (!pats.is_object()) throw Error(Errc::ParseError, "field 'patterns' must be an object");
  for (auto it = pats.begin(); it != pats.end(); ++it) {
    int j;
    try {
      j = std::stoi(it.key());
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad receiver key '" + it.key() + "'");
    }
    s.patterns[j] = as_int_array(it.value(), "patterns." + it.key());
  }

  const auto& sets = need(doc, "sets");
  if (!sets.is_array()) throw Error(Errc::ParseError, "field 'sets' must be an array");
  for (const auto& js : sets) {
    AlignmentSet set;
    set.transmitters = as_int_array(need(js, "transmitters"), "sets.transmitters");
    const auto& mem = need(js, "members");
    if (!mem.is_array()) throw Error(Errc::ParseError, "field 'sets.members' must be an array");
    for (const auto& jm : mem) {
      const auto& ant = need(jm, "antenna");
      if (!ant.is_string()) throw Error(Errc::ParseError, "member antenna must be a string");
      SymbolRef ref;
      ref.antenna = detail::parse_antenna_key(ant.get<std::string>());
      ref.symbol = as_int(need(jm, "symbol"), "sets.members.symbol");
      set.members.push_back(ref);
    }
    s.sets.push_back(std::move(set));
  }
  return s;
}

inline Scheme load_scheme_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_scheme(ss.str());
}

/// Label-independent normal form. Slots are permuted into lexicographic order
/// of their pattern signature (the column of modes across receivers 1..K),
/// symbols within each antenna are reordered by their permuted column vector,
/// members inside sets are sorted in network order and sets sorted overall.
/// Two schemes describe the same construction up to slot/symbol relabeling iff
/// their canonical forms are equal.
inline Scheme canonicalize_scheme(const Scheme& s) {
  std::vector<int> order(s.m);
  for (int t = 0; t < s.m; ++t) order[t] = t;
  auto signature = [&](int t) {
    std::vector<int> sig;
    sig.reserve(s.patterns.size());
    for (const auto& [j, pat] : s.patterns) sig.push_back(t < int(pat.size()) ? pat[t] : 0);
    return sig;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return signature(a) < signature(b); });

  Scheme out;
  out.config = s.config;
  out.m = s.m;
  for (const auto& [j, pat] : s.patterns) {
    std::vector<int> p(s.m);
    for (int t = 0; t < s.m; ++t) p[t] = pat[order[t]];
    out.patterns[j] = std::move(p);
  }

  // antenna -> old symbol -> new symbol
  std::map<AntennaId, std::vector<int>> symbol_map;
  for (const auto& [id, cols] : s.beamforming) {
    std::vector<BinaryColumn> permuted(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      BinaryColumn pc(s.m);
      for (int t = 0; t < s.m; ++t) pc[t] = cols[c][order[t]];
      permuted[c] = std::move(pc);
    }
    std::vector<int> idx(cols.size());
    for (std::size_t c = 0; c < idx.size(); ++c) idx[c] = int(c);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return permuted[a] < permuted[b]; });
    std::vector<BinaryColumn> sorted;
    std::vector<int> remap(cols.size());
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      sorted.push_back(permuted[idx[pos]]);
      remap[idx[pos]] = int(pos) + 1;
    }
    out.beamforming[id] = std::move(sorted);
    symbol_map[id] = std::move(remap);
  }

  for (const auto& set : s.sets) {
    AlignmentSet c;
    c.transmitters = set.transmitters;
    std::sort(c.transmitters.begin(), c.transmitters.end());
    for (const auto& mem : set.members) {
      SymbolRef r = mem;
      auto it = symbol_map.find(mem.antenna);
      if (it != symbol_map.end() && mem.symbol >= 1 && mem.symbol <= int(it->second.size()))
        r.symbol = it->second[mem.symbol - 1];
      c.members.push_back(r);
    }
    std::sort(c.members.begin(), c.members.end());
    out.sets.push_back(std::move(c));
  }
  std::sort(out.sets.begin(), out.sets.end(), [](const AlignmentSet& a, const AlignmentSet& b) {
    return std::tie(a.transmitters, a.members) < std::tie(b.transmitters, b.members);
  });
  return out;
}

/// Equality up to slot and symbol relabeling.
inline bool equivalent_schemes(const Scheme& a, const Scheme& b) {
  return canonicalize_scheme(a) == canonicalize_scheme(b);
}

}  // namespace bia
