// Command-line front end. cli_run() is the whole CLI behind a function so
// tests can drive it in-process and assert byte-identical reruns.
//
// Exit codes: 0 success/verified, 1 verification failed, 2 usage or parse
// error, 3 domain error, 4 unsupported configuration.
#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bia/bounds.hpp"
#include "bia/converse.hpp"
#include "bia/error.hpp"
#include "bia/scheme_io.hpp"
#include "bia/synth.hpp"
#include "bia/verifier.hpp"

namespace bia {

namespace cli_detail {

inline int exit_code_for(Errc c) {
  switch (c) {
    case Errc::ParseError:
    case Errc::SchemaVersionMismatch:
      return 2;
    case Errc::UnsupportedConfig:
      return 4;
    default:
      return 3;
  }
}

inline std::uint64_t default_seed() {
  if (const char* env = std::getenv("BIA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return 12345;
}

inline std::string bound_line(const BoundResult& b) {
  std::ostringstream o;
  o << "n*=" << b.n_star << " bound=" << rat_str(b.bound) << " (~" << rat_decimal(b.bound)
    << ") Gamma=" << b.gamma << " alpha=" << b.alpha;
  if (b.gamma_opt) o << " Gamma_opt=" << *b.gamma_opt;
  o << " branch=" << branch_name(b.branch);
  return o.str();
}

inline std::vector<std::vector<int>> parse_cells(const std::string& text) {
  std::vector<std::vector<int>> cells;
  std::stringstream byCell(text);
  std::string cell;
  while (std::getline(byCell, cell, ';')) {
    std::vector<int> counts;
    std::stringstream byAnt(cell);
    std::string tok;
    while (std::getline(byAnt, tok, ',')) {
      if (tok.empty()) continue;
      counts.push_back(std::stoi(tok));
    }
    if (!counts.empty()) cells.push_back(counts);
  }
  return cells;
}

inline void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::Domain, "cannot write '" + path + "'");
    f << content;
  }
}

}  // namespace cli_detail

inline int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"blind interference alignment workbench"};
  app.require_subcommand(1);

  // bound
  auto* bound = app.add_subcommand("bound", "sum-DoF ceiling and optimal preset-mode count");
  int bM = 1, bN = 1, bK = 2, bG = 1, bUsers = 1;
  bool cell = false, downlink = false, uplink = false;
  std::string cellAntennas;
  bound->add_option("--M", bM, "transmit antennas per transmitter");
  bound->add_option("--N", bN, "preset modes per receiver");
  bound->add_option("--K", bK, "transmitter-receiver pairs");
  bound->add_flag("--cell", cell, "cellular network bound");
  bound->add_flag("--downlink", downlink, "interfering broadcast (downlink)");
  bound->add_flag("--uplink", uplink, "interfering multiple access (uplink)");
  bound->add_option("--G", bG, "cells (downlink)");
  bound->add_option("--per-cell-users", bUsers, "users per cell (downlink)");
  bound->add_option("--per-cell-antennas", cellAntennas,
                    "uplink antenna counts, cells separated by ';' (e.g. 1,1;2;1,1)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "bound per preset-mode count, CSV");
  int sM = 1, sK = 2, sNmax = 1;
  std::string sweepOut;
  sweep->add_option("--M", sM)->required();
  sweep->add_option("--K", sK)->required();
  sweep->add_option("--n-max", sNmax)->required();
  sweep->add_option("--out", sweepOut, "CSV output path (default stdout)");

  // synth
  auto* synth = app.add_subcommand("synth", "synthesize a scheme document");
  int yM = 1, yN = 1, yK = 2;
  std::string synthOut;
  synth->add_option("--M", yM)->required();
  synth->add_option("--N", yN)->required();
  synth->add_option("--K", yK)->required();
  synth->add_option("--out", synthOut, "document output path (default stdout)");

  // verify
  auto* verifyCmd = app.add_subcommand("verify", "verify a scheme document on random channels");
  std::string schemePath;
  int trials = 100;
  std::uint64_t seed = cli_detail::default_seed();
  bool useFloat = false;
  verifyCmd->add_option("scheme", schemePath, "scheme document")->required();
  verifyCmd->add_option("--trials", trials, "number of random channels");
  verifyCmd->add_option("--seed", seed, "master seed (default env BIA_SEED or 12345)");
  verifyCmd->add_flag("--float", useFloat, "use the floating-point rank backend");

  // lp
  auto* lp = app.add_subcommand("lp", "exact converse LP vs closed form");
  int lM = 1, lN = 1, lK = 2, ln = 1;
  unsigned long long budget = 1000000ULL;
  std::string lpExport;
  lp->add_option("--M", lM)->required();
  lp->add_option("--N", lN)->required();
  lp->add_option("--K", lK)->required();
  lp->add_option("--n", ln)->required();
  lp->add_option("--export", lpExport, "write the LP in text form");
  lp->add_option("--budget", budget, "subset enumeration cap");

  // efficiency
  auto* eff = app.add_subcommand("efficiency", "bound for a multiset of set cardinalities");
  int eM = 1, eK = 2;
  std::string cardsText;
  eff->add_option("--M", eM)->required();
  eff->add_option("--K", eK)->required();
  eff->add_option("--cardinalities", cardsText, "comma-separated cardinalities (may be empty)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (bound->parsed()) {
      if (cell) {
        if (downlink == uplink)
          throw Error(Errc::Domain, "--cell requires exactly one of --downlink/--uplink");
        if (downlink) {
          CellularConfig cc{bG, bUsers, bM, bN, CellDirection::Downlink};
          out << cli_detail::bound_line(downlink_cell_bound(cc)) << "\n";
        } else {
          auto cells = cli_detail::parse_cells(cellAntennas);
          out << cli_detail::bound_line(uplink_cell_bound(cells, bN)) << "\n";
        }
      } else {
        out << cli_detail::bound_line(optimal_preset_modes(SystemConfig{bM, bN, bK})) << "\n";
      }
      return 0;
    }
    if (sweep->parsed()) {
      cli_detail::write_output(sweepOut, sweep_csv(sweep_bound(sM, sK, sNmax)), out);
      return 0;
    }
    if (synth->parsed()) {
      Scheme s = synthesize(SystemConfig{yM, yN, yK});
      cli_detail::write_output(synthOut, save_scheme(s), out);
      return 0;
    }
    if (verifyCmd->parsed()) {
      Scheme s = load_scheme_file(schemePath);
      auto violations = validate_scheme(s);
      if (!violations.empty()) {
        for (const auto& v : violations)
          err << "invalid scheme: " << violation_name(v.code) << " at " << v.where << "\n";
        return 2;
      }
      RankBackend backend = useFloat ? RankBackend::floating() : RankBackend::exact();
      MonteCarloReport rep = monte_carlo(s, trials, seed, backend);
      if (rep.first_failure) {
        out << "first failing trial:\n" << report_text(*rep.first_failure);
      }
      out << rep.passes << "/" << rep.trials << " pass, sum=" << rat_str(rep.sum_dof) << "\n";
      return rep.all_passed ? 0 : 1;
    }
    if (lp->parsed()) {
      SystemConfig cfg{lM, lN, lK};
      ConverseLp instance = build_converse_lp(cfg, ln, budget);
      if (!lpExport.empty()) {
        std::ofstream f(lpExport, std::ios::binary);
        if (!f) throw Error(Errc::Domain, "cannot write '" + lpExport + "'");
        f << lp_text(instance);
      }
      Rat opt = solve_converse_lp(instance);
      Rat closed = ldof_function(lM, lK, ln);
      out << "lp_opt=" << rat_str(opt) << " closed_form=" << rat_str(closed)
          << " gap=" << rat_str(closed - opt) << "\n";
      return 0;
    }
    if (eff->parsed()) {
      std::vector<int> cards;
      std::stringstream ss(cardsText);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        cards.push_back(std::stoi(tok));
      }
      Rat v = bound_for_cardinalities(eM, eK, cards);
      out << "bound=" << rat_str(v) << " (~" << rat_decimal(v) << ")\n";
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return cli_detail::exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace bia
