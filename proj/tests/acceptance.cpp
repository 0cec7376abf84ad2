// Acceptance suite: one pass/fail line per criterion, exact tolerances pinned
// in code. Exit code 0 only if every criterion holds.
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bia/bounds.hpp"
#include "bia/cli.hpp"
#include "bia/converse.hpp"
#include "bia/scheme_io.hpp"
#include "bia/synth.hpp"
#include "bia/verifier.hpp"

using namespace bia;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::string&)> run;
};

bool check_eq(std::string& log, const std::string& what, const Rat& got, const Rat& want) {
  if (got == want) return true;
  log += "  " + what + ": got " + rat_str(got) + ", want " + rat_str(want) + "\n";
  return false;
}

// 1. Bound fidelity: exact rational equality on the reference configurations.
bool criterion1(std::string& log) {
  bool ok = true;
  ok &= check_eq(log, "(1,2,3)", optimal_preset_modes({1, 2, 3}).bound, Rat(6, 5));
  ok &= check_eq(log, "(2,2,3)", optimal_preset_modes({2, 2, 3}).bound, Rat(3, 2));
  ok &= check_eq(log, "(1,2,4)", optimal_preset_modes({1, 2, 4}).bound, Rat(4, 3));
  ok &= check_eq(log, "(1,2,5)", optimal_preset_modes({1, 2, 5}).bound, Rat(10, 7));
  ok &= check_eq(log, "(2,3,6)", optimal_preset_modes({2, 3, 6}).bound, Rat(9, 5));
  for (int M = 1; M <= 4; ++M)
    for (int K = 2; K <= 10; ++K) {
      std::string tag = "(M,M,K)=(" + std::to_string(M) + "," + std::to_string(M) + "," +
                        std::to_string(K) + ")";
      ok &= check_eq(log, tag, optimal_preset_modes({M, M, K}).bound,
                     make_rat(Int(M) * K, Int(M) + K - 1));
    }
  return ok;
}

// 2. Mode-count thresholds over K in [2:20], exact comparisons.
bool criterion2(std::string& log) {
  bool ok = true;
  for (int K = 2; K <= 20; ++K) {
    Rat d2 = siso_bound(2, K).bound;
    Rat d3 = siso_bound(3, K).bound;
    Rat d4 = siso_bound(4, K).bound;
    if ((d3 > d2) != (K >= 7)) {
      log += "  N=2->3 at K=" + std::to_string(K) + " unexpected\n";
      ok = false;
    }
    if ((d4 > d3) != (K >= 13)) {
      log += "  N=3->4 at K=" + std::to_string(K) + " unexpected\n";
      ok = false;
    }
  }
  if (siso_bound(3, 6).bound != siso_bound(2, 6).bound) {
    log += "  equality at K=6 broken\n";
    ok = false;
  }
  if (siso_bound(4, 12).bound != siso_bound(3, 12).bound) {
    log += "  equality at K=12 broken\n";
    ok = false;
  }
  return ok;
}

// 3. Exact LP optimum equals the closed form for all MK <= 8, n <= min(4, MK).
bool criterion3(std::string& log) {
  bool ok = true;
  for (int M = 1; M <= 4; ++M)
    for (int K = 2; K <= 8; ++K) {
      if (M * K > 8) continue;
      for (int n = 1; n <= std::min(4, M * K); ++n) {
        SystemConfig cfg{M, n, K};
        Rat lp = solve_converse_lp(build_converse_lp(cfg, n));
        Rat closed = ldof_function(M, K, n);
        if (lp != closed) {
          log += "  gap at (M,K,n)=(" + std::to_string(M) + "," + std::to_string(K) + "," +
                 std::to_string(n) + "): lp=" + rat_str(lp) + " closed=" + rat_str(closed) + "\n";
          ok = false;
        }
      }
    }
  return ok;
}

// 4. Exhaustive multiset enumeration keeps the uniform cardinality optimal.
bool criterion4(std::string& log) {
  bool ok = true;
  for (int M = 1; M <= 2; ++M)
    for (int K = 2; K <= 8; ++K)
      for (int N = 1; N <= 4; ++N) {
        SymmetricOptimality r = check_symmetric_optimality({M, N, K}, 5);
        if (!r.symmetric_is_max) {
          log += "  asymmetric optimum at (M,N,K)=(" + std::to_string(M) + "," +
                 std::to_string(N) + "," + std::to_string(K) + ")\n";
          ok = false;
        }
      }
  return ok;
}

// 5. Golden fixtures verify 100/100 in exact mode with the stated per-user DoF.
bool criterion5(std::string& log) {
  bool ok = true;
  Scheme ex3 = load_scheme_file("fixtures/ex3.json");
  Scheme ex4 = load_scheme_file("fixtures/ex4.json");

  MonteCarloReport r3 = monte_carlo(ex3, 100, 20240001ULL);
  if (!(r3.passes == 100 && r3.sum_dof == Rat(4, 3))) {
    log += "  4-user fixture: " + std::to_string(r3.passes) + "/100, sum=" + rat_str(r3.sum_dof) +
           "\n";
    ok = false;
  }
  MonteCarloReport r4 = monte_carlo(ex4, 100, 20240002ULL);
  if (!(r4.passes == 100 && r4.sum_dof == Rat(10, 7))) {
    log += "  5-user fixture: " + std::to_string(r4.passes) + "/100, sum=" + rat_str(r4.sum_dof) +
           "\n";
    ok = false;
  }
  VerificationReport v3 = verify(ex3, sample_channel(ex3.config, 55));
  for (const auto& [j, u] : v3.per_user)
    if (u.measured_dof != 1 || u.interference_rank != u.expected_interference) {
      log += "  4-user fixture user " + std::to_string(j) + ": d=" +
             std::to_string(u.measured_dof) + " interference=" +
             std::to_string(u.interference_rank) + "/" + std::to_string(u.expected_interference) +
             "\n";
      ok = false;
    }
  VerificationReport v4 = verify(ex4, sample_channel(ex4.config, 55));
  for (const auto& [j, u] : v4.per_user)
    if (u.measured_dof != 2 || u.interference_rank != u.expected_interference) {
      log += "  5-user fixture user " + std::to_string(j) + " off\n";
      ok = false;
    }
  if (ex3.m != 3 || ex4.m != 7) {
    log += "  fixture extensions are not 3 and 7\n";
    ok = false;
  }
  return ok;
}

// 6. Synthesized schemes reach the ceiling exactly on 20 seeds each.
bool criterion6(std::string& log) {
  bool ok = true;
  std::vector<SystemConfig> configs = {{1, 2, 4}, {2, 2, 3}, {1, 2, 5},
                                       {1, 2, 7}, {2, 3, 6}, {1, 3, 9}};
  for (const SystemConfig& cfg : configs) {
    std::string tag =
        "(" + std::to_string(cfg.M) + "," + std::to_string(cfg.N) + "," + std::to_string(cfg.K) + ")";
    Rat bound = optimal_preset_modes(cfg).bound;
    try {
      Scheme s = synthesize(cfg);
      MonteCarloReport rep = monte_carlo(s, 20, 77000000ULL + cfg.M * 100 + cfg.N * 10 + cfg.K);
      if (!rep.all_passed || rep.sum_dof != bound) {
        log += "  " + tag + ": " + std::to_string(rep.passes) + "/20, sum=" +
               rat_str(rep.sum_dof) + ", bound=" + rat_str(bound) + "\n";
        ok = false;
      }
    } catch (const Error& e) {
      log += "  " + tag + ": " + e.what() + "\n";
      ok = false;
    }
  }
  return ok;
}

// 7. Staircase behaviour of the bound in N.
bool criterion7(std::string& log) {
  bool ok = true;
  auto rows = sweep_bound(1, 7, 6);
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].bound < rows[i - 1].bound) {
      log += "  (1,7) sweep decreases at N=" + std::to_string(rows[i].N) + "\n";
      ok = false;
    }
  if (!(rows[2].bound > rows[1].bound)) {
    log += "  (1,7) sweep does not rise at N=3\n";
    ok = false;
  }
  for (std::size_t i = 2; i < rows.size(); ++i)
    if (rows[i].bound != rows[2].bound) {
      log += "  (1,7) sweep not constant beyond N=3\n";
      ok = false;
    }

  auto rows2 = sweep_bound(2, 6, 5);
  std::vector<Rat> expect = {Rat(1), Rat(12, 7), Rat(9, 5), Rat(2), Rat(2)};
  for (std::size_t i = 0; i < rows2.size(); ++i)
    if (rows2[i].bound != expect[i]) {
      log += "  (2,6) sweep row N=" + std::to_string(rows2[i].N) + " is " +
             rat_str(rows2[i].bound) + ", want " + rat_str(expect[i]) + "\n";
      ok = false;
    }
  for (std::size_t i = 1; i < rows2.size(); ++i)
    if (rows2[i].bound < rows2[i - 1].bound) {
      log += "  (2,6) sweep decreases\n";
      ok = false;
    }
  return ok;
}

// 8. Negative control: an all-ones pattern must fail on every seed.
bool criterion8(std::string& log) {
  Scheme bad = load_scheme_file("fixtures/ex4.json");
  bad.patterns[1] = std::vector<int>(bad.m, 1);
  MonteCarloReport rep = monte_carlo(bad, 10, 4242);
  if (rep.passes != 0) {
    log += "  corrupted scheme still passed " + std::to_string(rep.passes) + "/10\n";
    return false;
  }
  if (!rep.first_failure) {
    log += "  no failure report captured\n";
    return false;
  }
  bool someone_short = false;
  for (const auto& [j, u] : rep.first_failure->per_user)
    if (u.measured_dof < u.expected_dof) someone_short = true;
  if (!someone_short) {
    log += "  no user fell short of its expected DoF\n";
    return false;
  }
  return true;
}

// 9. CLI determinism: identical invocation and seed, byte-identical output.
bool criterion9(std::string& log) {
  bool ok = true;
  std::vector<std::vector<std::string>> cases = {
      {"bound", "--M", "1", "--N", "2", "--K", "5"},
      {"bound", "--M", "2", "--N", "3", "--K", "6"},
      {"sweep", "--M", "1", "--K", "7", "--n-max", "6"},
      {"synth", "--M", "1", "--N", "2", "--K", "5"},
      {"lp", "--M", "1", "--N", "2", "--K", "3", "--n", "2"},
      {"efficiency", "--M", "1", "--K", "5", "--cardinalities", "2,2,2,2,2"},
  };
  for (const auto& args : cases) {
    std::ostringstream o1, e1, o2, e2;
    int r1 = cli_run(args, o1, e1);
    int r2 = cli_run(args, o2, e2);
    if (r1 != r2 || o1.str() != o2.str() || e1.str() != e2.str()) {
      log += "  nondeterministic: " + args[0] + "\n";
      ok = false;
    }
  }
  {
    std::ostringstream o1, e1, o2, e2;
    std::vector<std::string> v = {"verify", "fixtures/ex4.json", "--trials", "50", "--seed", "3"};
    int r1 = cli_run(v, o1, e1);
    int r2 = cli_run(v, o2, e2);
    if (r1 != 0 || r2 != 0 || o1.str() != o2.str()) {
      log += "  nondeterministic: verify\n";
      ok = false;
    }
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "bound fidelity on reference configurations", criterion1},
      {2, "extra-mode thresholds at K=7 and K=13", criterion2},
      {3, "exact LP optimum equals the closed form (MK <= 8)", criterion3},
      {4, "uniform cardinalities maximize the multiset bound", criterion4},
      {5, "golden schemes verify 100/100 with exact ranks", criterion5},
      {6, "synthesized schemes attain the ceiling on 20 seeds", criterion6},
      {7, "bound staircase: monotone, saturating", criterion7},
      {8, "negative control: flattened pattern always fails", criterion8},
      {9, "CLI determinism: byte-identical reruns", criterion9},
  };
  int failures = 0;
  for (auto& c : criteria) {
    std::string log;
    bool ok = false;
    try {
      ok = c.run(log);
    } catch (const std::exception& e) {
      log += std::string("  exception: ") + e.what() + "\n";
    }
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str());
    if (!ok) {
      std::fputs(log.c_str(), stdout);
      ++failures;
    }
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
