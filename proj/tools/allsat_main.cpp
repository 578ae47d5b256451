// Command line front end: solve, verify, gen-binary, gen-rnd3sat, bench.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "allsat/cli.hpp"

namespace {

using namespace allsat;

uint64_t default_seed() {
  if (const char* env = std::getenv("SOLVER_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return 1;
}

void add_solver_flags(CLI::App* cmd, SolverConfig& cfg,
                      std::vector<int>& order) {
  static const std::map<std::string, ShrinkMode> shrink_names{
      {"dynamic", ShrinkMode::Dynamic},
      {"conservative", ShrinkMode::Conservative},
      {"none", ShrinkMode::None}};
  static const std::map<std::string, PolarityMode> polarity_names{
      {"false", PolarityMode::AlwaysFalse},
      {"true", PolarityMode::AlwaysTrue},
      {"saved", PolarityMode::Saved}};
  cmd->add_option("--shrink", cfg.shrink, "Implicant shrinking mode")
      ->transform(CLI::CheckedTransformer(shrink_names, CLI::ignore_case))
      ->default_str("conservative");
  cmd->add_option("--polarity", cfg.polarity, "Branch polarity")
      ->transform(CLI::CheckedTransformer(polarity_names, CLI::ignore_case))
      ->default_str("false");
  cmd->add_option("--order", order,
                  "Comma separated variable order tried before the scored "
                  "heuristic")
      ->delimiter(',');
  cmd->add_option("--w-occ", cfg.w_occ, "Occurrence weight in branch scores");
  cmd->add_option("--w-act", cfg.w_act, "Activity weight in branch scores");
  cmd->add_option("--decay", cfg.decay, "Activity decay per conflict")
      ->check(CLI::Range(1e-9, 1.0 - 1e-9));
  double timeout = 0.0;
  cmd->add_option("--timeout", timeout, "Wall clock budget in seconds")
      ->check(CLI::PositiveNumber)
      ->each([&cfg](const std::string& s) {
        cfg.time_budget_seconds = std::stod(s);
      });
  uint64_t budget = 0;
  cmd->add_option("--step-budget", budget,
                  "Abort after this many conflicts plus decisions")
      ->check(CLI::PositiveNumber)
      ->each([&cfg](const std::string& s) {
        cfg.step_budget = std::stoull(s);
      });
  cmd->add_flag("--paranoid", cfg.paranoid,
                "Re-validate trail and watch invariants every step (slow)");
  cmd->add_flag("--check-watch-restore", cfg.check_watch_restore,
                "Snapshot watch lists around dynamic shrinking");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disjoint partial-model enumeration for CNF formulas"};
  app.require_subcommand(1);

  // solve
  cli::SolveOptions solve_opt;
  std::vector<int> solve_order;
  CLI::App* solve = app.add_subcommand("solve", "Enumerate disjoint partial models");
  solve->add_option("cnf", solve_opt.cnf_path, "DIMACS CNF input")->required();
  add_solver_flags(solve, solve_opt.config, solve_order);
  solve->add_flag("!--no-models", solve_opt.emit_models,
                  "Suppress per-model output lines");
  solve->add_option("--stats", solve_opt.stats_path,
                    "Append a CSV stats row to this file");

  // verify
  cli::VerifyOptions verify_opt;
  CLI::App* verify =
      app.add_subcommand("verify", "Check a model list against a formula");
  verify->add_option("cnf", verify_opt.cnf_path, "DIMACS CNF input")->required();
  verify
      ->add_option("models", verify_opt.models_path,
                   "Model list file, '-' for stdin")
      ->default_val("-");
  verify->add_option("--bound", verify_opt.oracle_bound,
                     "Largest variable count the brute force check accepts");

  // gen-binary
  cli::GenBinaryOptions gb_opt;
  CLI::App* gen_binary =
      app.add_subcommand("gen-binary", "Generate the two-variable chain family");
  gen_binary->add_option("-n", gb_opt.n, "Number of variables (even)")
      ->required();
  gen_binary->add_option("-o,--out", gb_opt.out_path, "Output file (default stdout)");

  // gen-rnd3sat
  cli::GenRnd3SatOptions g3_opt;
  g3_opt.spec.seed = default_seed();
  CLI::App* gen_rnd =
      app.add_subcommand("gen-rnd3sat", "Generate a random 3-SAT instance");
  gen_rnd->add_option("-n", g3_opt.spec.n, "Number of variables")->required();
  gen_rnd->add_option("--ratio", g3_opt.spec.ratio, "Clause to variable ratio");
  gen_rnd->add_option("--seed", g3_opt.spec.seed, "PRNG seed");
  gen_rnd->add_option("-o,--out", g3_opt.out_path, "Output file (default stdout)");

  // bench
  cli::BenchOptions bench_opt;
  std::vector<int> bench_order;
  std::vector<std::string> bench_modes;
  CLI::App* bench =
      app.add_subcommand("bench", "Solve every .cnf in a directory per mode");
  bench->add_option("dir", bench_opt.corpus_dir, "Corpus directory")->required();
  bench
      ->add_option("--modes", bench_modes,
                   "Shrink modes to run (default: dynamic,conservative,none)")
      ->delimiter(',');
  add_solver_flags(bench, bench_opt.base, bench_order);
  bench->add_option("-o,--out", bench_opt.out_path, "CSV destination (default stdout)");
  bench->add_option("--jobs", bench_opt.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitUsage;
  }

  if (solve->parsed()) {
    solve_opt.config.pinned_order.assign(solve_order.begin(), solve_order.end());
    return cli::run_solve(solve_opt, std::cout, std::cerr);
  }
  if (verify->parsed())
    return cli::run_verify(verify_opt, std::cin, std::cout, std::cerr);
  if (gen_binary->parsed())
    return cli::run_gen_binary(gb_opt, std::cout, std::cerr);
  if (gen_rnd->parsed())
    return cli::run_gen_rnd3sat(g3_opt, std::cout, std::cerr);
  if (bench->parsed()) {
    bench_opt.base.pinned_order.assign(bench_order.begin(), bench_order.end());
    for (const std::string& name : bench_modes) {
      if (name == "dynamic")
        bench_opt.modes.push_back(ShrinkMode::Dynamic);
      else if (name == "conservative")
        bench_opt.modes.push_back(ShrinkMode::Conservative);
      else if (name == "none")
        bench_opt.modes.push_back(ShrinkMode::None);
      else {
        std::cerr << "error: unknown shrink mode '" << name << "'\n";
        return cli::kExitUsage;
      }
    }
    return cli::run_bench(bench_opt, std::cout, std::cerr);
  }
  return cli::kExitUsage;
}
