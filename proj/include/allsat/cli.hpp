#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "allsat/config.hpp"
#include "allsat/generators.hpp"
#include "allsat/model.hpp"
#include "allsat/oracle.hpp"

namespace allsat::cli {

// Exit codes shared by all subcommands.
constexpr int kExitComplete = 0;
constexpr int kExitUnsat = 1;         // clean enumeration with zero models
constexpr int kExitIncomplete = 2;    // step budget or timeout hit
constexpr int kExitUsage = 3;         // bad arguments, bad input, I/O failure

// Column order of every stats CSV row (solve --stats and bench --out).
extern const char* const kStatsCsvHeader;

struct SolveOptions {
  std::string cnf_path;
  SolverConfig config;
  bool emit_models = true;      // print a "v ... 0" line per model
  std::string stats_path;       // append a CSV row here when nonempty
};

// Streams models as "v <lit>.. 0" lines (literals ordered by variable) and
// ends with "s <status> models=<n> coverage=<decimal>".
int run_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::string cnf_path;
  std::string models_path;  // "-" reads stdin
  int oracle_bound = kDefaultOracleBound;
};

// Checks a model list against the formula by brute force; prints a verdict
// and the first violating assignment if any.
int run_verify(const VerifyOptions& opt, std::istream& in, std::ostream& out,
               std::ostream& err);

struct GenBinaryOptions {
  Var n = 0;
  std::string out_path;  // empty = stdout
};
int run_gen_binary(const GenBinaryOptions& opt, std::ostream& out,
                   std::ostream& err);

struct GenRnd3SatOptions {
  Rnd3SatSpec spec;
  std::string out_path;
};
int run_gen_rnd3sat(const GenRnd3SatOptions& opt, std::ostream& out,
                    std::ostream& err);

struct BenchOptions {
  std::string corpus_dir;  // every *.cnf file in it, sorted by name
  std::vector<ShrinkMode> modes;
  SolverConfig base;       // per-run config; shrink mode comes from `modes`
  std::string out_path;    // CSV destination, empty = stdout
  int jobs = 1;
};

// Runs each (file, mode) cell, one CSV row per cell. A failing cell (parse
// error, timeout) becomes a row with its status; the run never aborts.
int run_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);

// Parses "v ..." model lines, ignoring other lines, so solver output can be
// fed back directly.
std::vector<PartialModel> parse_model_lines(std::istream& in);

std::string format_model_line(const PartialModel& m);

}  // namespace allsat::cli
