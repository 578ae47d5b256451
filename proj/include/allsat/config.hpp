#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "allsat/literal.hpp"
#include "allsat/model.hpp"

namespace allsat {

class Engine;

// How aggressively a total satisfying trail is reduced before emission.
//
//   Dynamic       substitute watches onto other true trail literals to
//                 prove decisions redundant (strongest reduction)
//   Conservative  inspect only the already-watched pair of each clause;
//                 never moves a watch
//   None          emit total assignments unchanged
enum class ShrinkMode : uint8_t { Dynamic, Conservative, None };

enum class PolarityMode : uint8_t { AlwaysFalse, AlwaysTrue, Saved };

enum class Status : uint8_t { Complete, Unsat, Timeout, BudgetExhausted };

const char* to_string(ShrinkMode m);
const char* to_string(PolarityMode m);
const char* to_string(Status s);

struct SearchStats {
  uint64_t decisions = 0;
  uint64_t conflicts = 0;
  uint64_t propagations = 0;
  uint64_t learned = 0;  // conflicts that produced a clause; the run-ending
                         // level-0 conflict analyzes nothing and learns nothing
  uint64_t models = 0;
  uint64_t model_literals = 0;
  uint64_t shrink_calls = 0;
  uint64_t shrink_dropped = 0;  // trail literals cut by shrinking
  uint64_t watch_restore_checks = 0;
  uint64_t watch_restore_violations = 0;
};

// Observation points for tests and instrumentation. All callbacks run
// synchronously while the solver is paused; they must not drive the solver.
struct TestHooks {
  std::function<void(const Engine&, const std::vector<Lit>&, int)> on_learned;
  // engine state before the post-shrink backtrack, returned level, level at entry
  std::function<void(const Engine&, int, int)> on_shrink_done;
  std::function<void(const Engine&, const PartialModel&)> on_emit;
};

struct SolverConfig {
  ShrinkMode shrink = ShrinkMode::Conservative;
  PolarityMode polarity = PolarityMode::AlwaysFalse;

  double w_occ = 1.0;    // weight of the static occurrence count
  double w_act = 100.0;  // weight of the decaying activity score
  double decay = 0.95;   // activity decay factor, in (0, 1)

  // When nonempty, branching follows this variable order (first unassigned
  // entry wins) instead of the score; entries for variables that occur in
  // no clause are skipped. Scoring resumes if the list is exhausted.
  std::vector<Var> pinned_order;

  std::optional<uint64_t> step_budget;  // decisions + conflicts
  std::optional<double> time_budget_seconds;

  bool check_watch_restore = false;  // snapshot-compare watch lists around shrinking
  bool paranoid = false;             // full invariant scans after every propagation

  const TestHooks* hooks = nullptr;
};

struct EnumerationSummary {
  Status status = Status::Complete;
  uint64_t partial_models = 0;
  CoverageCount coverage = 0;
  SearchStats stats;
  double elapsed_seconds = 0.0;
  uint64_t input_clauses = 0;
  uint64_t clause_db_size = 0;

  std::string coverage_decimal() const { return coverage.get_str(); }
  bool complete() const {
    return status == Status::Complete || status == Status::Unsat;
  }
};

}  // namespace allsat
