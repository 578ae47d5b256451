#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "allsat/config.hpp"
#include "allsat/engine.hpp"
#include "allsat/formula.hpp"
#include "allsat/heuristic.hpp"
#include "allsat/model.hpp"
#include "allsat/shrink.hpp"

namespace allsat {

// Receives each model as it is found. Streaming: the solver holds no model
// list. The sink must not call back into the solver; a thrown exception
// aborts the enumeration.
using ModelSink = std::function<void(const PartialModel&)>;

// Enumerates pairwise-disjoint partial models covering every total model of
// the formula exactly once, without ever adding blocking clauses. The clause
// database grows only through conflict analysis.
//
// The search is plain CDCL with two twists that preserve disjointness:
// conflicts always backtrack chronologically (one level below the conflict
// level) and resolve to the last UIP, i.e. the decision of the conflicting
// level, and every total satisfying trail is shrunk to a partial model
// before its highest surviving decision is flipped in place. Flipped
// literals carry no stored reason clause; conflict analysis reconstructs
// one from the decisions below them.
class Solver {
 public:
  Solver(const CnfFormula& f, SolverConfig cfg, ModelSink sink);

  // Runs the full enumeration. Call once per Solver instance.
  EnumerationSummary run();

  enum class Step : uint8_t { Continue, AllModelsFound };

  // --- individual phases, public for white-box tests ---------------------

  // Installs input unit clauses at level 0; false on contradiction.
  bool install_inputs();

  // Chronological conflict handling: first backtrack to the conflict's own
  // level if that is lower than the current one, stop if that level is 0,
  // otherwise learn the last-UIP clause, step one level down and assert the
  // flipped UIP with the learned clause as its reason.
  Step analyze_conflict(ClauseRef confl);

  // Total-trail handling: shrink, emit the surviving trail as a model, stop
  // if the model needs no decisions, otherwise flip the highest surviving
  // decision in place (one level down, reason reconstructed on demand).
  Step analyze_assignment();

  // Resolves the conflict clause backwards over the current level until only
  // its decision remains, yielding that decision and the learned clause
  // (learned[0] is the flipped UIP). No literal is dropped or minimized
  // away: literals forced by flips are not implied by the formula alone, so
  // every resolvent literal stays.
  std::pair<Lit, std::vector<Lit>> last_uip_analysis(ClauseRef confl);

  // Reason clause justifying flipped literal `l`: l itself plus the negation
  // of every decision at levels 1..level(l). Never stored in the database.
  // Throws if l's reason is not a flip.
  std::vector<Lit> reconstruct_flip_reason(Lit l) const;

  // Picks and asserts the next decision; false when the trail is total
  // (every variable occurring in the formula is assigned).
  bool decide_next();

  Engine& engine() { return engine_; }
  const SearchStats& stats() const { return stats_; }
  const CoverageCount& coverage() const { return coverage_; }

 private:
  Step emit_and_flip(const ShrinkResult& sr);
  void emit(const PartialModel& m);
  bool budget_exceeded();
  void maybe_validate();

  const CnfFormula& formula_;
  SolverConfig cfg_;
  ModelSink sink_;
  Engine engine_;
  Heuristic heuristic_;

  size_t num_occurring_ = 0;  // variables appearing in clauses or units
  SearchStats stats_;
  CoverageCount coverage_ = 0;
  uint64_t steps_ = 0;
  Status aborted_ = Status::Complete;  // set by budget_exceeded
  std::chrono::steady_clock::time_point deadline_{};
  bool has_deadline_ = false;
  std::vector<Var> bump_buf_;
};

EnumerationSummary enumerate_models(const CnfFormula& f, const SolverConfig& cfg,
                                    const ModelSink& sink);

}  // namespace allsat
