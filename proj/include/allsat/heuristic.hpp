#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "allsat/config.hpp"
#include "allsat/formula.hpp"
#include "allsat/literal.hpp"

namespace allsat {

class Engine;

// Branching order and polarity. The score of a variable combines a static
// occurrence count (how often it appears in the input formula) with a
// decaying activity raised on every conflict:
//
//   score(v) = w_occ * occurrences(v) + w_act * activity(v)
//
// Ties prefer variables that watch at least one clause, then the smaller
// index. Variables occurring in no clause are never picked. A pinned order
// overrides scoring entirely while it has unassigned entries.
class Heuristic {
 public:
  Heuristic(const CnfFormula& f, const SolverConfig& cfg);

  // Highest-scoring unassigned variable with the configured polarity,
  // nullopt when every occurring variable is assigned.
  std::optional<Lit> pick_branch_literal(const Engine& eng) const;

  // Bumps every given variable and applies one decay step. Callers pass the
  // variables of the freshly learned clause plus those of the reasons
  // resolved while deriving it.
  void on_conflict(std::span<const Var> vars_to_bump);

  double activity(Var v) const { return activity_[static_cast<size_t>(v)]; }
  double occurrences(Var v) const { return occ_[static_cast<size_t>(v)]; }
  double score(Var v) const {
    return w_occ_ * occ_[static_cast<size_t>(v)] +
           w_act_ * activity_[static_cast<size_t>(v)];
  }
  bool occurs(Var v) const { return occ_[static_cast<size_t>(v)] > 0; }

 private:
  Lit with_polarity(Var v, const Engine& eng) const;

  std::vector<double> occ_;       // static, counted once from the input
  std::vector<double> activity_;
  double bump_inc_ = 1.0;         // grows by 1/decay per conflict; rescaled
                                  // with all activities when it overflows
  double w_occ_;
  double w_act_;
  double decay_;
  PolarityMode polarity_;
  std::vector<Var> pinned_order_;
};

}  // namespace allsat
