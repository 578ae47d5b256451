#include "allsat/heuristic.hpp"

#include <stdexcept>

#include "allsat/engine.hpp"

namespace allsat {

namespace {
// Rescale once any activity outgrows this; relative order is unaffected.
constexpr double kActivityLimit = 1e100;
constexpr double kActivityScale = 1e-100;
}  // namespace

Heuristic::Heuristic(const CnfFormula& f, const SolverConfig& cfg)
    : occ_(static_cast<size_t>(f.num_vars) + 1, 0.0),
      activity_(static_cast<size_t>(f.num_vars) + 1, 0.0),
      w_occ_(cfg.w_occ),
      w_act_(cfg.w_act),
      decay_(cfg.decay),
      polarity_(cfg.polarity),
      pinned_order_(cfg.pinned_order) {
  if (!(decay_ > 0.0 && decay_ < 1.0))
    throw std::invalid_argument("heuristic: decay must lie in (0, 1)");
  for (const Clause& c : f.clauses)
    for (Lit l : c.lits) occ_[static_cast<size_t>(l.var())] += 1.0;
  for (Lit u : f.units) occ_[static_cast<size_t>(u.var())] += 1.0;
  for (Var v : pinned_order_)
    if (v < 1 || v > f.num_vars)
      throw std::invalid_argument("heuristic: pinned variable " +
                                  std::to_string(v) + " out of range");
}

Lit Heuristic::with_polarity(Var v, const Engine& eng) const {
  switch (polarity_) {
    case PolarityMode::AlwaysTrue:
      return Lit::positive(v);
    case PolarityMode::Saved:
      return eng.saved_phase(v) ? Lit::positive(v) : Lit::negative(v);
    case PolarityMode::AlwaysFalse:
      break;
  }
  return Lit::negative(v);
}

std::optional<Lit> Heuristic::pick_branch_literal(const Engine& eng) const {
  for (Var v : pinned_order_)
    if (occurs(v) && eng.value(v) == Value::Unassigned)
      return with_polarity(v, eng);

  Var best = 0;
  double best_score = 0.0;
  bool best_watched = false;
  for (Var v = 1; v <= eng.num_vars(); ++v) {
    if (!occurs(v) || eng.value(v) != Value::Unassigned) continue;
    double s = score(v);
    bool watched = eng.has_watched_occurrence(v);
    if (best == 0 || s > best_score ||
        (s == best_score && watched && !best_watched)) {
      best = v;
      best_score = s;
      best_watched = watched;
    }
  }
  if (best == 0) return std::nullopt;
  return with_polarity(best, eng);
}

void Heuristic::on_conflict(std::span<const Var> vars_to_bump) {
  for (Var v : vars_to_bump) {
    double& a = activity_[static_cast<size_t>(v)];
    a += bump_inc_;
    if (a > kActivityLimit) {
      for (double& x : activity_) x *= kActivityScale;
      bump_inc_ *= kActivityScale;
    }
  }
  bump_inc_ /= decay_;  // one decay step per conflict, applied as a growing bump
}

}  // namespace allsat
