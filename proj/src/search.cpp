#include "allsat/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace allsat {

namespace {
// Wall-clock checks are batched: steady_clock reads per decision or conflict
// would dominate small instances.
constexpr uint64_t kTimeCheckInterval = 1024;
}  // namespace

Solver::Solver(const CnfFormula& f, SolverConfig cfg, ModelSink sink)
    : formula_(f), cfg_(std::move(cfg)), sink_(std::move(sink)),
      engine_(f), heuristic_(f, cfg_) {
  std::vector<uint8_t> occurs(static_cast<size_t>(f.num_vars) + 1, 0);
  for (const Clause& c : f.clauses)
    for (Lit l : c.lits) occurs[static_cast<size_t>(l.var())] = 1;
  for (Lit u : f.units) occurs[static_cast<size_t>(u.var())] = 1;
  num_occurring_ = static_cast<size_t>(
      std::count(occurs.begin() + 1, occurs.end(), uint8_t{1}));
  if (cfg_.time_budget_seconds) {
    has_deadline_ = true;
    deadline_ = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(*cfg_.time_budget_seconds));
  }
}

bool Solver::install_inputs() {
  for (Lit u : formula_.units)
    if (!engine_.install_unit(u)) return false;
  return true;
}

bool Solver::budget_exceeded() {
  ++steps_;
  if (cfg_.step_budget && steps_ > *cfg_.step_budget) {
    aborted_ = Status::BudgetExhausted;
    return true;
  }
  if (has_deadline_ && steps_ % kTimeCheckInterval == 0 &&
      std::chrono::steady_clock::now() >= deadline_) {
    aborted_ = Status::Timeout;
    return true;
  }
  return false;
}

void Solver::maybe_validate() {
  if (!cfg_.paranoid) return;
  engine_.validate_trail();
  engine_.validate_watches();
}

EnumerationSummary Solver::run() {
  const auto start = std::chrono::steady_clock::now();
  EnumerationSummary summary;
  summary.input_clauses = engine_.input_clause_count();

  bool finished = false;
  if (!install_inputs()) {
    finished = true;  // contradicting unit clauses: zero models
  }

  while (!finished) {
    if (auto confl = engine_.propagate()) {
      ++stats_.conflicts;
      if (budget_exceeded()) break;
      if (analyze_conflict(*confl) == Step::AllModelsFound) finished = true;
    } else {
      maybe_validate();
      if (cfg_.paranoid) engine_.validate_propagation_complete();
      if (engine_.num_assigned() == num_occurring_) {
        if (analyze_assignment() == Step::AllModelsFound) finished = true;
      } else {
        if (budget_exceeded()) break;
        if (!decide_next())
          throw std::logic_error("search: no decision on a partial trail");
      }
    }
  }

  stats_.propagations = engine_.propagation_count();
  summary.status = finished
                       ? (stats_.models > 0 ? Status::Complete : Status::Unsat)
                       : aborted_;
  summary.partial_models = stats_.models;
  summary.coverage = coverage_;
  summary.stats = stats_;
  summary.clause_db_size = engine_.clause_count();
  summary.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return summary;
}

bool Solver::decide_next() {
  auto pick = heuristic_.pick_branch_literal(engine_);
  if (!pick) return false;
  ++stats_.decisions;
  engine_.decide(*pick);
  return true;
}

Solver::Step Solver::analyze_conflict(ClauseRef confl) {
  // The conflict may live entirely below the current level (its literals
  // were assigned out of order). Drop to its own level before analyzing.
  const int conflict_level = engine_.clause_level(confl);
  if (conflict_level < engine_.current_level())
    engine_.backtrack(conflict_level);

  if (engine_.current_level() == 0) return Step::AllModelsFound;

  auto [uip, learned] = last_uip_analysis(confl);
  heuristic_.on_conflict(bump_buf_);
  if (cfg_.hooks && cfg_.hooks->on_learned)
    cfg_.hooks->on_learned(engine_, learned, engine_.current_level());

  const ClauseRef cr = engine_.add_learned(std::move(learned));
  ++stats_.learned;

  // Chronological step: undo just the conflicting level and flip its
  // decision, now forced by the learned clause.
  engine_.backtrack(engine_.current_level() - 1);
  engine_.assign(~uip, engine_.current_level(), Reason::propagated(cr));
  return Step::Continue;
}

std::pair<Lit, std::vector<Lit>> Solver::last_uip_analysis(ClauseRef confl) {
  const int dl = engine_.current_level();
  const Lit decision = engine_.control(dl);
  const std::vector<Lit>& trail = engine_.trail();

  // The resolvent is kept implicit: literals below dl go straight to the
  // learned clause, literals at dl are counted and resolved away as the
  // trail is walked backwards, until only the decision is left.
  std::vector<uint8_t> seen(static_cast<size_t>(engine_.num_vars()) + 1, 0);
  std::vector<Lit> below;
  size_t pending = 0;
  bump_buf_.clear();

  auto visit = [&](Lit q) {
    size_t v = static_cast<size_t>(q.var());
    if (seen[v]) return;
    seen[v] = 1;
    bump_buf_.push_back(q.var());
    if (engine_.level(q.var()) == dl)
      ++pending;
    else
      below.push_back(q);
  };

  for (Lit q : engine_.clause(confl).lits) visit(q);

  Lit uip;
  for (size_t i = trail.size(); i-- > 0;) {
    const Lit t = trail[i];
    if (!seen[static_cast<size_t>(t.var())] || engine_.level(t.var()) != dl)
      continue;
    if (t == decision) {
      uip = t;
      break;
    }
    // Resolve on t: replace ~t in the resolvent by the other reason literals.
    --pending;
    const Reason& r = engine_.reason(t.var());
    switch (r.tag) {
      case Reason::Tag::Propagated:
        for (Lit q : engine_.clause(r.clause).lits)
          if (q != t) visit(q);
        break;
      case Reason::Tag::Flip:
        for (Lit q : reconstruct_flip_reason(t))
          if (q != t) visit(q);
        break;
      case Reason::Tag::Decision:
      case Reason::Tag::Unit:
        throw std::logic_error(
            "analysis: non-decision level-dl literal without a clause reason");
    }
  }

  if (!uip.valid() || pending != 1)
    throw std::logic_error("analysis: resolution missed the decision");

  std::vector<Lit> learned;
  learned.reserve(below.size() + 1);
  learned.push_back(~uip);
  learned.insert(learned.end(), below.begin(), below.end());
  return {uip, std::move(learned)};
}

std::vector<Lit> Solver::reconstruct_flip_reason(Lit l) const {
  const Reason& r = engine_.reason(l.var());
  if (r.tag != Reason::Tag::Flip)
    throw std::logic_error("reconstruct_flip_reason: " + to_string(l) +
                           " was not flipped");
  // l was the decision of level flip_origin before the flip; every model
  // extending the decisions below it together with ~l has been emitted, so
  // those decisions now force l. level(l) == flip_origin - 1 by construction.
  std::vector<Lit> reason;
  reason.reserve(static_cast<size_t>(engine_.level(l.var())) + 1);
  reason.push_back(l);
  for (int dl = 1; dl <= engine_.level(l.var()); ++dl)
    reason.push_back(~engine_.control(dl));
  return reason;
}

Solver::Step Solver::analyze_assignment() {
  ++stats_.shrink_calls;

  std::vector<std::vector<ClauseRef>> watch_snapshot;
  if (cfg_.check_watch_restore && cfg_.shrink == ShrinkMode::Dynamic) {
    watch_snapshot.reserve(2 * (static_cast<size_t>(engine_.num_vars()) + 1));
    for (Var v = 1; v <= engine_.num_vars(); ++v) {
      watch_snapshot.push_back(engine_.watch_list(Lit::positive(v)));
      watch_snapshot.push_back(engine_.watch_list(Lit::negative(v)));
    }
  }

  const int dl = engine_.current_level();
  const ShrinkResult sr = implicant_shrinking(engine_, cfg_.shrink);
  stats_.shrink_dropped += sr.dropped;

  if (cfg_.check_watch_restore && cfg_.shrink == ShrinkMode::Dynamic) {
    ++stats_.watch_restore_checks;
    size_t idx = 0;
    for (Var v = 1; v <= engine_.num_vars(); ++v) {
      if (watch_snapshot[idx++] != engine_.watch_list(Lit::positive(v)) ||
          watch_snapshot[idx++] != engine_.watch_list(Lit::negative(v)))
        ++stats_.watch_restore_violations;
    }
  }
  if (cfg_.hooks && cfg_.hooks->on_shrink_done)
    cfg_.hooks->on_shrink_done(engine_, sr.backtrack_level, dl);

  return emit_and_flip(sr);
}

Solver::Step Solver::emit_and_flip(const ShrinkResult& sr) {
  const int target = sr.backtrack_level;
  engine_.backtrack(target);

  PartialModel model;
  model.literals = engine_.trail();
  emit(model);

  if (target == 0) return Step::AllModelsFound;

  // Flip the highest surviving decision in place: everything under it and
  // the emitted model itself is covered, so its negation now holds one
  // level further down, justified by a reason built on demand.
  const Lit flipped = ~engine_.control(target);
  engine_.backtrack(target - 1);
  engine_.assign(flipped, engine_.current_level(), Reason::flip(target));
  return Step::Continue;
}

void Solver::emit(const PartialModel& m) {
  ++stats_.models;
  stats_.model_literals += m.size();
  mpz_class weight;
  mpz_ui_pow_ui(weight.get_mpz_t(), 2,
                static_cast<unsigned long>(formula_.num_vars) -
                    static_cast<unsigned long>(m.size()));
  coverage_ += weight;
  if (cfg_.paranoid && !m.satisfies(formula_))
    throw std::logic_error("emit: partial model does not satisfy the formula");
  if (cfg_.hooks && cfg_.hooks->on_emit) cfg_.hooks->on_emit(engine_, m);
  if (sink_) sink_(m);
}

EnumerationSummary enumerate_models(const CnfFormula& f,
                                    const SolverConfig& cfg,
                                    const ModelSink& sink) {
  Solver solver(f, cfg, sink);
  return solver.run();
}

}  // namespace allsat
