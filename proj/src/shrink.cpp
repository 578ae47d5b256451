#include "allsat/shrink.hpp"

#include <algorithm>

#include "allsat/engine.hpp"

namespace allsat {

bool TrailView::contains(Lit l) const {
  return active[static_cast<size_t>(l.var())] != 0 && engine->is_true(l);
}

int check_literal_dynamic(Engine& eng, Lit l, int b, const TrailView& remaining) {
  // The list mutates as watches move off l, so walk a snapshot. A clause
  // watched twice by l (both slots collapsed onto it by earlier moves)
  // appears twice and is handled once per occurrence.
  const std::vector<ClauseRef> snapshot = eng.watch_list(l);
  for (ClauseRef cr : snapshot) {
    const Clause& c = eng.clause(cr);
    Lit substitute;
    for (Lit cand : c.lits) {
      if (cand != l && remaining.contains(cand)) {
        substitute = cand;
        break;
      }
    }
    if (substitute.valid()) {
      eng.move_watch(cr, l, substitute, /*journaled=*/true);
    } else {
      // No other literal of c survives, so c is satisfied by l alone:
      // l must stay in the model.
      b = std::max(b, eng.level(l));
    }
  }
  return b;
}

int check_literal_conservative(const Engine& eng, Lit l, int b,
                               const TrailView& remaining) {
  for (ClauseRef cr : eng.watch_list(l)) {
    const Clause& c = eng.clause(cr);
    const Lit other = c.lits[c.watch[c.lits[c.watch[0]] == l ? 1 : 0]];
    // Only the watched companion is consulted; a true non-watched literal
    // does not save l from being pinned.
    if (!remaining.contains(other)) b = std::max(b, eng.level(l));
  }
  return b;
}

ShrinkResult implicant_shrinking(Engine& eng, ShrinkMode mode) {
  const std::vector<Lit>& trail = eng.trail();

  if (mode == ShrinkMode::None)
    return {eng.current_level(), 0};

  TrailView remaining;
  remaining.engine = &eng;
  remaining.active.assign(static_cast<size_t>(eng.num_vars()) + 1, 0);
  for (Lit l : trail) remaining.active[static_cast<size_t>(l.var())] = 1;

  const size_t mark = eng.journal_mark();
  int b = 0;

  for (size_t i = trail.size(); i-- > 0;) {
    const Lit l = trail[i];
    remaining.drop(l.var());  // popped: later checks see only older entries

    if (eng.level(l) == 0) {
      // The trail below this point is the all-level-0 prefix; nothing there
      // can raise b above 0, and level-0 literals survive any backtrack.
      break;
    }
    if (!eng.reason(l.var()).is_decision()) {
      // Forced literals always stay: dropping one would let a later branch
      // revisit assignments this model already covers.
      b = std::max(b, eng.level(l));
    } else if (eng.level(l) > b) {
      b = mode == ShrinkMode::Dynamic
              ? check_literal_dynamic(eng, l, b, remaining)
              : check_literal_conservative(eng, l, b, remaining);
    } else if (eng.level(l) == b) {
      break;  // this decision and everything older is kept as-is
    }
  }

  eng.undo_journal_to(mark);

  uint64_t dropped = 0;
  for (Lit l : trail)
    if (eng.level(l) > b) ++dropped;
  return {b, dropped};
}

}  // namespace allsat
