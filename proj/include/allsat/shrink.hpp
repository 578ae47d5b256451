#pragma once

#include <cstdint>
#include <vector>

#include "allsat/config.hpp"
#include "allsat/literal.hpp"

namespace allsat {

class Engine;

// The portion of the trail a shrinking pass has not popped yet. Literals are
// popped newest-first; a literal belongs to the view while its variable is
// still marked active.
struct TrailView {
  const Engine* engine = nullptr;
  std::vector<uint8_t> active;  // indexed by var

  bool contains(Lit l) const;
  void drop(Var v) { active[static_cast<size_t>(v)] = 0; }
};

struct ShrinkResult {
  int backtrack_level = 0;  // emit the trail that survives backtracking here
  uint64_t dropped = 0;     // trail literals above that level
};

// Decides whether decision `l` (already popped from `remaining`) can be
// dropped from the model. For every clause watched by `l`, tries to re-point
// that watch at another literal true in `remaining`; the move is journaled
// so the caller can restore the lists. Clauses with no substitute pin `l`:
// the returned bound is raised to its level.
int check_literal_dynamic(Engine& eng, Lit l, int b, const TrailView& remaining);

// Same contract, but only the already-watched companion literal of each
// clause is consulted and no watch ever moves. Cheaper, pins more.
int check_literal_conservative(const Engine& eng, Lit l, int b,
                               const TrailView& remaining);

// Walks a total conflict-free trail newest-to-oldest and returns the lowest
// decision level whose trail prefix still satisfies every clause, together
// with the number of literals that cut makes redundant. Non-decisions pin
// their own level (they are forced, and dropping them would break the
// disjointness of the enumeration); decisions above the bound are checked
// against the watch lists. All journaled watch moves are undone before
// returning. Mode None reports the current level unchanged.
ShrinkResult implicant_shrinking(Engine& eng, ShrinkMode mode);

}  // namespace allsat
