#include "allsat/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace allsat {

namespace {

std::logic_error engine_error(const std::string& what) {
  return std::logic_error("engine: " + what);
}

}  // namespace

Engine::Engine(const CnfFormula& f)
    : num_vars_(f.num_vars),
      db_(f.clauses),
      input_clause_count_(f.clauses.size()),
      watches_(2 * (static_cast<size_t>(f.num_vars) + 1)),
      value_(static_cast<size_t>(f.num_vars) + 1, Value::Unassigned),
      level_(static_cast<size_t>(f.num_vars) + 1, kNoLevel),
      reason_(static_cast<size_t>(f.num_vars) + 1),
      phase_(static_cast<size_t>(f.num_vars) + 1, 0) {
  control_.push_back(Lit());  // level 0 has no decision
  for (ClauseRef c = 0; c < db_.size(); ++c) {
    if (db_[c].size() < 2)
      throw engine_error("input clause " + std::to_string(c) +
                         " has fewer than 2 literals; units go through "
                         "install_unit");
    db_[c].watch = {0, 1};
    attach_initial_watches(c);
  }
}

void Engine::attach_initial_watches(ClauseRef c) {
  watches_[db_[c].lits[db_[c].watch[0]].code()].push_back(c);
  watches_[db_[c].lits[db_[c].watch[1]].code()].push_back(c);
}

void Engine::assign(Lit l, int level, Reason r) {
  size_t v = static_cast<size_t>(l.var());
  if (value_[v] != Value::Unassigned)
    throw engine_error("assign: variable " + std::to_string(l.var()) +
                       " already has a value");
  if (level > current_level_)
    throw engine_error("assign: level " + std::to_string(level) +
                       " above current " + std::to_string(current_level_));
  value_[v] = l.is_negative() ? Value::False : Value::True;
  level_[v] = level;
  reason_[v] = r;
  trail_.push_back(l);
  if (r.is_decision()) {
    if (level != current_level_ ||
        static_cast<int>(control_.size()) != level)
      throw engine_error("assign: decision outside decide()");
    control_.push_back(l);
  }
}

void Engine::decide(Lit l) {
  ++current_level_;
  assign(l, current_level_, Reason::decision());
}

bool Engine::install_unit(Lit l) {
  switch (value(l)) {
    case Value::True:
      return true;  // duplicate unit
    case Value::False:
      return false;
    case Value::Unassigned:
      assign(l, 0, Reason::unit());
      return true;
  }
  return false;
}

void Engine::backtrack(int target) {
  if (target < 0) throw engine_error("backtrack: negative level");
  if (target >= current_level_) return;

  size_t keep = 0;
  bool removed = false;
  for (size_t i = 0; i < trail_.size(); ++i) {
    Lit l = trail_[i];
    size_t v = static_cast<size_t>(l.var());
    if (level_[v] <= target) {
      trail_[keep++] = l;
    } else {
      phase_[v] = value_[v] == Value::True ? 1 : 0;
      value_[v] = Value::Unassigned;
      level_[v] = kNoLevel;
      reason_[v] = Reason();
      removed = true;
    }
  }
  trail_.resize(keep);
  control_.resize(static_cast<size_t>(target) + 1);
  current_level_ = target;

  // Out-of-order assignment levels mean a backtrack can uncover clauses
  // that are unit or false under the surviving prefix without any watch
  // being touched again (a watch that went false at a low level may have
  // been justified by a literal that just got removed). Re-running the
  // whole trail through propagation restores completeness.
  if (removed) qhead_ = 0;
}

std::optional<ClauseRef> Engine::propagate() {
  while (qhead_ < trail_.size()) {
    const Lit p = trail_[qhead_++];
    const Lit fl = ~p;  // literal that just became false
    auto& wl = watches_[fl.code()];

    size_t keep = 0;
    for (size_t i = 0; i < wl.size(); ++i) {
      const ClauseRef cr = wl[i];
      Clause& c = db_[cr];

      if (c.size() == 1) {  // learned unit clause, now falsified
        for (; i < wl.size(); ++i) wl[keep++] = wl[i];
        wl.resize(keep);
        return cr;
      }

      const int slot = c.lits[c.watch[0]] == fl ? 0 : 1;
      const Lit other = c.lits[c.watch[1 - slot]];
      if (value(other) == Value::True) {  // clause already satisfied
        wl[keep++] = cr;
        continue;
      }

      int repl = -1;
      for (size_t pos = 0; pos < c.lits.size(); ++pos) {
        if (pos == c.watch[0] || pos == c.watch[1]) continue;
        if (value(c.lits[pos]) != Value::False) {
          repl = static_cast<int>(pos);
          break;
        }
      }

      if (repl >= 0) {  // watch moves off the false literal
        c.watch[slot] = static_cast<uint32_t>(repl);
        watches_[c.lits[repl].code()].push_back(cr);
        continue;
      }

      if (value(other) == Value::Unassigned) {
        // Unit: all literals but `other` are false. The implied level is
        // the highest among them, which may lie below current_level_.
        int lvl = 0;
        for (size_t pos = 0; pos < c.lits.size(); ++pos) {
          if (c.lits[pos] == other) continue;
          lvl = std::max(lvl, level(c.lits[pos].var()));
        }
        assign(other, lvl, Reason::propagated(cr));
        ++propagations_;
        wl[keep++] = cr;
        continue;
      }

      // Both watches false: conflict. Keep the remaining entries intact.
      for (; i < wl.size(); ++i) wl[keep++] = wl[i];
      wl.resize(keep);
      return cr;
    }
    wl.resize(keep);
  }
  return std::nullopt;
}

ClauseRef Engine::add_learned(std::vector<Lit> lits) {
  if (lits.empty()) throw engine_error("add_learned: empty clause");
  Clause c;
  c.lits = std::move(lits);
  c.origin = ClauseOrigin::Learned;
  ClauseRef cr = static_cast<ClauseRef>(db_.size());
  if (c.size() == 1) {
    // Watched once by its only literal so a later falsification is caught.
    c.watch = {0, 0};
    db_.push_back(std::move(c));
    watches_[db_[cr].lits[0].code()].push_back(cr);
    return cr;
  }
  // lits[0] is the literal the caller will assert; pair it with a
  // highest-level other literal so the second watch outlives backtracks
  // as long as possible.
  uint32_t second = 1;
  for (uint32_t pos = 2; pos < c.lits.size(); ++pos)
    if (level(c.lits[pos].var()) > level(c.lits[second].var())) second = pos;
  c.watch = {0, second};
  db_.push_back(std::move(c));
  attach_initial_watches(cr);
  return cr;
}

void Engine::move_watch(ClauseRef clause, Lit from, Lit to, bool journaled) {
  Clause& c = db_[clause];
  int slot;
  if (c.lits[c.watch[0]] == from)
    slot = 0;
  else if (c.lits[c.watch[1]] == from)
    slot = 1;
  else
    throw engine_error("move_watch: clause not watched by " + to_string(from));

  int to_pos = -1;
  for (size_t pos = 0; pos < c.lits.size(); ++pos)
    if (c.lits[pos] == to) {
      to_pos = static_cast<int>(pos);
      break;
    }
  if (to_pos < 0)
    throw engine_error("move_watch: " + to_string(to) + " not in clause");

  auto& from_list = watches_[from.code()];
  size_t idx = 0;
  while (idx < from_list.size() && from_list[idx] != clause) ++idx;
  if (idx == from_list.size())
    throw engine_error("move_watch: clause missing from watch list of " +
                       to_string(from));

  const uint32_t old_pos = c.watch[slot];
  if (idx != from_list.size() - 1) from_list[idx] = from_list.back();
  from_list.pop_back();
  watches_[to.code()].push_back(clause);
  c.watch[slot] = static_cast<uint32_t>(to_pos);

  if (journaled)
    journal_.push_back(
        {clause, slot, old_pos, from, static_cast<uint32_t>(idx), to});
}

void Engine::undo_journal_to(size_t mark) {
  while (journal_.size() > mark) {
    const WatchMove m = journal_.back();
    journal_.pop_back();

    auto& to_list = watches_[m.to.code()];
    if (to_list.empty() || to_list.back() != m.clause)
      throw engine_error("undo_journal_to: journal out of sync");
    to_list.pop_back();

    // Exact inverse of the swap-remove: the entry that was moved into the
    // vacated position goes back to the tail.
    auto& from_list = watches_[m.from.code()];
    if (m.from_idx == from_list.size()) {
      from_list.push_back(m.clause);
    } else {
      from_list.push_back(from_list[m.from_idx]);
      from_list[m.from_idx] = m.clause;
    }
    db_[m.clause].watch[m.slot] = m.old_pos;
  }
}

int Engine::clause_level(ClauseRef c) const {
  int lvl = 0;
  for (Lit l : db_[c].lits) {
    int ll = level(l.var());
    if (ll != kNoLevel) lvl = std::max(lvl, ll);
  }
  return lvl;
}

void Engine::validate_trail() const {
  std::vector<uint8_t> on_trail(static_cast<size_t>(num_vars_) + 1, 0);
  for (Lit l : trail_) {
    size_t v = static_cast<size_t>(l.var());
    if (on_trail[v]) throw engine_error("trail: variable twice on trail");
    on_trail[v] = 1;
    if (value(l) != Value::True)
      throw engine_error("trail: literal " + to_string(l) + " not true");
    int lvl = level_[v];
    if (lvl == kNoLevel || lvl < 0 || lvl > current_level_)
      throw engine_error("trail: bad level for " + to_string(l));
    const Reason& r = reason_[v];
    switch (r.tag) {
      case Reason::Tag::Decision:
        if (control_[static_cast<size_t>(lvl)] != l)
          throw engine_error("trail: decision not registered in control");
        break;
      case Reason::Tag::Unit:
        if (lvl != 0) throw engine_error("trail: unit reason above level 0");
        break;
      case Reason::Tag::Propagated: {
        if (r.clause >= db_.size())
          throw engine_error("trail: dangling reason clause");
        const Clause& c = db_[r.clause];
        bool found = false;
        for (Lit cl : c.lits) {
          if (cl == l) {
            found = true;
          } else if (value(cl) != Value::False) {
            throw engine_error("trail: reason clause of " + to_string(l) +
                               " not unit under trail");
          }
        }
        if (!found)
          throw engine_error("trail: reason clause lacks its literal");
        break;
      }
      case Reason::Tag::Flip:
        if (r.flip_origin != lvl + 1)
          throw engine_error("trail: flip origin must sit one above " +
                             to_string(l));
        break;
    }
  }
  for (Var v = 1; v <= num_vars_; ++v) {
    if (value_[static_cast<size_t>(v)] != Value::Unassigned &&
        !on_trail[static_cast<size_t>(v)])
      throw engine_error("trail: assigned variable missing from trail");
  }
  if (static_cast<int>(control_.size()) != current_level_ + 1)
    throw engine_error("trail: control stack size mismatch");
  for (int dl = 1; dl <= current_level_; ++dl) {
    Lit d = control_[static_cast<size_t>(dl)];
    if (!d.valid() || value(d) != Value::True ||
        level_[static_cast<size_t>(d.var())] != dl ||
        !reason_[static_cast<size_t>(d.var())].is_decision())
      throw engine_error("trail: control entry for level " +
                         std::to_string(dl) + " is not its decision");
  }
}

void Engine::validate_watches() const {
  std::vector<int> seen(db_.size(), 0);
  for (size_t code = 0; code < watches_.size(); ++code) {
    for (ClauseRef cr : watches_[code]) {
      const Clause& c = db_[cr];
      ++seen[cr];
      bool watched_here = false;
      for (int s = 0; s < 2; ++s)
        if (c.lits[c.watch[s]].code() == code) watched_here = true;
      if (!watched_here)
        throw engine_error("watches: clause listed under non-watch literal");
    }
  }
  for (ClauseRef cr = 0; cr < db_.size(); ++cr) {
    const Clause& c = db_[cr];
    if (c.size() == 1) {
      if (seen[cr] != 1)
        throw engine_error("watches: unit clause not watched exactly once");
      continue;
    }
    if (c.watch[0] >= c.lits.size() || c.watch[1] >= c.lits.size())
      throw engine_error("watches: watch position out of range");
    if (c.watch[0] == c.watch[1])
      throw engine_error("watches: watch slots collapsed outside shrinking");
    if (seen[cr] != 2)
      throw engine_error("watches: clause not watched exactly twice");
  }
}

void Engine::validate_propagation_complete() const {
  for (ClauseRef cr = 0; cr < db_.size(); ++cr) {
    const Clause& c = db_[cr];
    size_t non_false = 0;
    bool satisfied = false;
    Lit last_free;
    for (Lit l : c.lits) {
      Value v = value(l);
      if (v == Value::True) satisfied = true;
      if (v != Value::False) {
        ++non_false;
        last_free = l;
      }
    }
    if (satisfied) continue;
    if (non_false == 0)
      throw engine_error("propagation: clause " + std::to_string(cr) +
                         " is falsified but no conflict was reported");
    if (non_false == 1)
      throw engine_error("propagation: clause " + std::to_string(cr) +
                         " is unit on " + to_string(last_free) +
                         " but was not propagated");
  }
}

}  // namespace allsat
