#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "allsat/formula.hpp"
#include "allsat/literal.hpp"

namespace allsat {

// Level assigned to unassigned variables in queries.
constexpr int kNoLevel = std::numeric_limits<int>::max();

// Why a literal is on the trail.
//
//   Decision    chosen by the branching heuristic; opens a decision level
//   Unit        input unit clause, installed at level 0
//   Propagated  forced by `clause`, which is live in the clause database
//   Flip        negation of a decision, asserted after the subtree below it
//               was exhausted (conflict analysis or an enumerated model).
//               Its reason clause is not stored; it is reconstructed on
//               demand from the decisions below `flip_origin`.
struct Reason {
  enum class Tag : uint8_t { Decision, Unit, Propagated, Flip };

  Tag tag = Tag::Decision;
  ClauseRef clause = 0;  // Propagated only
  int flip_origin = 0;   // Flip only: level the literal's negation held as a decision

  static Reason decision() { return {Tag::Decision, 0, 0}; }
  static Reason unit() { return {Tag::Unit, 0, 0}; }
  static Reason propagated(ClauseRef c) { return {Tag::Propagated, c, 0}; }
  static Reason flip(int origin) { return {Tag::Flip, 0, origin}; }

  bool is_decision() const { return tag == Tag::Decision; }
};

// One journaled watch move, undone in reverse order to restore the watch
// lists bit for bit (same entries, same order).
struct WatchMove {
  ClauseRef clause;
  int slot;           // which watch slot of the clause moved
  uint32_t old_pos;   // previous position of that slot within the clause
  Lit from;
  uint32_t from_idx;  // index the clause occupied in from's watch list
  Lit to;
};

// Assignment trail, decision-level bookkeeping, clause database and
// two-watched-literal propagation.
//
// Backtracking is chronological: backtrack(t) removes exactly the trail
// entries whose level exceeds t and keeps the survivors in order. Because
// propagation assigns implied literals at the maximum level of their reason
// (which can be below the current decision level), the trail is not sorted
// by level and survivors of a backtrack can sit anywhere in it.
class Engine {
 public:
  explicit Engine(const CnfFormula& f);

  // --- assignment -------------------------------------------------------

  // Puts `l` on the trail at `level` with reason `r`. Assigning a variable
  // that already has a value is a programming error and throws.
  void assign(Lit l, int level, Reason r);

  // Opens a new decision level with `l` as its decision.
  void decide(Lit l);

  // Installs an input unit clause at level 0. Returns false if the literal
  // is already false (the formula is unsatisfiable at level 0).
  bool install_unit(Lit l);

  // Removes every trail entry with level > target; survivors keep their
  // relative order. Phases of removed variables are saved. No-op when
  // target >= current_level().
  void backtrack(int target);

  // Runs unit propagation to fixpoint. Returns the falsified clause on
  // conflict, nullopt otherwise. Implied literals are assigned at the
  // maximum level over the other literals of their reason clause.
  std::optional<ClauseRef> propagate();

  // --- clause database and watches ---------------------------------------

  // Appends a learned clause. lits[0] must be the literal about to be
  // asserted; the second watch is placed on a highest-level other literal.
  ClauseRef add_learned(std::vector<Lit> lits);

  // Re-points the watch slot of `clause` currently on `from` at `to`
  // (which must be a literal of the clause). When `journaled`, the move is
  // recorded for undo_journal_to.
  void move_watch(ClauseRef clause, Lit from, Lit to, bool journaled);

  size_t journal_mark() const { return journal_.size(); }

  // Undoes journaled moves back to `mark`, newest first. Watch lists end up
  // bit-identical to their state at the time of the mark.
  void undo_journal_to(size_t mark);

  // --- queries ------------------------------------------------------------

  Value value(Var v) const { return value_[static_cast<size_t>(v)]; }
  Value value(Lit l) const {
    Value v = value_[static_cast<size_t>(l.var())];
    if (v == Value::Unassigned) return v;
    return (v == Value::True) != l.is_negative() ? Value::True : Value::False;
  }
  bool is_true(Lit l) const { return value(l) == Value::True; }

  int level(Var v) const { return level_[static_cast<size_t>(v)]; }
  int level(Lit l) const { return level(l.var()); }
  const Reason& reason(Var v) const { return reason_[static_cast<size_t>(v)]; }
  bool saved_phase(Var v) const { return phase_[static_cast<size_t>(v)]; }

  int current_level() const { return current_level_; }

  // Decision literal that opened level dl (1 <= dl <= current_level()).
  Lit control(int dl) const { return control_[static_cast<size_t>(dl)]; }

  const std::vector<Lit>& trail() const { return trail_; }
  size_t num_assigned() const { return trail_.size(); }

  Var num_vars() const { return num_vars_; }
  const Clause& clause(ClauseRef c) const { return db_[c]; }
  size_t clause_count() const { return db_.size(); }
  size_t input_clause_count() const { return input_clause_count_; }
  size_t learned_clause_count() const { return db_.size() - input_clause_count_; }

  const std::vector<ClauseRef>& watch_list(Lit l) const {
    return watches_[l.code()];
  }
  bool has_watched_occurrence(Var v) const {
    return !watches_[Lit::positive(v).code()].empty() ||
           !watches_[Lit::negative(v).code()].empty();
  }

  // Maximum level over the clause's literals (the level propagation would
  // conflict at), 0 for the empty clause.
  int clause_level(ClauseRef c) const;

  uint64_t propagation_count() const { return propagations_; }

  // --- validation (test and paranoid-mode support) ------------------------

  // Each throws std::logic_error describing the first violation found.
  void validate_trail() const;             // value/level/reason/control coherence
  void validate_watches() const;           // every clause watched exactly twice, distinct slots
  void validate_propagation_complete() const;  // no unit or falsified clause left behind

 private:
  void attach_initial_watches(ClauseRef c);

  Var num_vars_;
  std::vector<Clause> db_;
  size_t input_clause_count_;
  std::vector<std::vector<ClauseRef>> watches_;  // indexed by Lit::code()

  std::vector<Value> value_;   // indexed by var
  std::vector<int> level_;     // kNoLevel when unassigned
  std::vector<Reason> reason_;
  std::vector<uint8_t> phase_;  // last value a variable held before unassignment

  std::vector<Lit> trail_;
  std::vector<Lit> control_;  // control_[dl] = decision of level dl; [0] invalid
  size_t qhead_ = 0;          // next trail position to propagate
  int current_level_ = 0;

  std::vector<WatchMove> journal_;
  uint64_t propagations_ = 0;
};

}  // namespace allsat
