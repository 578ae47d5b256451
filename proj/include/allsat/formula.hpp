#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "allsat/literal.hpp"

namespace allsat {

// Index of a clause in the engine's clause database. Clauses are never
// deleted, so refs stay stable for the lifetime of a run.
using ClauseRef = uint32_t;

enum class ClauseOrigin : uint8_t { Input, Learned };

// A disjunction of literals. `watch` holds the positions of the two watched
// literals within `lits`; it is maintained by the engine. For clauses of
// length >= 2 the two positions are distinct, except transiently while an
// implicant is being shrunk (a substitution step may collapse both watches
// onto the same literal until the journal is rolled back).
struct Clause {
  std::vector<Lit> lits;
  std::array<uint32_t, 2> watch{0, 1};
  ClauseOrigin origin = ClauseOrigin::Input;

  size_t size() const { return lits.size(); }
};

// A CNF formula in normalized form: no tautological clauses, no duplicate
// literals within a clause, and unit clauses split out into `units` (they
// are installed at decision level 0 rather than watched). Variables that
// appear in no clause are "don't care": the solver never assigns them, but
// they still widen the coverage of every partial model.
struct CnfFormula {
  Var num_vars = 0;
  std::vector<Clause> clauses;  // every clause has length >= 2
  std::vector<Lit> units;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseResult {
  CnfFormula formula;
  // The input contained an empty clause. The formula is trivially
  // unsatisfiable; callers should report zero models without searching.
  bool empty_clause = false;
};

// Reads DIMACS CNF: optional comment lines, a "p cnf <vars> <clauses>"
// header, then whitespace-separated literals with 0 terminating each clause.
// The clause count in the header is advisory; the parsed clauses win.
// Throws ParseError on malformed input.
ParseResult parse_dimacs(std::istream& in);
ParseResult parse_dimacs(const std::string& text);

// Writes the formula back as DIMACS; units are emitted as unit clauses.
// parse(write(f)) reproduces f exactly for normalized formulas.
void write_dimacs(const CnfFormula& f, std::ostream& out);
std::string write_dimacs_string(const CnfFormula& f);

}  // namespace allsat
