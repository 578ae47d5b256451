#pragma once

// Shared fixtures and helpers for the test suites.

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "allsat/formula.hpp"
#include "allsat/model.hpp"
#include "allsat/search.hpp"

namespace allsat_test {

using namespace allsat;

// (x1 v -x2)(x1 v -x3)(-x1 v -x2): three total models
// {x1,-x2,x3} {x1,-x2,-x3} {-x1,-x2,-x3}.
inline const char* kThreeClause =
    "p cnf 3 3\n"
    "1 -2 0\n"
    "1 -3 0\n"
    "-1 -2 0\n";

// (x1 v x2 v x3): seven total models.
inline const char* kOneClause = "p cnf 3 1\n1 2 3 0\n";

inline CnfFormula parse(const std::string& text) {
  ParseResult r = parse_dimacs(text);
  if (r.empty_clause) throw std::runtime_error("fixture has an empty clause");
  return std::move(r.formula);
}

inline std::vector<Lit> lits(std::initializer_list<int> dimacs) {
  std::vector<Lit> out;
  for (int d : dimacs) out.push_back(Lit::from_dimacs(d));
  return out;
}

inline PartialModel model_of(std::initializer_list<int> dimacs) {
  return PartialModel{lits(dimacs)};
}

// Model as sorted DIMACS ints, the easiest form to compare against.
inline std::vector<int> dimacs_of(const PartialModel& m) {
  std::vector<int> out;
  for (Lit l : m.sorted_by_var()) out.push_back(l.to_dimacs());
  return out;
}

struct Run {
  std::vector<PartialModel> models;
  EnumerationSummary summary;
};

inline Run run_collect(const CnfFormula& f, const SolverConfig& cfg) {
  Run r;
  r.summary = enumerate_models(
      f, cfg, [&r](const PartialModel& m) { r.models.push_back(m); });
  return r;
}

// Random CNF with mixed clause lengths (1..4), occasional duplicate literals
// and tautologies, routed through the parser so normalization runs too.
inline CnfFormula random_cnf(std::mt19937_64& rng, int num_vars,
                             int num_clauses) {
  std::ostringstream os;
  os << "p cnf " << num_vars << ' ' << num_clauses << '\n';
  std::uniform_int_distribution<int> var(1, num_vars);
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < num_clauses; ++i) {
    int k = len(rng);
    for (int j = 0; j < k; ++j) os << (coin(rng) ? 1 : -1) * var(rng) << ' ';
    os << "0\n";
  }
  return parse(os.str());
}

}  // namespace allsat_test
