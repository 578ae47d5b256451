#pragma once

#include <cstdint>

#include "allsat/formula.hpp"

namespace allsat {

// Chain of independent binary clauses: (x_i v x_{n+1-i}) for i = 1..n/2.
// Each pair admits 3 satisfying combinations, so the formula has exactly
// 3^(n/2) total models. n must be positive and even.
CnfFormula gen_binary(Var n);

struct Rnd3SatSpec {
  Var n = 0;           // variables, >= 3
  double ratio = 1.5;  // clauses = round(ratio * n)
  uint64_t seed = 1;
};

// Random 3-SAT: round(ratio * n) clauses over 3 distinct variables each,
// every literal negated with probability 1/2. Duplicate clauses are allowed.
//
// Reproducibility: draws come from std::mt19937_64 seeded with `seed`,
// reduced by rejection sampling (values >= 2^64 - 2^64 mod k are redrawn),
// so the same spec yields the same formula on every platform. Per clause,
// variables are drawn first (redrawing duplicates), then one sign bit each.
CnfFormula gen_rnd3sat(const Rnd3SatSpec& spec);

}  // namespace allsat
