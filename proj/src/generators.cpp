#include "allsat/generators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace allsat {

namespace {

// Uniform draw from [0, k) by rejection, so results do not depend on the
// standard library's distribution implementation.
uint64_t uniform_below(std::mt19937_64& rng, uint64_t k) {
  const uint64_t limit = std::numeric_limits<uint64_t>::max() -
                         std::numeric_limits<uint64_t>::max() % k;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % k;
}

}  // namespace

CnfFormula gen_binary(Var n) {
  if (n <= 0 || n % 2 != 0)
    throw std::invalid_argument("gen_binary: n must be positive and even, got " +
                                std::to_string(n));
  CnfFormula f;
  f.num_vars = n;
  for (Var i = 1; i <= n / 2; ++i) {
    Clause c;
    c.lits = {Lit::positive(i), Lit::positive(n + 1 - i)};
    f.clauses.push_back(std::move(c));
  }
  return f;
}

CnfFormula gen_rnd3sat(const Rnd3SatSpec& spec) {
  if (spec.n < 3)
    throw std::invalid_argument("gen_rnd3sat: need at least 3 variables, got " +
                                std::to_string(spec.n));
  if (!(spec.ratio > 0))
    throw std::invalid_argument("gen_rnd3sat: ratio must be positive");

  const long num_clauses = std::lround(spec.ratio * spec.n);
  std::mt19937_64 rng(spec.seed);

  CnfFormula f;
  f.num_vars = spec.n;
  for (long i = 0; i < num_clauses; ++i) {
    Var v[3];
    v[0] = static_cast<Var>(uniform_below(rng, spec.n)) + 1;
    do {
      v[1] = static_cast<Var>(uniform_below(rng, spec.n)) + 1;
    } while (v[1] == v[0]);
    do {
      v[2] = static_cast<Var>(uniform_below(rng, spec.n)) + 1;
    } while (v[2] == v[0] || v[2] == v[1]);

    Clause c;
    for (Var var : v) {
      bool neg = (rng() & 1) != 0;
      c.lits.push_back(neg ? Lit::negative(var) : Lit::positive(var));
    }
    f.clauses.push_back(std::move(c));
  }
  return f;
}

}  // namespace allsat
