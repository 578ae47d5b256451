#pragma once

#include <gmpxx.h>

#include <vector>

#include "allsat/formula.hpp"
#include "allsat/literal.hpp"

namespace allsat {

// Sum of 2^(num_vars - |model|) over the emitted models. Grows past 64 bits
// quickly (the paired-variable benchmark family alone reaches 3^(n/2)), so
// it is kept as an arbitrary-precision integer.
using CoverageCount = mpz_class;

// A consistent partial assignment, stored in trail order at the moment of
// emission. It covers the 2^(num_vars - |literals|) total assignments that
// agree with it; the enumeration guarantees every total model is covered by
// exactly one emitted model.
struct PartialModel {
  std::vector<Lit> literals;

  size_t size() const { return literals.size(); }
  bool contains(Lit l) const;
  bool consistent() const;  // no variable appears with both signs
  bool satisfies(const CnfFormula& f) const;

  // Literals ordered by ascending variable index, the order used in output.
  std::vector<Lit> sorted_by_var() const;
};

}  // namespace allsat
