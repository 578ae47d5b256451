#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "allsat/formula.hpp"
#include "allsat/model.hpp"

namespace allsat {

// Largest variable count the brute-force checks accept by default. 2^26
// assignments with mask-based clause evaluation stays under a minute.
constexpr int kDefaultOracleBound = 26;

class OracleBoundExceeded : public std::runtime_error {
 public:
  explicit OracleBoundExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

struct CoverViolation {
  enum class Kind : uint8_t {
    InconsistentModel,  // a partial model contains x and not-x
    NotCovered,         // a total model no partial model covers
    MultiplyCovered,    // a total model covered by >= 2 partial models
    NonModelCovered,    // a falsifying assignment some model covers
  };
  Kind kind;
  uint64_t assignment = 0;  // bit v-1 = value of variable v
  int times_covered = 0;
  size_t model_index = 0;  // InconsistentModel only
};

struct OracleReport {
  mpz_class model_count = 0;
  bool cover_ok = false;     // models covered at least once, non-models never
  bool disjoint_ok = false;  // nothing covered twice
  std::optional<CoverViolation> first_violation;

  bool exact_cover() const { return cover_ok && disjoint_ok; }
};

// Counts satisfying total assignments by exhaustive evaluation, independent
// of the search engine (no watches, no propagation). Throws
// OracleBoundExceeded when num_vars > max_vars.
mpz_class count_models(const CnfFormula& f, int max_vars = kDefaultOracleBound);

// Same, over a raw clause list that need not be normalized (tautologies and
// duplicate literals are fine). Used to check that normalization preserves
// the model set.
mpz_class count_models_raw(Var num_vars,
                           const std::vector<std::vector<Lit>>& clauses,
                           int max_vars = kDefaultOracleBound);

// Checks that `models` covers every satisfying total assignment exactly once
// and covers no falsifying assignment. Scans assignments in variable-index
// bit order (variable v is bit v-1) and reports the first violation.
OracleReport verify_cover(const CnfFormula& f,
                          const std::vector<PartialModel>& models,
                          int max_vars = kDefaultOracleBound);

}  // namespace allsat
