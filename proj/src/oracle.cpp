#include "allsat/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace allsat {

namespace {

// Mask view of a clause: satisfied by assignment A (bit v-1 = value of v)
// iff A intersects pos or the complement of A intersects neg. The encoding
// handles tautologies and duplicate literals as-is.
struct ClauseMasks {
  uint64_t pos = 0;
  uint64_t neg = 0;
};

ClauseMasks masks_of(const std::vector<Lit>& lits) {
  ClauseMasks m;
  for (Lit l : lits) {
    uint64_t bit = uint64_t{1} << (l.var() - 1);
    if (l.is_negative())
      m.neg |= bit;
    else
      m.pos |= bit;
  }
  return m;
}

void check_bound(Var num_vars, int max_vars, const char* who) {
  if (max_vars > 62)
    throw OracleBoundExceeded(std::string(who) +
                              ": bound above 62 variables is not supported");
  if (num_vars > max_vars)
    throw OracleBoundExceeded(std::string(who) + ": formula has " +
                              std::to_string(num_vars) +
                              " variables, brute-force bound is " +
                              std::to_string(max_vars));
}

mpz_class count_over(Var num_vars, const std::vector<ClauseMasks>& clauses) {
  const uint64_t space = uint64_t{1} << num_vars;
  const uint64_t full = space - 1;
  uint64_t count = 0;
  for (uint64_t a = 0; a < space; ++a) {
    bool sat = true;
    for (const ClauseMasks& c : clauses) {
      if ((a & c.pos) == 0 && (~a & c.neg & full) == 0) {
        sat = false;
        break;
      }
    }
    count += sat;
  }
  return mpz_class(static_cast<unsigned long>(count));
}

}  // namespace

mpz_class count_models(const CnfFormula& f, int max_vars) {
  check_bound(f.num_vars, max_vars, "count_models");
  std::vector<ClauseMasks> clauses;
  clauses.reserve(f.clauses.size() + f.units.size());
  for (const Clause& c : f.clauses) clauses.push_back(masks_of(c.lits));
  for (Lit u : f.units) clauses.push_back(masks_of({u}));
  return count_over(f.num_vars, clauses);
}

mpz_class count_models_raw(Var num_vars,
                           const std::vector<std::vector<Lit>>& raw,
                           int max_vars) {
  check_bound(num_vars, max_vars, "count_models_raw");
  std::vector<ClauseMasks> clauses;
  clauses.reserve(raw.size());
  for (const auto& lits : raw) clauses.push_back(masks_of(lits));
  return count_over(num_vars, clauses);
}

OracleReport verify_cover(const CnfFormula& f,
                          const std::vector<PartialModel>& models,
                          int max_vars) {
  check_bound(f.num_vars, max_vars, "verify_cover");
  OracleReport report;

  for (size_t i = 0; i < models.size(); ++i) {
    for (Lit l : models[i].literals)
      if (l.var() < 1 || l.var() > f.num_vars)
        throw std::invalid_argument(
            "verify_cover: model " + std::to_string(i) +
            " references variable " + std::to_string(l.var()) +
            " outside the formula");
    if (!models[i].consistent()) {
      report.first_violation =
          CoverViolation{CoverViolation::Kind::InconsistentModel, 0, 0, i};
      return report;
    }
  }

  std::vector<ClauseMasks> clauses;
  for (const Clause& c : f.clauses) clauses.push_back(masks_of(c.lits));
  for (Lit u : f.units) clauses.push_back(masks_of({u}));

  const uint64_t space = uint64_t{1} << f.num_vars;
  const uint64_t full = space - 1;

  // How often each total assignment is covered. Work is proportional to the
  // total coverage, which a correct enumeration keeps at the model count.
  std::vector<uint8_t> covered(space, 0);
  for (const PartialModel& m : models) {
    uint64_t pos = 0, neg = 0;
    for (Lit l : m.literals) {
      uint64_t bit = uint64_t{1} << (l.var() - 1);
      (l.is_negative() ? neg : pos) |= bit;
    }
    uint64_t free = full & ~(pos | neg);
    uint64_t sub = free;
    while (true) {  // all subsets of the unassigned variables
      uint64_t a = pos | sub;
      if (covered[a] < 255) ++covered[a];
      if (sub == 0) break;
      sub = (sub - 1) & free;
    }
  }

  report.cover_ok = true;
  report.disjoint_ok = true;
  uint64_t count = 0;
  for (uint64_t a = 0; a < space; ++a) {
    bool sat = true;
    for (const ClauseMasks& c : clauses) {
      if ((a & c.pos) == 0 && (~a & c.neg & full) == 0) {
        sat = false;
        break;
      }
    }
    count += sat;
    int times = covered[a];
    if (sat && times == 0) {
      report.cover_ok = false;
      if (!report.first_violation)
        report.first_violation =
            CoverViolation{CoverViolation::Kind::NotCovered, a, 0, 0};
    } else if (sat && times > 1) {
      report.disjoint_ok = false;
      if (!report.first_violation)
        report.first_violation =
            CoverViolation{CoverViolation::Kind::MultiplyCovered, a, times, 0};
    } else if (!sat && times > 0) {
      report.cover_ok = false;
      if (!report.first_violation)
        report.first_violation =
            CoverViolation{CoverViolation::Kind::NonModelCovered, a, times, 0};
    }
  }
  report.model_count = mpz_class(static_cast<unsigned long>(count));
  return report;
}

}  // namespace allsat
