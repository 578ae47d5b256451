#include "doctest.h"

#include "allsat/generators.hpp"
#include "allsat/oracle.hpp"
#include "test_util.hpp"

using namespace allsat;
using namespace allsat_test;

TEST_CASE("model counts frozen for the worked examples") {
  CHECK(count_models(parse(kThreeClause)) == 3);
  CHECK(count_models(parse(kOneClause)) == 7);
}

TEST_CASE("binary chain counts match the closed form") {
  CHECK(count_models(gen_binary(2)) == 3);
  CHECK(count_models(gen_binary(4)) == 9);
  CHECK(count_models(gen_binary(8)) == 81);
}

TEST_CASE("unsat and unconstrained formulas") {
  CnfFormula f = parse("p cnf 2 4\n1 2 0\n1 -2 0\n-1 2 0\n-1 -2 0\n");
  CHECK(count_models(f) == 0);
  CHECK(count_models(parse("p cnf 3 0\n")) == 8);
  CHECK(count_models(parse("p cnf 0 0\n")) == 1);  // the empty assignment
}

TEST_CASE("raw counts accept tautologies and duplicates") {
  CHECK(count_models_raw(2, {lits({1, -1})}) == 4);
  CHECK(count_models_raw(2, {lits({1, 1})}) == 2);
  CHECK(count_models_raw(2, {}) == 4);
}

TEST_CASE("bound enforcement") {
  CHECK_THROWS_AS(count_models(gen_binary(28), 26), OracleBoundExceeded);
  CHECK_THROWS_AS(count_models(parse("p cnf 1 0\n"), 63), OracleBoundExceeded);
  CHECK_NOTHROW(count_models(gen_binary(26), 26));
}

TEST_CASE("verify_cover accepts a hand-built exact cover") {
  // {x1}, {-x1,x2}, {-x1,-x2,x3} split the 7 models of (x1 v x2 v x3)
  CnfFormula f = parse(kOneClause);
  std::vector<PartialModel> cover = {model_of({1}), model_of({-1, 2}),
                                     model_of({-1, -2, 3})};
  OracleReport r = verify_cover(f, cover);
  CHECK(r.exact_cover());
  CHECK(r.model_count == 7);
  CHECK(!r.first_violation);
}

TEST_CASE("verify_cover reports a gap with the smallest missing assignment") {
  CnfFormula f = parse(kOneClause);
  std::vector<PartialModel> cover = {model_of({1}), model_of({-1, 2})};
  OracleReport r = verify_cover(f, cover);
  CHECK(!r.cover_ok);
  CHECK(r.disjoint_ok);
  REQUIRE(r.first_violation);
  CHECK(r.first_violation->kind == CoverViolation::Kind::NotCovered);
  // first missing model in bit order: x3 alone, assignment 0b100
  CHECK(r.first_violation->assignment == 0b100);
}

TEST_CASE("verify_cover reports overlap") {
  CnfFormula f = parse(kOneClause);
  std::vector<PartialModel> cover = {model_of({1}), model_of({1, 2}),
                                     model_of({-1, 2}), model_of({-1, -2, 3})};
  OracleReport r = verify_cover(f, cover);
  CHECK(!r.disjoint_ok);
  REQUIRE(r.first_violation);
  CHECK(r.first_violation->kind == CoverViolation::Kind::MultiplyCovered);
  // first doubly covered assignment: x1 and x2 true, x3 free -> 0b011
  CHECK(r.first_violation->assignment == 0b011);
  CHECK(r.first_violation->times_covered == 2);
}

TEST_CASE("verify_cover rejects covering a falsifying assignment") {
  CnfFormula f = parse(kOneClause);
  // the empty model covers all 8 assignments, including 0b000
  OracleReport r = verify_cover(f, {model_of({})});
  CHECK(!r.cover_ok);
  REQUIRE(r.first_violation);
  CHECK(r.first_violation->kind == CoverViolation::Kind::NonModelCovered);
  CHECK(r.first_violation->assignment == 0b000);
}

TEST_CASE("verify_cover flags inconsistent models before counting") {
  CnfFormula f = parse(kOneClause);
  OracleReport r = verify_cover(f, {model_of({1, -1})});
  REQUIRE(r.first_violation);
  CHECK(r.first_violation->kind == CoverViolation::Kind::InconsistentModel);
  CHECK(r.first_violation->model_index == 0);
}

TEST_CASE("verify_cover rejects out-of-range variables") {
  CnfFormula f = parse(kOneClause);
  CHECK_THROWS_AS(verify_cover(f, {model_of({4})}), std::invalid_argument);
}

TEST_CASE("empty model list is exact exactly for unsat formulas") {
  CnfFormula unsat = parse("p cnf 1 2\n1 0\n-1 0\n");
  OracleReport r = verify_cover(unsat, {});
  CHECK(r.exact_cover());
  CHECK(r.model_count == 0);

  OracleReport r2 = verify_cover(parse(kOneClause), {});
  CHECK(!r2.exact_cover());
  CHECK(r2.model_count == 7);
}

TEST_CASE("a total model list can be exact") {
  CnfFormula f = parse("p cnf 2 1\n1 2 0\n");
  std::vector<PartialModel> cover = {model_of({1, 2}), model_of({1, -2}),
                                     model_of({-1, 2})};
  OracleReport r = verify_cover(f, cover);
  CHECK(r.exact_cover());
  CHECK(r.model_count == 3);
}
