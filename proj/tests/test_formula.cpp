#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "allsat/formula.hpp"
#include "allsat/literal.hpp"
#include "allsat/oracle.hpp"
#include "test_util.hpp"

using namespace allsat;

TEST_CASE("literal encoding round trips") {
  Lit p = Lit::from_dimacs(5);
  Lit n = Lit::from_dimacs(-5);
  CHECK(p.var() == 5);
  CHECK(n.var() == 5);
  CHECK(!p.is_negative());
  CHECK(n.is_negative());
  CHECK(p.to_dimacs() == 5);
  CHECK(n.to_dimacs() == -5);
  CHECK(~p == n);
  CHECK(~n == p);
  CHECK(p != n);
  CHECK(Lit::positive(5) == p);
  CHECK(Lit::negative(5) == n);
  CHECK(to_string(n) == "-5");

  Lit invalid;
  CHECK(!invalid.valid());
  CHECK(p.valid());

  // code order: variables ascend, positive before negative
  CHECK(Lit::positive(1) < Lit::negative(1));
  CHECK(Lit::negative(1) < Lit::positive(2));
}

TEST_CASE("parser reads header, clauses, comments and blank lines") {
  std::string text =
      "c a comment\n"
      "\n"
      "p cnf 3 3\n"
      "c another\n"
      "1 -2 0\n"
      "1 -3 0\n"
      "-1 -2 0\n";
  ParseResult r = parse_dimacs(text);
  CHECK(!r.empty_clause);
  CHECK(r.formula.num_vars == 3);
  REQUIRE(r.formula.clauses.size() == 3);
  CHECK(r.formula.units.empty());
  CHECK(r.formula.clauses[0].lits == allsat_test::lits({1, -2}));
  CHECK(r.formula.clauses[2].lits == allsat_test::lits({-1, -2}));
  CHECK(r.formula.clauses[0].origin == ClauseOrigin::Input);
}

TEST_CASE("clauses may span lines and several may share one line") {
  ParseResult r = parse_dimacs("p cnf 3 2\n1\n2 0 -2 3 0\n");
  REQUIRE(r.formula.clauses.size() == 2);
  CHECK(r.formula.clauses[0].lits == allsat_test::lits({1, 2}));
  CHECK(r.formula.clauses[1].lits == allsat_test::lits({-2, 3}));
}

TEST_CASE("unit clauses are routed to the unit list") {
  ParseResult r = parse_dimacs("p cnf 2 2\n1 0\n-2 0\n");
  CHECK(r.formula.clauses.empty());
  CHECK(r.formula.units == allsat_test::lits({1, -2}));
}

TEST_CASE("tautologies are dropped and duplicate literals merged") {
  ParseResult r = parse_dimacs("p cnf 3 3\n1 -1 2 0\n2 2 3 0\n3 3 0\n");
  REQUIRE(r.formula.clauses.size() == 1);
  CHECK(r.formula.clauses[0].lits == allsat_test::lits({2, 3}));
  // duplicated unit collapses to a unit
  CHECK(r.formula.units == allsat_test::lits({3}));
}

TEST_CASE("empty clause sets the flag instead of throwing") {
  ParseResult r = parse_dimacs("p cnf 2 2\n1 2 0\n0\n");
  CHECK(r.empty_clause);
  CHECK(r.formula.clauses.size() == 1);
}

TEST_CASE("empty formula parses") {
  ParseResult r = parse_dimacs("p cnf 0 0\n");
  CHECK(r.formula.num_vars == 0);
  CHECK(r.formula.clauses.empty());
  CHECK(!r.empty_clause);
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), ParseError);             // no header
  CHECK_THROWS_AS(parse_dimacs("p cnf 2\n"), ParseError);           // short header
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1 9\n1 0\n"), ParseError);  // long header
  CHECK_THROWS_AS(parse_dimacs("p sat 2 1\n1 0\n"), ParseError);    // wrong format
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 x 0\n"), ParseError);  // bad token
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n3 0\n"), ParseError);    // var out of range
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);    // unterminated
  CHECK_THROWS_AS(parse_dimacs("p cnf -1 0\n"), ParseError);        // negative count
}

TEST_CASE("parse errors carry the line number") {
  try {
    parse_dimacs("p cnf 2 1\n1 x 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("write_dimacs round trips") {
  CnfFormula f = allsat_test::parse("p cnf 4 3\n1 -2 0\n3 0\n-1 2 -4 0\n");
  std::string text = write_dimacs_string(f);
  CnfFormula g = allsat_test::parse(text);
  CHECK(g.num_vars == f.num_vars);
  REQUIRE(g.clauses.size() == f.clauses.size());
  for (size_t i = 0; i < f.clauses.size(); ++i)
    CHECK(g.clauses[i].lits == f.clauses[i].lits);
  CHECK(g.units == f.units);
}

TEST_CASE("normalization preserves the model set") {
  // raw form with a tautology and duplicates vs the parsed form
  std::vector<std::vector<Lit>> raw = {
      allsat_test::lits({1, -1, 2}),  // tautology: no constraint
      allsat_test::lits({2, 2, 3}),
      allsat_test::lits({-3, -3}),
  };
  CnfFormula f = allsat_test::parse("p cnf 3 3\n1 -1 2 0\n2 2 3 0\n-3 -3 0\n");
  CHECK(count_models(f) == count_models_raw(3, raw));
}
