#include "doctest.h"

#include <gmpxx.h>

#include <cmath>
#include <random>

#include "allsat/engine.hpp"
#include "allsat/heuristic.hpp"
#include "test_util.hpp"

using namespace allsat;
using namespace allsat_test;

namespace {

Lit L(int d) { return Lit::from_dimacs(d); }

}  // namespace

TEST_CASE("occurrences are counted over clauses and units") {
  CnfFormula f = parse("p cnf 4 3\n1 2 0\n1 -3 0\n-1 0\n");
  Heuristic h(f, SolverConfig{});
  CHECK(h.occurrences(1) == 3);
  CHECK(h.occurrences(2) == 1);
  CHECK(h.occurrences(3) == 1);
  CHECK(h.occurrences(4) == 0);
  CHECK(h.occurs(1));
  CHECK(!h.occurs(4));
}

TEST_CASE("pick prefers the highest score and never a non-occurring variable") {
  CnfFormula f = parse("p cnf 4 2\n1 2 0\n1 3 0\n");
  Engine eng(f);
  SolverConfig cfg;
  cfg.w_occ = 1.0;
  cfg.w_act = 0.0;
  Heuristic h(f, cfg);
  CHECK(h.pick_branch_literal(eng) == L(-1));  // occ 2, polarity false

  eng.decide(L(1));
  auto second = h.pick_branch_literal(eng);
  REQUIRE(second);
  CHECK(second->var() == 2);  // 2 and 3 tie at occ 1, smaller index wins

  eng.decide(L(2));
  eng.decide(L(3));
  CHECK(!h.pick_branch_literal(eng));  // 4 occurs nowhere: trail is total
}

TEST_CASE("score ties prefer variables watching a clause") {
  // vars 3 and 6 both occur twice; 3 sits third in its clauses (never
  // watched), 6 is watched in both of its clauses
  CnfFormula f = parse("p cnf 8 4\n1 2 3 0\n4 5 3 0\n6 7 0\n6 8 0\n");
  Engine eng(f);
  SolverConfig cfg;
  cfg.w_occ = 1.0;
  cfg.w_act = 0.0;
  Heuristic h(f, cfg);
  auto pick = h.pick_branch_literal(eng);
  REQUIRE(pick);
  CHECK(pick->var() == 6);
}

TEST_CASE("polarity modes") {
  CnfFormula f = parse("p cnf 1 1\n1 1 0\n");  // normalizes to unit
  Engine eng(f);

  SolverConfig cfg;
  cfg.polarity = PolarityMode::AlwaysFalse;
  CHECK(Heuristic(f, cfg).pick_branch_literal(eng) == L(-1));
  cfg.polarity = PolarityMode::AlwaysTrue;
  CHECK(Heuristic(f, cfg).pick_branch_literal(eng) == L(1));

  cfg.polarity = PolarityMode::Saved;
  CHECK(Heuristic(f, cfg).pick_branch_literal(eng) == L(-1));  // initial phase
  eng.decide(L(1));
  eng.backtrack(0);  // saves the true phase
  CHECK(Heuristic(f, cfg).pick_branch_literal(eng) == L(1));
}

TEST_CASE("pinned order overrides scores and skips the non-occurring") {
  CnfFormula f = parse("p cnf 4 1\n1 2 0\n");
  Engine eng(f);
  SolverConfig cfg;
  cfg.pinned_order = {3, 2, 1};  // 3 occurs nowhere
  Heuristic h(f, cfg);
  CHECK(h.pick_branch_literal(eng) == L(-2));
  eng.decide(L(-2));
  CHECK(h.pick_branch_literal(eng) == L(-1));
}

TEST_CASE("conflict bumps raise activity and scores") {
  CnfFormula f = parse("p cnf 3 2\n1 2 0\n1 3 0\n");
  Engine eng(f);
  SolverConfig cfg;  // w_occ 1, w_act 100
  Heuristic h(f, cfg);
  CHECK(h.pick_branch_literal(eng) == L(-1));

  Var bumped[] = {3};
  h.on_conflict(bumped);
  CHECK(h.activity(3) > 0.0);
  CHECK(h.score(3) > h.score(1));  // 1*1 + 100*1 beats occ 2
  CHECK(h.pick_branch_literal(eng) == L(-3));
}

TEST_CASE("configuration validation") {
  CnfFormula f = parse("p cnf 2 1\n1 2 0\n");
  SolverConfig cfg;
  cfg.decay = 0.0;
  CHECK_THROWS_AS(Heuristic(f, cfg), std::invalid_argument);
  cfg.decay = 1.0;
  CHECK_THROWS_AS(Heuristic(f, cfg), std::invalid_argument);
  cfg.decay = 0.5;
  cfg.pinned_order = {5};
  CHECK_THROWS_AS(Heuristic(f, cfg), std::invalid_argument);
}

TEST_CASE("rescaled activities keep the exact ranking") {
  // decay 0.01 multiplies the bump increment by 100 per conflict, forcing
  // many rescales over 300 conflicts; the picked variable must match an
  // exact rational reference wherever the exact top is clearly separated
  const int n = 10;
  CnfFormula f = parse(
      "p cnf 10 1\n"
      "1 2 3 4 5 6 7 8 9 10 0\n");
  Engine eng(f);
  SolverConfig cfg;
  cfg.w_occ = 0.0;
  cfg.w_act = 1.0;
  cfg.decay = 0.01;
  Heuristic h(f, cfg);

  std::vector<mpq_class> exact(n + 1, 0);
  mpq_class inc = 1;
  const mpq_class factor = 100;  // 1 / decay

  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> var(1, n);
  std::uniform_int_distribution<int> count(1, 4);

  int compared = 0;
  for (int round = 0; round < 300; ++round) {
    std::vector<Var> bump;
    int k = count(rng);
    for (int i = 0; i < k; ++i) bump.push_back(var(rng));
    h.on_conflict(bump);
    for (Var v : bump) exact[static_cast<size_t>(v)] += inc;
    inc *= factor;

    Var exact_best = 1;
    for (Var v = 2; v <= n; ++v)
      if (exact[v] > exact[exact_best]) exact_best = v;
    bool separated = true;
    for (Var v = 1; v <= n; ++v) {
      if (v == exact_best) continue;
      // relative gap below 1e-6 is too close to trust double precision
      if (exact[v] * mpq_class(1000001, 1000000) >= exact[exact_best])
        separated = false;
    }
    if (!separated) continue;
    ++compared;
    auto pick = h.pick_branch_literal(eng);
    REQUIRE(pick);
    CHECK(pick->var() == exact_best);
    CHECK(std::isfinite(h.activity(exact_best)));
  }
  CHECK(compared > 200);
}

TEST_CASE("picks are deterministic") {
  std::mt19937_64 rng(11);
  CnfFormula f = random_cnf(rng, 12, 30);
  Engine eng(f);
  SolverConfig cfg;
  Heuristic h1(f, cfg);
  Heuristic h2(f, cfg);
  for (int i = 0; i < 5; ++i) {
    auto a = h1.pick_branch_literal(eng);
    auto b = h2.pick_branch_literal(eng);
    REQUIRE(a == b);
    if (!a) break;
    eng.decide(*a);
  }
}
