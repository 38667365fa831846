#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "pentail/formula.hpp"
#include "pentail/semantics.hpp"
#include "support/test_support.hpp"

using namespace pentail;

namespace {

std::vector<std::string> rendered(const std::vector<Assignment>& assignments) {
  std::vector<std::string> out;
  for (const Assignment& a : assignments) out.push_back(a.literals().to_string());
  return out;
}

Theory singleton(const Formula& f) { return Theory(std::vector<Formula>{f}); }

}  // namespace

TEST_CASE("assignments enumerate in canonical order, all-true first") {
  const std::vector<AtomId> universe{AtomId("x"), AtomId("y")};
  CHECK(rendered(all_assignments(universe)) ==
        std::vector<std::string>{"{x, y}", "{x, !y}", "{!x, y}", "{!x, !y}"});
  CHECK(all_assignments({}).size() == 1);
  CHECK(all_assignments({}).front().literals().empty());
}

TEST_CASE("models filter assignments in canonical order") {
  const Theory gamma({parse("x | y")});
  CHECK(rendered(models(gamma, {AtomId("x"), AtomId("y")})) ==
        std::vector<std::string>{"{x, y}", "{x, !y}", "{!x, y}"});
  CHECK(models(Theory({parse("x & !x")}), {AtomId("x")}).empty());
  CHECK_THROWS_AS(models(Theory({parse("x")}), {AtomId("y")}), std::invalid_argument);
}

TEST_CASE("assignment construction demands exact universe cover") {
  const Assignment a =
      Assignment::over({AtomId("x"), AtomId("y")}, parse_literal_set("{x, !y}"));
  CHECK(a.value(AtomId("x")));
  CHECK_FALSE(a.value(AtomId("y")));
  CHECK_THROWS_AS(a.value(AtomId("z")), std::out_of_range);
  CHECK(a.extends(parse_literal_set("{x}")));
  CHECK(a.extends(parse_literal_set("{}")));
  CHECK_FALSE(a.extends(parse_literal_set("{!x}")));
  CHECK_FALSE(a.extends(parse_literal_set("{x, z}")));  // z outside the universe
  CHECK(a.literals().to_string() == "{x, !y}");

  CHECK_THROWS_AS(Assignment::over({AtomId("x"), AtomId("y")}, parse_literal_set("{x}")),
                  std::invalid_argument);
  CHECK_THROWS_AS(Assignment::over({AtomId("x")}, parse_literal_set("{x, !y}")),
                  std::invalid_argument);
}

TEST_CASE("evaluation covers every connective") {
  const Assignment a =
      Assignment::over({AtomId("x"), AtomId("y")}, parse_literal_set("{x, !y}"));
  CHECK(evaluate(parse("x"), a));
  CHECK_FALSE(evaluate(parse("y"), a));
  CHECK(evaluate(parse("true"), a));
  CHECK_FALSE(evaluate(parse("false"), a));
  CHECK(evaluate(parse("!y"), a));
  CHECK_FALSE(evaluate(parse("x & y"), a));
  CHECK(evaluate(parse("x | y"), a));
  CHECK(evaluate(parse("y -> x"), a));
  CHECK_FALSE(evaluate(parse("x -> y"), a));
  CHECK_FALSE(evaluate(parse("x <-> y"), a));
  CHECK(evaluate(parse("x <-> !y"), a));
}

TEST_CASE("consistency and entailment basics") {
  CHECK(is_consistent(Theory()));
  CHECK(is_consistent(Theory({parse("x | y")})));
  CHECK_FALSE(is_consistent(Theory({parse("x"), parse("!x")})));
  CHECK(entails(Theory(), parse("x | !x")));
  CHECK_FALSE(entails(Theory(), parse("x")));
  CHECK(entails(Theory({parse("x"), parse("x -> y")}), parse("y")));
  CHECK(entails(Theory({parse("x"), parse("!x")}), parse("q")));  // ex falso
  CHECK(theories_equivalent(Theory({parse("x & y")}), Theory({parse("y"), parse("x")})));
  CHECK_FALSE(theories_equivalent(Theory({parse("x")}), Theory({parse("x | y")})));
  CHECK(theories_equivalent(Theory(), Theory({parse("x | !x")})));
}

TEST_CASE("universes beyond the supported size are rejected") {
  Formula big = Formula::atom("a0");
  for (int i = 1; i <= 20; ++i) big = Formula::conjunction(big, Formula::atom("a" + std::to_string(i)));
  CHECK(atoms(big).size() == 21);
  CHECK_THROWS_AS(is_consistent(singleton(big)), std::invalid_argument);
}

TEST_CASE("deduction bridge: moving a premise into an implication") {
  testsupport::Rng rng(411);
  const std::vector<std::string> pool = testsupport::atom_pool(4);
  for (int i = 0; i < 200; ++i) {
    const Theory gamma = testsupport::random_theory(rng, pool, 2, 2);
    const Formula p = testsupport::random_formula(rng, pool, 2);
    const Formula q = testsupport::random_formula(rng, pool, 2);
    CHECK(entails(gamma.extended(p), q) == entails(gamma, Formula::implication(p, q)));
  }
}

TEST_CASE("conditioning bridge: a full assignment decides a formula") {
  testsupport::Rng rng(412);
  const std::vector<std::string> pool = testsupport::atom_pool(3);
  for (int i = 0; i < 150; ++i) {
    const Formula f = testsupport::random_formula(rng, pool, 3, /*allow_constants=*/true);
    for (const Assignment& a : all_assignments(atoms(f))) {
      const Formula decided = condition_set(f, a.literals());
      CHECK(evaluate(f, a) == entails(Theory(), decided));
    }
  }
}
