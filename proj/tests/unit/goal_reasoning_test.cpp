#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "pentail/formula.hpp"
#include "pentail/goal_reasoning.hpp"
#include "support/test_support.hpp"

using namespace pentail;

namespace {

Action act(const std::string& label, const std::string& pre, const std::string& post) {
  return Action{label, parse(pre), parse(post)};
}

const Theory kEmpty;

}  // namespace

TEST_CASE("complete achievement") {
  const Theory gamma({parse("door_open -> inside")});
  CHECK(completely_achieves(gamma, parse("inside"), act("enter", "true", "door_open & inside")));
  CHECK(completely_achieves(kEmpty, parse("x"), act("direct", "true", "x")));
  CHECK_FALSE(completely_achieves(kEmpty, parse("x & y"), act("partial", "true", "x")));
  CHECK_FALSE(completely_achieves(Theory({parse("!x")}), parse("x"), act("blocked", "true", "x")));
  CHECK_FALSE(completely_achieves(kEmpty, parse("x"), act("inapplicable", "y", "x")));
}

TEST_CASE("partial achievement tracks the entailment kinds") {
  const Formula goal = parse("x & y");
  CHECK(partially_achieves(EntailmentKind::Weak, kEmpty, goal, act("a", "true", "x")));
  CHECK(partially_achieves(EntailmentKind::Plain, kEmpty, goal, act("a", "true", "x")));
  CHECK(partially_achieves(EntailmentKind::Strong, kEmpty, goal, act("a", "true", "x")));

  CHECK(partially_achieves(EntailmentKind::Weak, kEmpty, goal, act("b", "true", "x & z")));
  CHECK(partially_achieves(EntailmentKind::Plain, kEmpty, goal, act("b", "true", "x & z")));
  CHECK_FALSE(partially_achieves(EntailmentKind::Strong, kEmpty, goal, act("b", "true", "x & z")));

  CHECK_FALSE(partially_achieves(EntailmentKind::Weak, kEmpty, goal, act("c", "true", "z")));
  CHECK_FALSE(partially_achieves(EntailmentKind::Weak, kEmpty, goal, act("d", "y", "x")));
}

TEST_CASE("three choices against a two-part goal") {
  const Formula goal = parse("x & y");
  const std::vector<Action> actions = {act("choice1", "true", "x"), act("choice2", "true", "x & z"),
                                       act("choice3", "true", "z")};
  const GoalReport report = rank_actions(kEmpty, goal, actions);

  REQUIRE(report.assessments.size() == 3);
  const ActionAssessment& first = report.assessments[0];
  CHECK(first.applicable);
  CHECK(first.post_consistent);
  CHECK_FALSE(first.complete);
  CHECK(first.weak);
  CHECK(first.plain);
  CHECK(first.strong);

  const ActionAssessment& second = report.assessments[1];
  CHECK(second.weak);
  CHECK(second.plain);
  CHECK_FALSE(second.strong);
  CHECK_FALSE(second.complete);

  const ActionAssessment& third = report.assessments[2];
  CHECK(third.applicable);
  CHECK_FALSE(third.weak);
  CHECK_FALSE(third.plain);
  CHECK_FALSE(third.strong);
  CHECK_FALSE(third.complete);

  CHECK(report.bucket(AchievementBucket::Complete).empty());
  CHECK(report.bucket(AchievementBucket::Strong) == std::vector<std::string>{"choice1"});
  CHECK(report.bucket(AchievementBucket::Plain) == std::vector<std::string>{"choice2"});
  CHECK(report.bucket(AchievementBucket::Weak).empty());
  CHECK(report.bucket(AchievementBucket::None) == std::vector<std::string>{"choice3"});
  CHECK(report.inapplicable.empty());
}

TEST_CASE("ranking keeps input order within buckets and reports the inapplicable") {
  const GoalReport report =
      rank_actions(kEmpty, parse("x & y"),
                   {act("later", "true", "x"), act("earlier", "true", "y"),
                    act("blocked", "z", "x & y"), act("noop", "true", "w")});
  CHECK(report.bucket(AchievementBucket::Strong) == std::vector<std::string>{"later", "earlier"});
  CHECK(report.inapplicable == std::vector<std::string>{"blocked"});
  CHECK(report.bucket(AchievementBucket::None) == std::vector<std::string>{"noop"});
  // Inapplicable actions are assessed with every flag down.
  const ActionAssessment& blocked = report.assessments[2];
  CHECK_FALSE(blocked.applicable);
  CHECK_FALSE(blocked.complete);
  CHECK_FALSE(blocked.weak);
  CHECK_FALSE(blocked.plain);
  CHECK_FALSE(blocked.strong);
}

TEST_CASE("complete outranks the partial kinds") {
  const GoalReport report =
      rank_actions(kEmpty, parse("x"), {act("full", "true", "x"), act("half", "true", "x | y")});
  CHECK(report.bucket(AchievementBucket::Complete) == std::vector<std::string>{"full"});
  // x ∨ y stands in no relation to x: its implicant {y} never finds a partner.
  CHECK(report.bucket(AchievementBucket::None) == std::vector<std::string>{"half"});
  const ActionAssessment& full = report.assessments[0];
  CHECK(full.complete);
  CHECK(full.weak);
  CHECK(full.plain);
  CHECK(full.strong);
}

TEST_CASE("counted kinds restrict the partial ranking") {
  const Formula goal = parse("x & y");
  const std::vector<Action> actions = {act("strongish", "true", "x"),
                                       act("plainish", "true", "x & z"),
                                       act("full", "true", "x & y")};

  const GoalReport weak_only = rank_actions(kEmpty, goal, actions, {EntailmentKind::Weak});
  CHECK(weak_only.bucket(AchievementBucket::Weak) ==
        std::vector<std::string>{"strongish", "plainish"});
  CHECK(weak_only.bucket(AchievementBucket::Strong).empty());
  CHECK(weak_only.bucket(AchievementBucket::Plain).empty());
  // Complete achievement always counts, whatever the kind set.
  CHECK(weak_only.bucket(AchievementBucket::Complete) == std::vector<std::string>{"full"});

  const GoalReport plain_up = rank_actions(kEmpty, goal, actions,
                                           {EntailmentKind::Plain, EntailmentKind::Strong});
  CHECK(plain_up.bucket(AchievementBucket::Strong) == std::vector<std::string>{"strongish"});
  CHECK(plain_up.bucket(AchievementBucket::Plain) == std::vector<std::string>{"plainish"});
  CHECK(plain_up.bucket(AchievementBucket::Weak).empty());

  // The assessments themselves always carry all three flags.
  CHECK(weak_only.assessments[0].strong);
}

TEST_CASE("duplicate labels are rejected") {
  CHECK_THROWS_AS(rank_actions(kEmpty, parse("x"),
                               {act("same", "true", "x"), act("same", "true", "y")}),
                  std::invalid_argument);
}

TEST_CASE("an inconsistent postcondition achieves nothing") {
  const GoalReport report =
      rank_actions(kEmpty, parse("x"), {act("broken", "true", "x & !x")});
  const ActionAssessment& broken = report.assessments[0];
  CHECK(broken.applicable);
  CHECK_FALSE(broken.post_consistent);
  CHECK_FALSE(broken.complete);
  CHECK_FALSE(broken.weak);
  CHECK(report.bucket(AchievementBucket::None) == std::vector<std::string>{"broken"});
}

TEST_CASE("scenario parsing") {
  const Scenario scenario = parse_scenario(
      "# a small household world\n"
      "belief: lamp_plugged -> lamp_on\n"
      "belief: !power_out\n"
      "goal: lamp_on & door_closed   # what we want\n"
      "\n"
      "action: plug | true | lamp_plugged\n"
      "action: close | near_door | door_closed\n"
      "action: both | (near_door | true) | lamp_plugged & door_closed\n");
  CHECK(scenario.beliefs.size() == 2);
  CHECK(scenario.goal.to_string() == "lamp_on & door_closed");
  REQUIRE(scenario.actions.size() == 3);
  CHECK(scenario.actions[0].label == "plug");
  CHECK(scenario.actions[1].pre.to_string() == "near_door");
  CHECK(scenario.actions[2].pre.to_string() == "near_door | true");
  CHECK(scenario.actions[2].post.to_string() == "lamp_plugged & door_closed");
}

TEST_CASE("scenario errors carry line numbers") {
  CHECK_THROWS_AS(parse_scenario("belief: x\n"), ParseError);  // no goal
  CHECK_THROWS_AS(parse_scenario("goal: x\ngoal: y\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("goal: x\nwish: y\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("goal: x\naction: a | true\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("goal: x\naction: | true | x\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("goal: x\nbelief: x &\n"), ParseError);

  try {
    parse_scenario("goal: x\nbelief: y &&& z\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("assessment flags mirror the standalone predicates") {
  testsupport::Rng rng(6100);
  const std::vector<std::string> pool = testsupport::atom_pool(3);
  for (int i = 0; i < 80; ++i) {
    const Theory gamma = testsupport::random_theory(rng, pool, 1, 2);
    const Formula goal = testsupport::random_formula(rng, pool, 2);
    const std::vector<Action> actions = {
        Action{"one", testsupport::random_formula(rng, pool, 1),
               testsupport::random_formula(rng, pool, 2)},
        Action{"two", testsupport::random_formula(rng, pool, 1),
               testsupport::random_formula(rng, pool, 2)}};
    const GoalReport report = rank_actions(gamma, goal, actions);
    for (std::size_t a = 0; a < actions.size(); ++a) {
      const ActionAssessment& seen = report.assessments[a];
      CHECK(seen.complete == completely_achieves(gamma, goal, actions[a]));
      CHECK(seen.weak == partially_achieves(EntailmentKind::Weak, gamma, goal, actions[a]));
      CHECK(seen.plain == partially_achieves(EntailmentKind::Plain, gamma, goal, actions[a]));
      CHECK(seen.strong == partially_achieves(EntailmentKind::Strong, gamma, goal, actions[a]));
      if (seen.complete) {
        CHECK(seen.applicable);
        CHECK(seen.post_consistent);
      }
    }
  }
}
