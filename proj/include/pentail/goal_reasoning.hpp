#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pentail/formula.hpp"
#include "pentail/partial_entailment.hpp"

namespace pentail {

// A one-step action: applicable when the belief entails pre; on execution the
// belief is extended with post.
struct Action {
  std::string label;
  Formula pre;
  Formula post;
};

// Γ ⊨ Pre(α), Γ ∪ {Post(α)} consistent, and Γ ⊨ Post(α) → G.
bool completely_achieves(const Theory& gamma, const Formula& goal, const Action& action);

// Γ ⊨ Pre(α) and Post(α) partially entails G under Γ at the given kind.
bool partially_achieves(EntailmentKind kind, const Theory& gamma, const Formula& goal,
                        const Action& action);

struct ActionAssessment {
  std::string label;
  bool applicable = false;       // Γ ⊨ Pre
  bool post_consistent = false;  // Γ ∪ {Post} consistent
  bool complete = false;
  bool weak = false;
  bool plain = false;
  bool strong = false;
};

enum class AchievementBucket : std::uint8_t { Complete, Strong, Plain, Weak, None };

std::string to_string(AchievementBucket bucket);

struct GoalReport {
  std::vector<ActionAssessment> assessments;            // input order
  std::array<std::vector<std::string>, 5> buckets;      // labels by AchievementBucket
  std::vector<std::string> inapplicable;                // reported but unranked

  const std::vector<std::string>& bucket(AchievementBucket b) const {
    return buckets[static_cast<std::size_t>(b)];
  }
};

// Classifies every action and buckets the applicable ones by the best relation
// they achieve, complete > strong > plain > weak > none, stable by input
// order. `counted` restricts which partial kinds may rank an action (complete
// always counts). Throws std::invalid_argument on duplicate labels.
GoalReport rank_actions(const Theory& gamma, const Formula& goal,
                        const std::vector<Action>& actions);
GoalReport rank_actions(const Theory& gamma, const Formula& goal,
                        const std::vector<Action>& actions,
                        const std::set<EntailmentKind>& counted);

// Line-oriented scenario text: `belief: F` (repeatable), `goal: F` (exactly
// once), `action: label | pre | post` (repeatable; the pre/post split is the
// first '|' at parenthesis depth 0, so parenthesize a disjunctive pre), `#`
// comments, blank lines ignored. Throws ParseError with a line-aware message.
struct Scenario {
  Theory beliefs;
  Formula goal;
  std::vector<Action> actions;
};

Scenario parse_scenario(std::string_view text);

}  // namespace pentail
