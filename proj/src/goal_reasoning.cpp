#include "pentail/goal_reasoning.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "pentail/semantics.hpp"

namespace pentail {

bool completely_achieves(const Theory& gamma, const Formula& goal, const Action& action) {
  return entails(gamma, action.pre) && is_consistent(gamma.extended(action.post)) &&
         entails(gamma, Formula::implication(action.post, goal));
}

bool partially_achieves(EntailmentKind kind, const Theory& gamma, const Formula& goal,
                        const Action& action) {
  return entails(gamma, action.pre) &&
         partially_entails(kind, gamma, action.post, goal).holds;
}

std::string to_string(AchievementBucket bucket) {
  switch (bucket) {
    case AchievementBucket::Complete: return "complete";
    case AchievementBucket::Strong: return "strong";
    case AchievementBucket::Plain: return "plain";
    case AchievementBucket::Weak: return "weak";
    case AchievementBucket::None: return "none";
  }
  throw std::logic_error("unreachable bucket");
}

GoalReport rank_actions(const Theory& gamma, const Formula& goal,
                        const std::vector<Action>& actions) {
  return rank_actions(gamma, goal, actions,
                      {EntailmentKind::Weak, EntailmentKind::Plain, EntailmentKind::Strong});
}

GoalReport rank_actions(const Theory& gamma, const Formula& goal,
                        const std::vector<Action>& actions,
                        const std::set<EntailmentKind>& counted) {
  std::set<std::string> seen;
  for (const Action& action : actions) {
    if (!seen.insert(action.label).second) {
      throw std::invalid_argument("duplicate action label '" + action.label + "'");
    }
  }

  GoalReport report;
  for (const Action& action : actions) {
    ActionAssessment a;
    a.label = action.label;
    a.applicable = entails(gamma, action.pre);
    a.post_consistent = is_consistent(gamma.extended(action.post));
    a.complete = completely_achieves(gamma, goal, action);
    a.weak = partially_achieves(EntailmentKind::Weak, gamma, goal, action);
    a.plain = partially_achieves(EntailmentKind::Plain, gamma, goal, action);
    a.strong = partially_achieves(EntailmentKind::Strong, gamma, goal, action);

    if (!a.applicable) {
      report.inapplicable.push_back(a.label);
    } else {
      AchievementBucket bucket = AchievementBucket::None;
      if (a.complete) {
        bucket = AchievementBucket::Complete;
      } else if (a.strong && counted.count(EntailmentKind::Strong)) {
        bucket = AchievementBucket::Strong;
      } else if (a.plain && counted.count(EntailmentKind::Plain)) {
        bucket = AchievementBucket::Plain;
      } else if (a.weak && counted.count(EntailmentKind::Weak)) {
        bucket = AchievementBucket::Weak;
      }
      report.buckets[static_cast<std::size_t>(bucket)].push_back(a.label);
    }
    report.assessments.push_back(std::move(a));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Scenario text

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

Formula parse_line_formula(std::string_view text, std::size_t line_number) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(line_number) + ": " + e.what(), e.position());
  }
}

// The pre/post boundary is the first '|' outside parentheses; disjunctive
// preconditions therefore need wrapping parentheses.
std::size_t top_level_pipe(std::string_view s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == '|' && depth == 0) return i;
  }
  return std::string_view::npos;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  Theory beliefs;
  std::optional<Formula> goal;
  std::vector<Action> actions;

  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view raw =
        text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_number;

    std::string_view line = raw;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.rfind("belief:", 0) == 0) {
      beliefs = beliefs.extended(parse_line_formula(trim(line.substr(7)), line_number));
    } else if (line.rfind("goal:", 0) == 0) {
      if (goal) {
        throw ParseError("line " + std::to_string(line_number) + ": a second goal line", 0);
      }
      goal = parse_line_formula(trim(line.substr(5)), line_number);
    } else if (line.rfind("action:", 0) == 0) {
      std::string_view rest = line.substr(7);
      std::size_t first = rest.find('|');
      if (first == std::string_view::npos) {
        throw ParseError(
            "line " + std::to_string(line_number) + ": action needs 'label | pre | post'", 0);
      }
      std::string label(trim(rest.substr(0, first)));
      if (label.empty()) {
        throw ParseError("line " + std::to_string(line_number) + ": action label is empty", 0);
      }
      std::string_view forms = rest.substr(first + 1);
      std::size_t split = top_level_pipe(forms);
      if (split == std::string_view::npos) {
        throw ParseError("line " + std::to_string(line_number) +
                             ": action needs a pre and a post formula",
                         0);
      }
      Formula pre = parse_line_formula(trim(forms.substr(0, split)), line_number);
      Formula post = parse_line_formula(trim(forms.substr(split + 1)), line_number);
      actions.push_back({std::move(label), std::move(pre), std::move(post)});
    } else {
      throw ParseError("line " + std::to_string(line_number) +
                           ": expected 'belief:', 'goal:', or 'action:'",
                       0);
    }
  }

  if (!goal) throw ParseError("scenario has no goal line", 0);
  return Scenario{std::move(beliefs), std::move(*goal), std::move(actions)};
}

}  // namespace pentail
