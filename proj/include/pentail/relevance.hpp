#pragma once

#include <vector>

#include "pentail/formula.hpp"

namespace pentail {

// F is independent of the atoms V: expressible without them. Decided through
// the implicant vocabulary (no literal over V in any member of PI({}, F)).
bool variable_independent(const Formula& f, const std::vector<AtomId>& v);

// F is strictly relevant to V: decided as weak partial entailment from ¬F to
// (⋀V) ∨ (⋀¬V) over the empty theory. V must be non-empty.
bool strictly_relevant(const Formula& f, const std::vector<AtomId>& v);

// Some implicant of P shares a literal with some implicant of Q (both under Γ).
bool relevant_formulas(const Theory& gamma, const Formula& p, const Formula& q);

struct NoveltyReport {
  bool new_positive = false;  // PI(Γ∪{P}, Q) has a member outside PI(Γ, Q)
  bool new_negative = false;  // same with ¬Q
};

NoveltyReport novelty(const Theory& gamma, const Formula& p, const Formula& q);

// P is not new negative to Q over the empty theory.
bool novelty_independent(const Formula& p, const Formula& q);

}  // namespace pentail
