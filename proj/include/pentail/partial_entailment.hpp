#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pentail/formula.hpp"
#include "pentail/prime_implicants.hpp"

namespace pentail {

enum class EntailmentKind : std::uint8_t { Weak, Plain, Strong };

std::string to_string(EntailmentKind kind);                     // "weak" | "plain" | "strong"
std::optional<EntailmentKind> entailment_kind_from(std::string_view name);

enum class VerdictReason : std::uint8_t { Ok, EmptyPi, NoPartner };

std::string to_string(VerdictReason reason);  // "OK" | "EMPTY_PI" | "NO_PARTNER"

struct Verdict {
  bool holds = false;
  VerdictReason reason = VerdictReason::Ok;
  // When failing with NO_PARTNER: the first antecedent implicant (canonical
  // order) with no valid partner. Absent when holding or when PI(Γ, P) = ∅.
  std::optional<LiteralSet> witness_or_refuter;
};

// The literal-set relations the formula-level kinds quantify over:
//   weak:   π ∩ π′ ≠ ∅
//   plain:  π ∩ π′ ≠ ∅ and π ∩ -π′ = ∅
//   strong: ∅ ⊂ π ⊆ π′
bool literal_set_relation(EntailmentKind kind, const LiteralSet& pi, const LiteralSet& pi_prime);

// Γ ⊨ P or Γ ⊨ ¬P; trivial formulas stand in no partial-entailment relation.
bool is_trivial(const Theory& gamma, const Formula& p);

// P ≻ Q at the given kind: PI(Γ, P) non-empty and every member has a partner
// in PI(Γ, Q) under the kind's literal-set relation.
Verdict partially_entails(EntailmentKind kind, const Theory& gamma, const Formula& p,
                          const Formula& q);

// The clause special case: δ, δ′ are nonempty consistent literal sets read as
// disjunctions. All five notions coincide on clauses; the fields are computed
// independently so that agreement stays testable.
struct ClauseRelationReport {
  bool subset = false;
  bool classical = false;
  bool weak = false;
  bool plain = false;
  bool strong = false;

  bool all_agree() const {
    return subset == classical && classical == weak && weak == plain && plain == strong;
  }
};

ClauseRelationReport clause_relation_report(const LiteralSet& delta, const LiteralSet& delta_prime);

}  // namespace pentail
