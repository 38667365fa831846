#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pentail/formula.hpp"
#include "pentail/partial_entailment.hpp"

namespace pentail {

// The fourteen rule schemata of the reference table plus Contraposition (an
// extension, flagged as such in reports).
enum class RuleId : std::uint8_t {
  Ref,   // P ≻ P
  LE,    // Γ ⊨ P↔R and P ≻ Q  ⇒  R ≻ Q
  RE,    // Γ ⊨ Q↔R and P ≻ Q  ⇒  P ≻ R
  BE,    // Γ ≡ Γ′  ⇒  (P ≻Γ Q ⇔ P ≻Γ′ Q)
  Rev,   // P ≻∅ Q  ⇒  atoms(P) ∩ atoms(Q) ≠ ∅
  Tran,  // P ≻ Q and Q ≻ R  ⇒  P ≻ R
  As,    // P ≻ Q  ⇒  P(x/y) ≻ Q(x/y)
  LO,    // P ≻ Q and R ≻ Q  ⇒  P∨R ≻ Q
  LS,    // Γ ⊨ P→R and R ≻ Q  ⇒  P ≻ Q
  RA,    // P ≻ Q and P ≻ R  ⇒  P ≻ R∧Q
  RO,    // P ≻ Q  ⇒  P ≻ Q∨R
  Mono,  // Γ′ ⊨ Γ and P ≻Γ Q  ⇒  P ≻Γ′ Q
  LN,    // P ≻ Q  ⇒  ¬P ⊁ Q
  RN,    // P ≻ Q  ⇒  P ⊁ ¬Q
  CP,    // P ≻ Q  ⇒  ¬Q ≻ ¬P
};

inline constexpr RuleId kAllRules[] = {
    RuleId::Ref, RuleId::LE, RuleId::RE,   RuleId::BE, RuleId::Rev,
    RuleId::Tran, RuleId::As, RuleId::LO,  RuleId::LS, RuleId::RA,
    RuleId::RO,  RuleId::Mono, RuleId::LN, RuleId::RN, RuleId::CP,
};

std::string to_string(RuleId rule);  // "REF", "LE", ...
bool rule_is_extension(RuleId rule); // true only for CP
// The reference table's yes/no cell (CP: no for every kind).
bool rule_expected(RuleId rule, EntailmentKind kind);

// One instantiation of a rule schema. Every formula slot that is filled must
// be nontrivial w.r.t. gamma (the standing assumption); generate_instances
// enforces that, check_rule_instance assumes it.
struct RuleInstance {
  Theory gamma;
  std::optional<Theory> gamma_prime;  // BE, MONO
  std::optional<Formula> p;
  std::optional<Formula> q;
  std::optional<Formula> r;
  std::optional<AtomId> from_atom;  // AS: x of P(x/y)
  std::optional<AtomId> to_atom;    // AS: y of P(x/y)
  EntailmentKind kind = EntailmentKind::Weak;

  std::string to_string() const;
};

// Evaluates the schema's implication on one instance (antecedent false ⇒
// vacuously true). Throws std::invalid_argument when the instance lacks a
// slot the rule needs, or carries a non-empty Γ for REV.
bool check_rule_instance(RuleId rule, const RuleInstance& inst);

// Deterministic pseudo-random instances: formulas over ≤ 4 atoms, depth ≤ 4,
// at most 2 theory members; trivial slots are discarded and redrawn.
std::vector<RuleInstance> generate_instances(RuleId rule, EntailmentKind kind, std::size_t count,
                                             std::uint64_t seed);

struct RuleVerdict {
  RuleId rule;
  EntailmentKind kind;
  bool expected;
  bool confirmed;
  std::optional<RuleInstance> counterexample;  // present iff expected == false
};

struct RulesReport {
  std::vector<RuleVerdict> cells;  // 15 rules × 3 kinds, fixed order
  std::size_t samples_per_cell = 0;
  std::uint64_t seed = 0;

  bool all_confirmed() const;
  // Fixed-column table (rows REF…RN plus CP, columns weak/plain/strong) with
  // the falsification-harness caveat in the header and counterexamples below.
  std::string to_text() const;
};

// Sweeps samples_per_cell instances per cell (samples_per_cell ≥ 100).
// "yes" cells are confirmed when no violation appears; a violation there
// throws std::logic_error, because it can only mean an implementation bug.
// "no" cells pin the published counterexample where one exists and otherwise
// store the first violation the sweep finds.
RulesReport table2_report(std::size_t samples_per_cell, std::uint64_t seed);

}  // namespace pentail
