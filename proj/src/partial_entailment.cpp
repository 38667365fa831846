#include "pentail/partial_entailment.hpp"

#include <stdexcept>

#include "pentail/semantics.hpp"

namespace pentail {

std::string to_string(EntailmentKind kind) {
  switch (kind) {
    case EntailmentKind::Weak: return "weak";
    case EntailmentKind::Plain: return "plain";
    case EntailmentKind::Strong: return "strong";
  }
  throw std::logic_error("unreachable entailment kind");
}

std::optional<EntailmentKind> entailment_kind_from(std::string_view name) {
  if (name == "weak") return EntailmentKind::Weak;
  if (name == "plain") return EntailmentKind::Plain;
  if (name == "strong") return EntailmentKind::Strong;
  return std::nullopt;
}

std::string to_string(VerdictReason reason) {
  switch (reason) {
    case VerdictReason::Ok: return "OK";
    case VerdictReason::EmptyPi: return "EMPTY_PI";
    case VerdictReason::NoPartner: return "NO_PARTNER";
  }
  throw std::logic_error("unreachable verdict reason");
}

bool literal_set_relation(EntailmentKind kind, const LiteralSet& pi, const LiteralSet& pi_prime) {
  switch (kind) {
    case EntailmentKind::Weak:
      return pi.intersects(pi_prime);
    case EntailmentKind::Plain:
      return pi.intersects(pi_prime) && !pi.intersects(pi_prime.complements());
    case EntailmentKind::Strong:
      return !pi.empty() && pi.subset_of(pi_prime);
  }
  throw std::logic_error("unreachable entailment kind");
}

bool is_trivial(const Theory& gamma, const Formula& p) {
  return entails(gamma, p) || entails(gamma, Formula::negation(p));
}

Verdict partially_entails(EntailmentKind kind, const Theory& gamma, const Formula& p,
                          const Formula& q) {
  PrimeImplicantSet pi_p = prime_implicants(gamma, p);
  if (pi_p.empty()) return {false, VerdictReason::EmptyPi, std::nullopt};

  PrimeImplicantSet pi_q = prime_implicants(gamma, q);
  for (const LiteralSet& pi : pi_p.implicants()) {
    bool partnered = false;
    for (const LiteralSet& pi_prime : pi_q.implicants()) {
      if (literal_set_relation(kind, pi, pi_prime)) {
        partnered = true;
        break;
      }
    }
    if (!partnered) return {false, VerdictReason::NoPartner, pi};
  }
  return {true, VerdictReason::Ok, std::nullopt};
}

ClauseRelationReport clause_relation_report(const LiteralSet& delta,
                                            const LiteralSet& delta_prime) {
  if (delta.empty() || delta_prime.empty()) {
    throw std::invalid_argument("clause relations are defined for nonempty clauses");
  }
  ClauseRelationReport report;
  report.subset = delta.subset_of(delta_prime);
  report.classical =
      entails(Theory({disjunction_of(delta)}), disjunction_of(delta_prime));
  Theory empty;
  report.weak =
      partially_entails(EntailmentKind::Weak, empty, disjunction_of(delta),
                        disjunction_of(delta_prime))
          .holds;
  report.plain =
      partially_entails(EntailmentKind::Plain, empty, disjunction_of(delta),
                        disjunction_of(delta_prime))
          .holds;
  report.strong =
      partially_entails(EntailmentKind::Strong, empty, disjunction_of(delta),
                        disjunction_of(delta_prime))
          .holds;
  return report;
}

}  // namespace pentail
