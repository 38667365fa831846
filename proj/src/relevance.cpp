#include "pentail/relevance.hpp"

#include <stdexcept>

#include "pentail/partial_entailment.hpp"
#include "pentail/prime_implicants.hpp"

namespace pentail {

bool variable_independent(const Formula& f, const std::vector<AtomId>& v) {
  PrimeImplicantSet set = prime_implicants(Theory{}, f);
  for (const LiteralSet& pi : set.implicants()) {
    for (const AtomId& atom : v) {
      if (pi.mentions(atom)) return false;
    }
  }
  return true;
}

bool strictly_relevant(const Formula& f, const std::vector<AtomId>& v) {
  if (v.empty()) {
    throw std::invalid_argument("strict relevance is defined for a non-empty atom set");
  }
  std::vector<Literal> pos, neg;
  for (const AtomId& atom : v) {
    pos.push_back(Literal::positive(atom));
    neg.push_back(Literal::negative(atom));
  }
  Formula target = Formula::disjunction(conjunction_of(LiteralSet(std::move(pos))),
                                        conjunction_of(LiteralSet(std::move(neg))));
  return partially_entails(EntailmentKind::Weak, Theory{}, Formula::negation(f), target).holds;
}

bool relevant_formulas(const Theory& gamma, const Formula& p, const Formula& q) {
  PrimeImplicantSet pi_p = prime_implicants(gamma, p);
  PrimeImplicantSet pi_q = prime_implicants(gamma, q);
  for (const LiteralSet& pi : pi_p.implicants()) {
    for (const LiteralSet& pi_prime : pi_q.implicants()) {
      if (pi.intersects(pi_prime)) return true;
    }
  }
  return false;
}

NoveltyReport novelty(const Theory& gamma, const Formula& p, const Formula& q) {
  Theory extended = gamma.extended(p);
  NoveltyReport report;

  PrimeImplicantSet before_pos = prime_implicants(gamma, q);
  PrimeImplicantSet after_pos = prime_implicants(extended, q);
  for (const LiteralSet& pi : after_pos.implicants()) {
    if (!before_pos.contains(pi)) {
      report.new_positive = true;
      break;
    }
  }

  Formula not_q = Formula::negation(q);
  PrimeImplicantSet before_neg = prime_implicants(gamma, not_q);
  PrimeImplicantSet after_neg = prime_implicants(extended, not_q);
  for (const LiteralSet& pi : after_neg.implicants()) {
    if (!before_neg.contains(pi)) {
      report.new_negative = true;
      break;
    }
  }
  return report;
}

bool novelty_independent(const Formula& p, const Formula& q) {
  return !novelty(Theory{}, p, q).new_negative;
}

}  // namespace pentail
