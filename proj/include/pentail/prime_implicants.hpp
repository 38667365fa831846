#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pentail/formula.hpp"

namespace pentail {

// The value of PI(Γ, P): an antichain of consistent literal sets in canonical
// order (size, then printed form), with the search universe recorded.
class PrimeImplicantSet {
 public:
  PrimeImplicantSet(std::vector<LiteralSet> implicants, std::vector<AtomId> theory_atoms,
                    std::vector<AtomId> formula_atoms);

  const std::vector<LiteralSet>& implicants() const { return implicants_; }
  std::size_t size() const { return implicants_.size(); }
  bool empty() const { return implicants_.empty(); }
  // True for the {∅} case: the theory alone already entails the formula.
  bool singleton_empty() const { return implicants_.size() == 1 && implicants_[0].empty(); }
  bool contains(const LiteralSet& pi) const;

  const std::vector<AtomId>& theory_atoms() const { return theory_atoms_; }
  const std::vector<AtomId>& formula_atoms() const { return formula_atoms_; }

  // One implicant per line as "{l1, l2}", lines in canonical order.
  std::string to_text() const;

  friend bool operator==(const PrimeImplicantSet& a, const PrimeImplicantSet& b) {
    return a.implicants_ == b.implicants_;
  }

 private:
  std::vector<LiteralSet> implicants_;
  std::vector<AtomId> theory_atoms_;
  std::vector<AtomId> formula_atoms_;
};

// A literal vocabulary for abduction; unlike LiteralSet it may contain both
// polarities of an atom.
class HypothesisSet {
 public:
  HypothesisSet() = default;
  explicit HypothesisSet(std::vector<Literal> literals);  // sorts, dedupes

  const std::vector<Literal>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool contains(const Literal& l) const;

 private:
  std::vector<Literal> literals_;
};

// PI(Γ, P): every ⊆-minimal consistent literal set π over atoms(Γ) ∪ atoms(P)
// with Γ ∪ π consistent and Γ ∪ π ⊨ P. Breadth-first by candidate size with
// superset skipping, so every returned set is minimal by construction.
PrimeImplicantSet prime_implicants(const Theory& gamma, const Formula& p);

// Direct three-condition check for one candidate; minimality needs only the
// one-literal-removed subsets because entailment grows with the premise set.
bool is_prime_implicant(const Theory& gamma, const Formula& p, const LiteralSet& pi);

// l ∈ π for some π ∈ PI(Γ, P).
bool literal_in_some_pi(const Theory& gamma, const Formula& p, const Literal& l);

// PI(Γ, P) non-empty and l ∈ π for every member; false on an empty PI set so
// that this implies literal_in_some_pi.
bool literal_in_all_pi(const Theory& gamma, const Formula& p, const Literal& l);

// All ⊆-minimal π ⊆ H with Γ ∪ π consistent and Γ ∪ π ⊨ F, canonical order.
std::vector<LiteralSet> abductive_explanations(const Theory& gamma, const Formula& f,
                                               const HypothesisSet& h);

}  // namespace pentail
