#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "pentail/formula.hpp"

namespace pentail {

// Largest combined atom universe any exhaustive query accepts; beyond this the
// truth-table engine would not terminate in useful time.
inline constexpr std::size_t kMaxUniverseAtoms = 20;

// A total truth valuation over a fixed, sorted universe of atoms.
class Assignment {
 public:
  Assignment(std::shared_ptr<const std::vector<AtomId>> universe, std::uint64_t bits)
      : universe_(std::move(universe)), bits_(bits) {}

  // Builds an assignment from a literal set covering the universe exactly.
  static Assignment over(std::vector<AtomId> universe, const LiteralSet& values);

  const std::vector<AtomId>& universe() const { return *universe_; }
  bool value(const AtomId& atom) const;  // throws if atom not in universe
  bool extends(const LiteralSet& pi) const;
  LiteralSet literals() const;

  std::uint64_t bits() const { return bits_; }

  friend bool operator==(const Assignment& a, const Assignment& b) {
    return *a.universe_ == *b.universe_ && a.bits_ == b.bits_;
  }

 private:
  std::shared_ptr<const std::vector<AtomId>> universe_;
  std::uint64_t bits_;  // bit i = truth of universe[i]
};

// Standard truth-functional evaluation; atoms(f) must be covered by a.
bool evaluate(const Formula& f, const Assignment& a);

// All assignments over the universe in canonical order: atoms sorted
// lexicographically, enumerated by binary counting with positive = 1 and the
// first atom most significant, all-positive first.
std::vector<Assignment> all_assignments(std::vector<AtomId> universe);

// Models of every member of gamma over the universe (which must cover
// atoms(gamma)), in canonical order. Empty result = inconsistent over it.
std::vector<Assignment> models(const Theory& gamma, std::vector<AtomId> universe);

bool is_consistent(const Theory& gamma);

// Γ ⊨ F over the union of both sides' atoms.
bool entails(const Theory& gamma, const Formula& f);

// Mutual member-wise entailment.
bool theories_equivalent(const Theory& a, const Theory& b);

}  // namespace pentail
