// Internal engine shared by the semantics and prime-implicant modules:
// formulas compiled to postorder programs evaluated against bit-packed
// assignments over a fixed sorted atom universe.
#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "pentail/formula.hpp"
#include "pentail/semantics.hpp"

namespace pentail::detail {

inline void check_universe_size(std::size_t n) {
  if (n > kMaxUniverseAtoms) {
    throw std::invalid_argument("atom universe has " + std::to_string(n) +
                                " atoms; exhaustive queries accept at most " +
                                std::to_string(kMaxUniverseAtoms));
  }
}

inline std::vector<AtomId> sorted_unique(std::vector<AtomId> atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

// Returns the index of atom in the sorted universe, or -1 when absent.
inline int index_in(const std::vector<AtomId>& universe, const AtomId& atom) {
  auto it = std::lower_bound(universe.begin(), universe.end(), atom);
  if (it == universe.end() || !(*it == atom)) return -1;
  return static_cast<int>(it - universe.begin());
}

// Converts an enumeration rank into assignment bits. Ranks descend from
// 2^n - 1 so the all-true assignment comes first; rank bit (n-1-i) carries
// the truth of universe[i], which lives at assignment bit i.
inline std::uint64_t bits_from_rank(std::uint64_t rank, std::size_t n) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if ((rank >> (n - 1 - i)) & 1u) bits |= std::uint64_t{1} << i;
  }
  return bits;
}

// A formula flattened to a postorder program over universe bit positions.
class CompiledFormula {
 public:
  CompiledFormula(const Formula& f, const std::vector<AtomId>& universe) { compile(f, universe); }

  bool evaluate(std::uint64_t bits) const {
    thread_local std::vector<char> stack;
    stack.clear();
    for (const Op& op : ops_) {
      switch (op.kind) {
        case Connective::Atom:
          stack.push_back(static_cast<char>((bits >> op.atom_index) & 1u));
          break;
        case Connective::Top:
          stack.push_back(1);
          break;
        case Connective::Bottom:
          stack.push_back(0);
          break;
        case Connective::Not:
          stack.back() = !stack.back();
          break;
        default: {
          char rhs = stack.back();
          stack.pop_back();
          char lhs = stack.back();
          char result = 0;
          switch (op.kind) {
            case Connective::And: result = lhs && rhs; break;
            case Connective::Or: result = lhs || rhs; break;
            case Connective::Implies: result = !lhs || rhs; break;
            case Connective::Iff: result = lhs == rhs; break;
            default: throw std::logic_error("unreachable connective");
          }
          stack.back() = result;
          break;
        }
      }
    }
    return stack.back() != 0;
  }

 private:
  struct Op {
    Connective kind;
    int atom_index = -1;
  };

  void compile(const Formula& f, const std::vector<AtomId>& universe) {
    switch (f.kind()) {
      case Connective::Atom: {
        int index = index_in(universe, f.atom_id());
        if (index < 0) {
          throw std::invalid_argument("atom '" + f.atom_id().name() +
                                      "' is outside the assignment universe");
        }
        ops_.push_back({Connective::Atom, index});
        return;
      }
      case Connective::Top:
      case Connective::Bottom:
        ops_.push_back({f.kind(), -1});
        return;
      case Connective::Not:
        compile(f.child(), universe);
        ops_.push_back({Connective::Not, -1});
        return;
      default:
        compile(f.lhs(), universe);
        compile(f.rhs(), universe);
        ops_.push_back({f.kind(), -1});
        return;
    }
  }

  std::vector<Op> ops_;
};

// The model table a prime-implicant query runs against: every model of gamma
// over the combined universe, in canonical order, flagged by whether it also
// satisfies the conclusion formula.
struct GammaTable {
  std::shared_ptr<const std::vector<AtomId>> universe;  // sorted atoms(gamma) ∪ atoms(p)
  std::vector<std::uint64_t> model_bits;                // canonical order
  std::vector<char> satisfies_p;                        // parallel to model_bits
};

inline GammaTable build_gamma_table(const Theory& gamma, const Formula& p,
                                    std::shared_ptr<const std::vector<AtomId>> universe) {
  const std::size_t n = universe->size();
  check_universe_size(n);

  std::vector<CompiledFormula> members;
  members.reserve(gamma.size());
  for (const Formula& f : gamma.members()) members.emplace_back(f, *universe);
  CompiledFormula conclusion(p, *universe);

  GammaTable table;
  table.universe = std::move(universe);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t k = 0; k < count; ++k) {
    const std::uint64_t bits = bits_from_rank(count - 1 - k, n);
    bool model = true;
    for (const CompiledFormula& member : members) {
      if (!member.evaluate(bits)) {
        model = false;
        break;
      }
    }
    if (!model) continue;
    table.model_bits.push_back(bits);
    table.satisfies_p.push_back(static_cast<char>(conclusion.evaluate(bits)));
  }
  return table;
}

inline GammaTable build_gamma_table(const Theory& gamma, const Formula& p) {
  return build_gamma_table(gamma, p,
                           std::make_shared<const std::vector<AtomId>>(
                               atoms_union(atoms(gamma), atoms(p))));
}

}  // namespace pentail::detail
