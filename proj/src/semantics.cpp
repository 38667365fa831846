#include "pentail/semantics.hpp"

#include <algorithm>
#include <stdexcept>

#include "truth_table.hpp"

namespace pentail {

Assignment Assignment::over(std::vector<AtomId> universe, const LiteralSet& values) {
  universe = detail::sorted_unique(std::move(universe));
  detail::check_universe_size(universe.size());
  if (values.size() != universe.size()) {
    throw std::invalid_argument("literal set does not cover the universe exactly");
  }
  std::uint64_t bits = 0;
  for (const Literal& l : values.literals()) {
    int index = detail::index_in(universe, l.atom());
    if (index < 0) {
      throw std::invalid_argument("literal atom '" + l.atom().name() +
                                  "' is outside the universe");
    }
    if (l.is_positive()) bits |= std::uint64_t{1} << index;
  }
  return Assignment(std::make_shared<const std::vector<AtomId>>(std::move(universe)), bits);
}

bool Assignment::value(const AtomId& atom) const {
  int index = detail::index_in(*universe_, atom);
  if (index < 0) {
    throw std::out_of_range("atom '" + atom.name() + "' is not in the assignment universe");
  }
  return (bits_ >> index) & 1u;
}

bool Assignment::extends(const LiteralSet& pi) const {
  for (const Literal& l : pi.literals()) {
    int index = detail::index_in(*universe_, l.atom());
    if (index < 0) return false;
    if (bool((bits_ >> index) & 1u) != l.is_positive()) return false;
  }
  return true;
}

LiteralSet Assignment::literals() const {
  std::vector<Literal> out;
  out.reserve(universe_->size());
  for (std::size_t i = 0; i < universe_->size(); ++i) {
    out.emplace_back((*universe_)[i], bool((bits_ >> i) & 1u));
  }
  return LiteralSet(std::move(out));
}

bool evaluate(const Formula& f, const Assignment& a) {
  switch (f.kind()) {
    case Connective::Atom:
      return a.value(f.atom_id());
    case Connective::Top:
      return true;
    case Connective::Bottom:
      return false;
    case Connective::Not:
      return !evaluate(f.child(), a);
    case Connective::And:
      return evaluate(f.lhs(), a) && evaluate(f.rhs(), a);
    case Connective::Or:
      return evaluate(f.lhs(), a) || evaluate(f.rhs(), a);
    case Connective::Implies:
      return !evaluate(f.lhs(), a) || evaluate(f.rhs(), a);
    case Connective::Iff:
      return evaluate(f.lhs(), a) == evaluate(f.rhs(), a);
  }
  throw std::logic_error("unreachable formula kind");
}

std::vector<Assignment> all_assignments(std::vector<AtomId> universe) {
  universe = detail::sorted_unique(std::move(universe));
  detail::check_universe_size(universe.size());
  const std::size_t n = universe.size();
  auto shared = std::make_shared<const std::vector<AtomId>>(std::move(universe));
  std::vector<Assignment> out;
  const std::uint64_t count = std::uint64_t{1} << n;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    out.emplace_back(shared, detail::bits_from_rank(count - 1 - k, n));
  }
  return out;
}

std::vector<Assignment> models(const Theory& gamma, std::vector<AtomId> universe) {
  universe = detail::sorted_unique(std::move(universe));
  detail::check_universe_size(universe.size());
  for (const AtomId& atom : atoms(gamma)) {
    if (detail::index_in(universe, atom) < 0) {
      throw std::invalid_argument("universe does not cover theory atom '" + atom.name() + "'");
    }
  }
  const std::size_t n = universe.size();
  auto shared = std::make_shared<const std::vector<AtomId>>(std::move(universe));

  std::vector<detail::CompiledFormula> members;
  members.reserve(gamma.size());
  for (const Formula& f : gamma.members()) members.emplace_back(f, *shared);

  std::vector<Assignment> out;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t k = 0; k < count; ++k) {
    const std::uint64_t bits = detail::bits_from_rank(count - 1 - k, n);
    bool model = true;
    for (const detail::CompiledFormula& member : members) {
      if (!member.evaluate(bits)) {
        model = false;
        break;
      }
    }
    if (model) out.emplace_back(shared, bits);
  }
  return out;
}

bool is_consistent(const Theory& gamma) {
  std::vector<AtomId> universe = atoms(gamma);
  detail::check_universe_size(universe.size());
  const std::size_t n = universe.size();

  std::vector<detail::CompiledFormula> members;
  members.reserve(gamma.size());
  for (const Formula& f : gamma.members()) members.emplace_back(f, universe);

  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < count; ++v) {
    bool model = true;
    for (const detail::CompiledFormula& member : members) {
      if (!member.evaluate(v)) {
        model = false;
        break;
      }
    }
    if (model) return true;
  }
  return false;
}

bool entails(const Theory& gamma, const Formula& f) {
  std::vector<AtomId> universe = atoms_union(atoms(gamma), atoms(f));
  detail::check_universe_size(universe.size());
  const std::size_t n = universe.size();

  std::vector<detail::CompiledFormula> members;
  members.reserve(gamma.size());
  for (const Formula& m : gamma.members()) members.emplace_back(m, universe);
  detail::CompiledFormula conclusion(f, universe);

  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < count; ++v) {
    bool model = true;
    for (const detail::CompiledFormula& member : members) {
      if (!member.evaluate(v)) {
        model = false;
        break;
      }
    }
    if (model && !conclusion.evaluate(v)) return false;
  }
  return true;
}

bool theories_equivalent(const Theory& a, const Theory& b) {
  std::vector<AtomId> universe = atoms_union(atoms(a), atoms(b));
  detail::check_universe_size(universe.size());
  const std::size_t n = universe.size();

  std::vector<detail::CompiledFormula> left, right;
  left.reserve(a.size());
  right.reserve(b.size());
  for (const Formula& f : a.members()) left.emplace_back(f, universe);
  for (const Formula& f : b.members()) right.emplace_back(f, universe);

  auto all_true = [](const std::vector<detail::CompiledFormula>& fs, std::uint64_t v) {
    for (const detail::CompiledFormula& f : fs) {
      if (!f.evaluate(v)) return false;
    }
    return true;
  };

  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < count; ++v) {
    if (all_true(left, v) != all_true(right, v)) return false;
  }
  return true;
}

}  // namespace pentail
