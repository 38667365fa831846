#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pentail {

// Thrown by parse() and parse_literal_set() with a 0-based offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A propositional atom. Names follow [a-z][A-Za-z0-9_]* and are ordered
// lexicographically; "true" and "false" are reserved.
class AtomId {
 public:
  explicit AtomId(std::string name);
  const std::string& name() const { return name_; }

  friend bool operator==(const AtomId& a, const AtomId& b) { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(const AtomId& a, const AtomId& b) {
    return a.name_ <=> b.name_;
  }

 private:
  std::string name_;
};

class Literal {
 public:
  Literal(AtomId atom, bool positive) : atom_(std::move(atom)), positive_(positive) {}
  static Literal positive(AtomId atom) { return Literal(std::move(atom), true); }
  static Literal negative(AtomId atom) { return Literal(std::move(atom), false); }

  const AtomId& atom() const { return atom_; }
  bool is_positive() const { return positive_; }
  Literal complement() const { return Literal(atom_, !positive_); }
  std::string to_string() const;  // "x" or "!x"

  friend bool operator==(const Literal&, const Literal&) = default;
  // Ordered by atom, positive polarity first.
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
    if (auto c = a.atom_ <=> b.atom_; c != 0) return c;
    return (a.positive_ ? 0 : 1) <=> (b.positive_ ? 0 : 1);
  }

 private:
  AtomId atom_;
  bool positive_;
};

// A consistent set of literals: no atom occurs with both polarities.
// Doubles as a conjunction (empty set = ⊤) and as a partial assignment.
class LiteralSet {
 public:
  LiteralSet() = default;
  explicit LiteralSet(std::vector<Literal> literals);  // sorts, dedupes, checks consistency

  bool empty() const { return literals_.empty(); }
  std::size_t size() const { return literals_.size(); }
  const std::vector<Literal>& literals() const { return literals_; }

  bool contains(const Literal& l) const;
  bool mentions(const AtomId& atom) const;
  bool subset_of(const LiteralSet& other) const;
  bool intersects(const LiteralSet& other) const;
  LiteralSet complements() const;                // -π: every member complemented
  LiteralSet with(const Literal& l) const;       // throws on polarity clash
  LiteralSet without(const Literal& l) const;
  std::vector<AtomId> atoms() const;

  std::string to_string() const;  // "{r, !y}", members atom-sorted

  friend bool operator==(const LiteralSet&, const LiteralSet&) = default;
  friend std::strong_ordering operator<=>(const LiteralSet&, const LiteralSet&) = default;

 private:
  std::vector<Literal> literals_;  // sorted by atom
};

enum class Connective : std::uint8_t { Atom, Top, Bottom, Not, And, Or, Implies, Iff };

// Immutable formula tree. Connectives are binary; ∧, ∨, ↔ are first-class
// nodes so parsed input round-trips node-for-node.
class Formula {
 public:
  static Formula atom(AtomId id);
  static Formula atom(const std::string& name) { return atom(AtomId(name)); }
  static Formula top();
  static Formula bottom();
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);

  Connective kind() const;
  const AtomId& atom_id() const;  // requires kind() == Atom
  const Formula& child() const;   // requires kind() == Not
  const Formula& lhs() const;     // requires a binary kind
  const Formula& rhs() const;

  // Printed with minimal parentheses in the input grammar; parse(to_string()) == *this.
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);  // structural

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// An ordered, finite list of formulas queried through entailment; list order
// never affects any semantic decision.
class Theory {
 public:
  Theory() = default;
  explicit Theory(std::vector<Formula> members) : members_(std::move(members)) {}

  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<Formula>& members() const { return members_; }
  Theory extended(const Formula& f) const;
  Theory extended(const LiteralSet& literals) const;  // one formula per literal
  Formula conjoined() const;                          // ⋀Γ, ⊤ when empty

 private:
  std::vector<Formula> members_;
};

// Grammar: atoms [a-z][A-Za-z0-9_]*, constants `true`/`false`, operators
// ! & | -> <-> with precedence ! > & > | > -> > <->; & and | associate left,
// -> and <-> associate right. Whitespace-insensitive.
Formula parse(std::string_view text);

// Literal-set syntax: "{x, !y}" (also "{}").
LiteralSet parse_literal_set(std::string_view text);

std::vector<AtomId> atoms(const Formula& f);  // sorted, unique
std::vector<AtomId> atoms(const Theory& t);
std::vector<AtomId> atoms_union(const std::vector<AtomId>& a, const std::vector<AtomId>& b);

// P|l: replaces every occurrence of l's atom by ⊤ (positive) or ⊥ (negative).
// Pure substitution; simplification lives in the semantics module.
Formula condition(const Formula& f, const Literal& l);
// P|π: sequential conditioning; order-independent because π is consistent.
Formula condition_set(const Formula& f, const LiteralSet& pi);
// P(x/y): every occurrence of atom x becomes y; y may already occur.
Formula substitute_atom(const Formula& f, const AtomId& x, const AtomId& y);

Formula to_formula(const Literal& l);
Formula conjunction_of(const LiteralSet& s);  // ⊤ when empty
Formula disjunction_of(const LiteralSet& s);  // clause reading; ⊥ when empty

}  // namespace pentail
