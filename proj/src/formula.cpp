#include "pentail/formula.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <utility>

namespace pentail {

namespace {

bool valid_atom_name(std::string_view name) {
  if (name.empty()) return false;
  if (name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name.substr(1)) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return name != "true" && name != "false";
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

AtomId::AtomId(std::string name) : name_(std::move(name)) {
  if (!valid_atom_name(name_)) {
    throw std::invalid_argument("invalid atom name: '" + name_ + "'");
  }
}

std::string Literal::to_string() const {
  return positive_ ? atom_.name() : "!" + atom_.name();
}

LiteralSet::LiteralSet(std::vector<Literal> literals) : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
  for (std::size_t i = 1; i < literals_.size(); ++i) {
    if (literals_[i].atom() == literals_[i - 1].atom()) {
      throw std::invalid_argument("inconsistent literal set: both polarities of '" +
                                  literals_[i].atom().name() + "'");
    }
  }
}

bool LiteralSet::contains(const Literal& l) const {
  return std::binary_search(literals_.begin(), literals_.end(), l);
}

bool LiteralSet::mentions(const AtomId& atom) const {
  return contains(Literal::positive(atom)) || contains(Literal::negative(atom));
}

bool LiteralSet::subset_of(const LiteralSet& other) const {
  return std::includes(other.literals_.begin(), other.literals_.end(), literals_.begin(),
                       literals_.end());
}

bool LiteralSet::intersects(const LiteralSet& other) const {
  auto it = literals_.begin();
  auto jt = other.literals_.begin();
  while (it != literals_.end() && jt != other.literals_.end()) {
    if (*it == *jt) return true;
    if (*it < *jt) {
      ++it;
    } else {
      ++jt;
    }
  }
  return false;
}

LiteralSet LiteralSet::complements() const {
  std::vector<Literal> flipped;
  flipped.reserve(literals_.size());
  for (const Literal& l : literals_) flipped.push_back(l.complement());
  return LiteralSet(std::move(flipped));
}

LiteralSet LiteralSet::with(const Literal& l) const {
  std::vector<Literal> extended = literals_;
  extended.push_back(l);
  return LiteralSet(std::move(extended));
}

LiteralSet LiteralSet::without(const Literal& l) const {
  std::vector<Literal> remaining;
  remaining.reserve(literals_.size());
  for (const Literal& m : literals_) {
    if (!(m == l)) remaining.push_back(m);
  }
  return LiteralSet(std::move(remaining));
}

std::vector<AtomId> LiteralSet::atoms() const {
  std::vector<AtomId> result;
  result.reserve(literals_.size());
  for (const Literal& l : literals_) result.push_back(l.atom());
  return result;
}

std::string LiteralSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < literals_.size(); ++i) {
    if (i > 0) out += ", ";
    out += literals_[i].to_string();
  }
  out += "}";
  return out;
}

struct Formula::Node {
  Connective kind;
  std::optional<AtomId> atom;
  std::optional<Formula> left;
  std::optional<Formula> right;
};

Formula Formula::atom(AtomId id) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::Atom, std::move(id), std::nullopt, std::nullopt}));
}

Formula Formula::top() {
  static const Formula instance(std::make_shared<const Node>(
      Node{Connective::Top, std::nullopt, std::nullopt, std::nullopt}));
  return instance;
}

Formula Formula::bottom() {
  static const Formula instance(std::make_shared<const Node>(
      Node{Connective::Bottom, std::nullopt, std::nullopt, std::nullopt}));
  return instance;
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::Not, std::nullopt, std::move(f), std::nullopt}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::And, std::nullopt, std::move(lhs), std::move(rhs)}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::Or, std::nullopt, std::move(lhs), std::move(rhs)}));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::Implies, std::nullopt, std::move(lhs), std::move(rhs)}));
}

Formula Formula::equivalence(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::Iff, std::nullopt, std::move(lhs), std::move(rhs)}));
}

Connective Formula::kind() const { return node_->kind; }

const AtomId& Formula::atom_id() const { return *node_->atom; }

const Formula& Formula::child() const { return *node_->left; }

const Formula& Formula::lhs() const { return *node_->left; }

const Formula& Formula::rhs() const { return *node_->right; }

bool operator==(const Formula& a, const Formula& b) {
  struct Frame {
    const Formula::Node* x;
    const Formula::Node* y;
  };
  std::vector<Frame> stack{{a.node_.get(), b.node_.get()}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x == y) continue;
    if (x->kind != y->kind) return false;
    if (x->kind == Connective::Atom) {
      if (!(*x->atom == *y->atom)) return false;
      continue;
    }
    if (x->left) stack.push_back({x->left->node_.get(), y->left->node_.get()});
    if (x->right) stack.push_back({x->right->node_.get(), y->right->node_.get()});
  }
  return true;
}

namespace {

// Precedence for printing: higher binds tighter.
int precedence(Connective kind) {
  switch (kind) {
    case Connective::Iff: return 0;
    case Connective::Implies: return 1;
    case Connective::Or: return 2;
    case Connective::And: return 3;
    case Connective::Not: return 4;
    default: return 5;
  }
}

void print_formula(const Formula& f, int min_prec, std::string& out);

void print_binary(const Formula& f, const char* op, bool left_assoc, int min_prec,
                  std::string& out) {
  int prec = precedence(f.kind());
  bool wrap = prec < min_prec;
  if (wrap) out += '(';
  print_formula(f.lhs(), left_assoc ? prec : prec + 1, out);
  out += op;
  print_formula(f.rhs(), left_assoc ? prec + 1 : prec, out);
  if (wrap) out += ')';
}

void print_formula(const Formula& f, int min_prec, std::string& out) {
  switch (f.kind()) {
    case Connective::Atom:
      out += f.atom_id().name();
      return;
    case Connective::Top:
      out += "true";
      return;
    case Connective::Bottom:
      out += "false";
      return;
    case Connective::Not:
      out += '!';
      print_formula(f.child(), precedence(Connective::Not), out);
      return;
    case Connective::And:
      print_binary(f, " & ", true, min_prec, out);
      return;
    case Connective::Or:
      print_binary(f, " | ", true, min_prec, out);
      return;
    case Connective::Implies:
      print_binary(f, " -> ", false, min_prec, out);
      return;
    case Connective::Iff:
      print_binary(f, " <-> ", false, min_prec, out);
      return;
  }
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  print_formula(*this, 0, out);
  return out;
}

Theory Theory::extended(const Formula& f) const {
  std::vector<Formula> members = members_;
  members.push_back(f);
  return Theory(std::move(members));
}

Theory Theory::extended(const LiteralSet& literals) const {
  std::vector<Formula> members = members_;
  for (const Literal& l : literals.literals()) members.push_back(to_formula(l));
  return Theory(std::move(members));
}

Formula Theory::conjoined() const {
  if (members_.empty()) return Formula::top();
  Formula acc = members_.front();
  for (std::size_t i = 1; i < members_.size(); ++i) {
    acc = Formula::conjunction(std::move(acc), members_[i]);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class TokenKind {
  Atom,
  True,
  False,
  Bang,
  Amp,
  Pipe,
  Arrow,
  DoubleArrow,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  End,
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) return {TokenKind::End, "", start};
    char c = text_[pos_];
    switch (c) {
      case '!': ++pos_; return {TokenKind::Bang, "!", start};
      case '&': ++pos_; return {TokenKind::Amp, "&", start};
      case '|': ++pos_; return {TokenKind::Pipe, "|", start};
      case '(': ++pos_; return {TokenKind::LParen, "(", start};
      case ')': ++pos_; return {TokenKind::RParen, ")", start};
      case '{': ++pos_; return {TokenKind::LBrace, "{", start};
      case '}': ++pos_; return {TokenKind::RBrace, "}", start};
      case ',': ++pos_; return {TokenKind::Comma, ",", start};
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          pos_ += 2;
          return {TokenKind::Arrow, "->", start};
        }
        throw ParseError("expected '->'", start);
      case '<':
        if (text_.compare(pos_, 3, "<->") == 0) {
          pos_ += 3;
          return {TokenKind::DoubleArrow, "<->", start};
        }
        throw ParseError("expected '<->'", start);
      default:
        break;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t end = pos_ + 1;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
        ++end;
      }
      std::string word(text_.substr(pos_, end - pos_));
      pos_ = end;
      if (word == "true") return {TokenKind::True, word, start};
      if (word == "false") return {TokenKind::False, word, start};
      return {TokenKind::Atom, word, start};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  Formula parse_formula() {
    if (current_.kind == TokenKind::End) throw ParseError("empty input", 0);
    Formula f = parse_iff();
    expect(TokenKind::End, "end of input");
    return f;
  }

  LiteralSet parse_set() {
    expect_and_advance(TokenKind::LBrace, "'{'");
    std::vector<Literal> literals;
    if (current_.kind != TokenKind::RBrace) {
      literals.push_back(parse_literal());
      while (current_.kind == TokenKind::Comma) {
        advance();
        literals.push_back(parse_literal());
      }
    }
    expect_and_advance(TokenKind::RBrace, "'}'");
    expect(TokenKind::End, "end of input");
    std::size_t at = current_.position;
    try {
      return LiteralSet(std::move(literals));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), at);
    }
  }

 private:
  void advance() { current_ = lexer_.next(); }

  void expect(TokenKind kind, const char* what) {
    if (current_.kind != kind) {
      throw ParseError(std::string("expected ") + what, current_.position);
    }
  }

  void expect_and_advance(TokenKind kind, const char* what) {
    expect(kind, what);
    advance();
  }

  Literal parse_literal() {
    bool positive = true;
    if (current_.kind == TokenKind::Bang) {
      positive = false;
      advance();
    }
    expect(TokenKind::Atom, "an atom");
    Literal l(AtomId(current_.text), positive);
    advance();
    return l;
  }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    if (current_.kind == TokenKind::DoubleArrow) {
      advance();
      return Formula::equivalence(std::move(lhs), parse_iff());
    }
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (current_.kind == TokenKind::Arrow) {
      advance();
      return Formula::implication(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula acc = parse_and();
    while (current_.kind == TokenKind::Pipe) {
      advance();
      acc = Formula::disjunction(std::move(acc), parse_and());
    }
    return acc;
  }

  Formula parse_and() {
    Formula acc = parse_unary();
    while (current_.kind == TokenKind::Amp) {
      advance();
      acc = Formula::conjunction(std::move(acc), parse_unary());
    }
    return acc;
  }

  Formula parse_unary() {
    if (current_.kind == TokenKind::Bang) {
      advance();
      return Formula::negation(parse_unary());
    }
    return parse_primary();
  }

  Formula parse_primary() {
    switch (current_.kind) {
      case TokenKind::True:
        advance();
        return Formula::top();
      case TokenKind::False:
        advance();
        return Formula::bottom();
      case TokenKind::Atom: {
        Formula f = Formula::atom(AtomId(current_.text));
        advance();
        return f;
      }
      case TokenKind::LParen: {
        advance();
        Formula f = parse_iff();
        expect_and_advance(TokenKind::RParen, "')'");
        return f;
      }
      default:
        throw ParseError("expected a formula", current_.position);
    }
  }

  Lexer lexer_;
  Token current_{TokenKind::End, "", 0};
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_formula(); }

LiteralSet parse_literal_set(std::string_view text) { return Parser(text).parse_set(); }

// ---------------------------------------------------------------------------
// Syntactic queries and transformations

namespace {

void collect_atoms(const Formula& f, std::set<AtomId>& into) {
  switch (f.kind()) {
    case Connective::Atom:
      into.insert(f.atom_id());
      return;
    case Connective::Top:
    case Connective::Bottom:
      return;
    case Connective::Not:
      collect_atoms(f.child(), into);
      return;
    default:
      collect_atoms(f.lhs(), into);
      collect_atoms(f.rhs(), into);
      return;
  }
}

// Rebuilds f with every atom node mapped through `leaf`.
template <typename LeafFn>
Formula map_atoms(const Formula& f, const LeafFn& leaf) {
  switch (f.kind()) {
    case Connective::Atom:
      return leaf(f.atom_id());
    case Connective::Top:
    case Connective::Bottom:
      return f;
    case Connective::Not:
      return Formula::negation(map_atoms(f.child(), leaf));
    case Connective::And:
      return Formula::conjunction(map_atoms(f.lhs(), leaf), map_atoms(f.rhs(), leaf));
    case Connective::Or:
      return Formula::disjunction(map_atoms(f.lhs(), leaf), map_atoms(f.rhs(), leaf));
    case Connective::Implies:
      return Formula::implication(map_atoms(f.lhs(), leaf), map_atoms(f.rhs(), leaf));
    case Connective::Iff:
      return Formula::equivalence(map_atoms(f.lhs(), leaf), map_atoms(f.rhs(), leaf));
  }
  throw std::logic_error("unreachable formula kind");
}

}  // namespace

std::vector<AtomId> atoms(const Formula& f) {
  std::set<AtomId> set;
  collect_atoms(f, set);
  return std::vector<AtomId>(set.begin(), set.end());
}

std::vector<AtomId> atoms(const Theory& t) {
  std::set<AtomId> set;
  for (const Formula& f : t.members()) collect_atoms(f, set);
  return std::vector<AtomId>(set.begin(), set.end());
}

std::vector<AtomId> atoms_union(const std::vector<AtomId>& a, const std::vector<AtomId>& b) {
  std::vector<AtomId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Formula condition(const Formula& f, const Literal& l) {
  return map_atoms(f, [&](const AtomId& atom) {
    if (atom == l.atom()) return l.is_positive() ? Formula::top() : Formula::bottom();
    return Formula::atom(atom);
  });
}

Formula condition_set(const Formula& f, const LiteralSet& pi) {
  Formula acc = f;
  for (const Literal& l : pi.literals()) acc = condition(acc, l);
  return acc;
}

Formula substitute_atom(const Formula& f, const AtomId& x, const AtomId& y) {
  return map_atoms(f, [&](const AtomId& atom) {
    return Formula::atom(atom == x ? y : atom);
  });
}

Formula to_formula(const Literal& l) {
  Formula a = Formula::atom(l.atom());
  return l.is_positive() ? a : Formula::negation(std::move(a));
}

Formula conjunction_of(const LiteralSet& s) {
  if (s.empty()) return Formula::top();
  const auto& ls = s.literals();
  Formula acc = to_formula(ls.front());
  for (std::size_t i = 1; i < ls.size(); ++i) {
    acc = Formula::conjunction(std::move(acc), to_formula(ls[i]));
  }
  return acc;
}

Formula disjunction_of(const LiteralSet& s) {
  if (s.empty()) return Formula::bottom();
  const auto& ls = s.literals();
  Formula acc = to_formula(ls.front());
  for (std::size_t i = 1; i < ls.size(); ++i) {
    acc = Formula::disjunction(std::move(acc), to_formula(ls[i]));
  }
  return acc;
}

}  // namespace pentail
