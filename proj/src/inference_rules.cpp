#include "pentail/inference_rules.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

#include "pentail/semantics.hpp"

namespace pentail {

std::string to_string(RuleId rule) {
  switch (rule) {
    case RuleId::Ref: return "REF";
    case RuleId::LE: return "LE";
    case RuleId::RE: return "RE";
    case RuleId::BE: return "BE";
    case RuleId::Rev: return "REV";
    case RuleId::Tran: return "TRAN";
    case RuleId::As: return "AS";
    case RuleId::LO: return "LO";
    case RuleId::LS: return "LS";
    case RuleId::RA: return "RA";
    case RuleId::RO: return "RO";
    case RuleId::Mono: return "MONO";
    case RuleId::LN: return "LN";
    case RuleId::RN: return "RN";
    case RuleId::CP: return "CP";
  }
  throw std::logic_error("unreachable rule id");
}

bool rule_is_extension(RuleId rule) { return rule == RuleId::CP; }

bool rule_expected(RuleId rule, EntailmentKind kind) {
  switch (rule) {
    case RuleId::Ref:
    case RuleId::LE:
    case RuleId::RE:
    case RuleId::BE:
    case RuleId::Rev:
      return true;
    case RuleId::Tran:
      return kind == EntailmentKind::Strong;
    case RuleId::LS:
      return kind == EntailmentKind::Weak;
    case RuleId::As:
    case RuleId::LO:
    case RuleId::RA:
    case RuleId::RO:
    case RuleId::Mono:
    case RuleId::LN:
    case RuleId::RN:
    case RuleId::CP:
      return false;
  }
  throw std::logic_error("unreachable rule id");
}

namespace {

std::string theory_text(const Theory& t) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.members().size(); ++i) {
    if (i > 0) out += ", ";
    out += t.members()[i].to_string();
  }
  out += "]";
  return out;
}

}  // namespace

std::string RuleInstance::to_string() const {
  std::string out = "kind=" + pentail::to_string(kind);
  out += "; gamma=" + theory_text(gamma);
  if (gamma_prime) out += "; gamma'=" + theory_text(*gamma_prime);
  if (p) out += "; P=" + p->to_string();
  if (q) out += "; Q=" + q->to_string();
  if (r) out += "; R=" + r->to_string();
  if (from_atom && to_atom) out += "; subst=" + from_atom->name() + "/" + to_atom->name();
  return out;
}

namespace {

const Formula& need(const std::optional<Formula>& slot, const char* name) {
  if (!slot) {
    throw std::invalid_argument(std::string("rule instance is missing formula slot ") + name);
  }
  return *slot;
}

const Theory& need(const std::optional<Theory>& slot, const char* name) {
  if (!slot) {
    throw std::invalid_argument(std::string("rule instance is missing theory slot ") + name);
  }
  return *slot;
}

bool theory_entails_theory(const Theory& stronger, const Theory& weaker) {
  for (const Formula& f : weaker.members()) {
    if (!entails(stronger, f)) return false;
  }
  return true;
}

bool atoms_intersect(const Formula& a, const Formula& b) {
  std::vector<AtomId> av = atoms(a);
  std::vector<AtomId> bv = atoms(b);
  std::vector<AtomId> common;
  std::set_intersection(av.begin(), av.end(), bv.begin(), bv.end(), std::back_inserter(common));
  return !common.empty();
}

}  // namespace

bool check_rule_instance(RuleId rule, const RuleInstance& inst) {
  const auto pe = [&](const Theory& g, const Formula& a, const Formula& b) {
    return partially_entails(inst.kind, g, a, b).holds;
  };

  switch (rule) {
    case RuleId::Ref: {
      const Formula& p = need(inst.p, "P");
      return pe(inst.gamma, p, p);
    }
    case RuleId::LE: {
      const Formula& p = need(inst.p, "P");
      const Formula& q = need(inst.q, "Q");
      const Formula& r = need(inst.r, "R");
      if (!entails(inst.gamma, Formula::equivalence(p, r))) return true;
      if (!pe(inst.gamma, p, q)) return true;
      return pe(inst.gamma, r, q);
    }
    case RuleId::RE: {
      const Formula& p = need(inst.p, "P");
      const Formula& q = need(inst.q, "Q");
      const Formula& r = need(inst.r, "R");
      if (!entails(inst.gamma, Formula::equivalence(q, r))) return true;
      if (!pe(inst.gamma, p, q)) return true;
      return pe(inst.gamma, p, r);
    }
    case RuleId::BE: {
      const Theory& gp = need(inst.gamma_prime, "gamma'");
      const Formula& p = need(inst.p, "P");
      const Formula& q = need(inst.q, "Q");
      if (!theories_equivalent(inst.gamma, gp)) return true;
      return pe(inst.gamma, p, q) == pe(gp, p, q);
    }
    case RuleId::Rev: {
      if (!inst.gamma.empty()) {
        throw std::invalid_argument("the vocabulary-relevance rule is stated for an empty theory");
      }
      const Formula& p = need(inst.p, "P");
      const Formula& q = need(inst.q, "Q");
      if (!pe(inst.gamma, p, q)) return true;
      return atoms_intersect(p, q);
    }
    case RuleId::Tran: {
      const Formula& p = need(inst.p, "P");
      const Formula& q = need(inst.q, "Q");
      const Formula& r = need(inst.r, "R");
      if (!pe(inst.gamma, p, q) || !pe(inst.gamma, q, r)) return true;
      return pe(inst.gamma, p, r);
    }
    case RuleId::As: {
      const Formula& p = need(inst.p, "P");
      const Formula& q = need(inst.q, "Q");
      if (!inst.from_atom || !inst.to_atom) {
        throw std::invalid_argument("rule instance is missing the substitution atoms");
      }
      if (!pe(inst.gamma, p, q)) return true;
      return pe(inst.gamma, substitute_atom(p, *inst.from_atom, *inst.to_atom),
                substitute_atom(q, *inst.from_atom, *inst.to_atom));
    }
    case RuleId::LO: {
      const Formula& p = need(inst.p, "P");
      const Formula& q = need(inst.q, "Q");
      const Formula& r = need(inst.r, "R");
      if (!pe(inst.gamma, p, q) || !pe(inst.gamma, r, q)) return true;
      return pe(inst.gamma, Formula::disjunction(p, r), q);
    }
    case RuleId::LS: {
      const Formula& p = need(inst.p, "P");
      const Formula& q = need(inst.q, "Q");
      const Formula& r = need(inst.r, "R");
      if (!entails(inst.gamma, Formula::implication(p, r))) return true;
      if (!pe(inst.gamma, r, q)) return true;
      return pe(inst.gamma, p, q);
    }
    case RuleId::RA: {
      const Formula& p = need(inst.p, "P");
      const Formula& q = need(inst.q, "Q");
      const Formula& r = need(inst.r, "R");
      if (!pe(inst.gamma, p, q) || !pe(inst.gamma, p, r)) return true;
      return pe(inst.gamma, p, Formula::conjunction(r, q));
    }
    case RuleId::RO: {
      const Formula& p = need(inst.p, "P");
      const Formula& q = need(inst.q, "Q");
      const Formula& r = need(inst.r, "R");
      if (!pe(inst.gamma, p, q)) return true;
      return pe(inst.gamma, p, Formula::disjunction(q, r));
    }
    case RuleId::Mono: {
      const Theory& gp = need(inst.gamma_prime, "gamma'");
      const Formula& p = need(inst.p, "P");
      const Formula& q = need(inst.q, "Q");
      if (!theory_entails_theory(gp, inst.gamma)) return true;
      if (!pe(inst.gamma, p, q)) return true;
      return pe(gp, p, q);
    }
    case RuleId::LN: {
      const Formula& p = need(inst.p, "P");
      const Formula& q = need(inst.q, "Q");
      if (!pe(inst.gamma, p, q)) return true;
      return !pe(inst.gamma, Formula::negation(p), q);
    }
    case RuleId::RN: {
      const Formula& p = need(inst.p, "P");
      const Formula& q = need(inst.q, "Q");
      if (!pe(inst.gamma, p, q)) return true;
      return !pe(inst.gamma, p, Formula::negation(q));
    }
    case RuleId::CP: {
      const Formula& p = need(inst.p, "P");
      const Formula& q = need(inst.q, "Q");
      if (!pe(inst.gamma, p, q)) return true;
      return pe(inst.gamma, Formula::negation(q), Formula::negation(p));
    }
  }
  throw std::logic_error("unreachable rule id");
}

// ---------------------------------------------------------------------------
// Instance generation

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Deterministic bounded sampling; std::uniform_int_distribution is
// implementation-defined, so results would differ across standard libraries.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool chance(std::size_t numerator, std::size_t denominator) {
    return below(denominator) < numerator;
  }

 private:
  std::mt19937_64 rng_;
};

const char* const kPoolNames[] = {"x", "y", "z", "w"};

std::vector<AtomId> make_pool(std::size_t size) {
  std::vector<AtomId> pool;
  for (std::size_t i = 0; i < size; ++i) pool.emplace_back(kPoolNames[i]);
  return pool;
}

Formula random_formula(Gen& gen, const std::vector<AtomId>& pool, std::size_t depth) {
  if (depth == 0 || gen.chance(1, 3)) {
    return Formula::atom(pool[gen.below(pool.size())]);
  }
  switch (gen.below(5)) {
    case 0: return Formula::negation(random_formula(gen, pool, depth - 1));
    case 1:
      return Formula::conjunction(random_formula(gen, pool, depth - 1),
                                  random_formula(gen, pool, depth - 1));
    case 2:
      return Formula::disjunction(random_formula(gen, pool, depth - 1),
                                  random_formula(gen, pool, depth - 1));
    case 3:
      return Formula::implication(random_formula(gen, pool, depth - 1),
                                  random_formula(gen, pool, depth - 1));
    default:
      return Formula::equivalence(random_formula(gen, pool, depth - 1),
                                  random_formula(gen, pool, depth - 1));
  }
}

// k pool atoms drawn pairwise-distinct (wrapping when the pool is smaller),
// each randomly negated, so composed shapes do not collapse onto one atom.
std::vector<Formula> distinct_literals(Gen& gen, const std::vector<AtomId>& pool, std::size_t k) {
  std::vector<std::size_t> idx(pool.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = idx.size(); i > 1; --i) std::swap(idx[i - 1], idx[gen.below(i)]);
  std::vector<Formula> out;
  for (std::size_t i = 0; i < k; ++i) {
    Formula f = Formula::atom(pool[idx[i % idx.size()]]);
    if (gen.chance(1, 3)) f = Formula::negation(f);
    out.push_back(std::move(f));
  }
  return out;
}

bool nontrivial_under_all(const Formula& f, const std::vector<const Theory*>& contexts) {
  for (const Theory* gamma : contexts) {
    if (is_trivial(*gamma, f)) return false;
  }
  return true;
}

Formula nontrivial_formula(Gen& gen, const std::vector<AtomId>& pool, std::size_t depth,
                           const std::vector<const Theory*>& contexts) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    Formula f = random_formula(gen, pool, depth);
    if (nontrivial_under_all(f, contexts)) return f;
  }
  throw std::logic_error("could not draw a nontrivial formula; theory over-constrains the pool");
}

// True when some pool atom is left open by the theory, so nontrivial slot
// formulas exist.
bool leaves_an_atom_open(const Theory& gamma, const std::vector<AtomId>& pool) {
  for (const AtomId& atom : pool) {
    Formula f = Formula::atom(atom);
    if (!entails(gamma, f) && !entails(gamma, Formula::negation(f))) return true;
  }
  return false;
}

Theory random_theory(Gen& gen, const std::vector<AtomId>& pool, std::size_t depth) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::size_t members = gen.chance(1, 2) ? 0 : 1 + gen.below(2);
    std::vector<Formula> fs;
    for (std::size_t i = 0; i < members; ++i) fs.push_back(random_formula(gen, pool, depth));
    Theory gamma(std::move(fs));
    if (is_consistent(gamma) && leaves_an_atom_open(gamma, pool)) return gamma;
  }
  return Theory{};
}

// A random formula logically equivalent to f, so equivalence-antecedent rules
// get exercised rather than passing vacuously.
Formula equivalent_rewrite(Gen& gen, const Formula& f, const std::vector<AtomId>& pool) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    switch (gen.below(7)) {
      case 0:
        return Formula::negation(Formula::negation(f));
      case 1:
        if (f.kind() == Connective::And) return Formula::conjunction(f.rhs(), f.lhs());
        if (f.kind() == Connective::Or) return Formula::disjunction(f.rhs(), f.lhs());
        break;
      case 2:
        if (f.kind() == Connective::Iff) {
          return Formula::conjunction(Formula::implication(f.lhs(), f.rhs()),
                                      Formula::implication(f.rhs(), f.lhs()));
        }
        if (f.kind() == Connective::Implies) {
          return Formula::disjunction(Formula::negation(f.lhs()), f.rhs());
        }
        break;
      case 3:
        return gen.chance(1, 2) ? Formula::conjunction(f, f) : Formula::disjunction(f, f);
      case 4: {
        Formula t = Formula::atom(pool[gen.below(pool.size())]);
        return Formula::conjunction(f, Formula::disjunction(t, Formula::negation(t)));
      }
      case 5: {
        Formula t = Formula::atom(pool[gen.below(pool.size())]);
        return Formula::disjunction(f, Formula::conjunction(t, Formula::negation(t)));
      }
      case 6:
        return Formula::implication(Formula::negation(f), f);  // ≡ f
    }
  }
  return Formula::negation(Formula::negation(f));
}

// A random theory with the same models as gamma.
Theory equivalent_theory_rewrite(Gen& gen, const Theory& gamma, const std::vector<AtomId>& pool) {
  std::vector<Formula> members;
  for (const Formula& f : gamma.members()) {
    if (f.kind() == Connective::And && gen.chance(1, 3)) {
      members.push_back(f.lhs());  // conjunction split keeps the same models
      members.push_back(f.rhs());
    } else if (gen.chance(1, 2)) {
      members.push_back(equivalent_rewrite(gen, f, pool));
    } else {
      members.push_back(f);
    }
  }
  if (members.size() >= 2 && gen.chance(1, 3)) {
    Formula joined = Formula::conjunction(members[members.size() - 2], members.back());
    members.pop_back();
    members.back() = joined;
  }
  if (gen.chance(1, 3)) {
    Formula t = Formula::atom(pool[gen.below(pool.size())]);
    members.push_back(Formula::disjunction(t, Formula::negation(t)));
  }
  // Fisher-Yates shuffle; member order is semantically inert but exercises it.
  for (std::size_t i = members.size(); i > 1; --i) {
    std::swap(members[i - 1], members[gen.below(i)]);
  }
  return Theory(std::move(members));
}

RuleInstance generate_one(Gen& gen, RuleId rule, EntailmentKind kind) {
  const std::size_t pool_size = 2 + gen.below(3);  // 2..4 atoms
  const std::vector<AtomId> pool = make_pool(pool_size);
  const std::size_t depth = 1 + gen.below(3);  // 1..3 connective levels

  RuleInstance inst;
  inst.kind = kind;
  inst.gamma = rule == RuleId::Rev ? Theory{} : random_theory(gen, pool, depth);
  const std::vector<const Theory*> ctx{&inst.gamma};

  switch (rule) {
    case RuleId::Ref:
      inst.p = nontrivial_formula(gen, pool, depth, ctx);
      break;
    case RuleId::LE:
      inst.p = nontrivial_formula(gen, pool, depth, ctx);
      inst.q = nontrivial_formula(gen, pool, depth, ctx);
      inst.r = gen.chance(3, 4) ? equivalent_rewrite(gen, *inst.p, pool)
                                : nontrivial_formula(gen, pool, depth, ctx);
      break;
    case RuleId::RE:
      inst.p = nontrivial_formula(gen, pool, depth, ctx);
      inst.q = nontrivial_formula(gen, pool, depth, ctx);
      inst.r = gen.chance(3, 4) ? equivalent_rewrite(gen, *inst.q, pool)
                                : nontrivial_formula(gen, pool, depth, ctx);
      break;
    case RuleId::BE:
      inst.p = nontrivial_formula(gen, pool, depth, ctx);
      inst.q = nontrivial_formula(gen, pool, depth, ctx);
      inst.gamma_prime = equivalent_theory_rewrite(gen, inst.gamma, pool);
      break;
    case RuleId::Rev:
    case RuleId::LN:
    case RuleId::RN:
    case RuleId::CP:
      inst.p = nontrivial_formula(gen, pool, depth, ctx);
      inst.q = nontrivial_formula(gen, pool, depth, ctx);
      break;
    case RuleId::Tran:
    case RuleId::LO:
    case RuleId::RA:
    case RuleId::RO: {
      inst.p = nontrivial_formula(gen, pool, depth, ctx);
      inst.q = nontrivial_formula(gen, pool, depth, ctx);
      inst.r = nontrivial_formula(gen, pool, depth, ctx);
      // Independent draws almost never satisfy both premises of these rules,
      // so a purely random sweep exercises them only vacuously. Half the
      // instances therefore compose their slots so the premises frequently
      // hold; check_rule_instance remains the sole judge of each verdict.
      if (gen.chance(1, 2)) {
        const auto take = [&](std::optional<Formula>& slot, Formula f) {
          if (nontrivial_under_all(f, ctx)) slot = std::move(f);
        };
        const auto compose = [&](const Formula& f, const Formula& g) {
          return gen.chance(1, 2) ? Formula::conjunction(f, g) : Formula::disjunction(f, g);
        };
        std::vector<Formula> lits;
        if (gen.chance(1, 2)) lits = distinct_literals(gen, pool, 4);
        const Formula a = lits.empty() ? random_formula(gen, pool, 1) : lits[0];
        const Formula b = lits.empty() ? random_formula(gen, pool, 1) : lits[1];
        const Formula c = lits.empty() ? random_formula(gen, pool, 1) : lits[2];
        const Formula d = gen.chance(1, 3)
                              ? Formula::negation(c)
                              : (lits.empty() ? random_formula(gen, pool, 1) : lits[3]);
        switch (rule) {
          case RuleId::Tran: {
            // A chain base, base∘C, (base∘C)∘D connects both premise pairs.
            const Formula base = random_formula(gen, pool, 2);
            const Formula mid = compose(base, c);
            take(inst.p, base);
            take(inst.q, mid);
            take(inst.r, compose(mid, d));
            break;
          }
          case RuleId::LO:
            if (gen.chance(1, 2)) {
              // Complementary weakenings: P = A→B and R = B→A each reach
              // Q = A↔B under every kind, yet P∨R is a tautology whose sole
              // implicant ∅ partners with nothing.
              std::vector<Formula> ls = distinct_literals(gen, pool, 2);
              Formula np = Formula::implication(ls[0], ls[1]);
              Formula nr = Formula::implication(ls[1], ls[0]);
              Formula nq = Formula::equivalence(ls[0], ls[1]);
              if (nontrivial_under_all(np, ctx) && nontrivial_under_all(nr, ctx) &&
                  nontrivial_under_all(nq, ctx)) {
                inst.p = std::move(np);
                inst.q = std::move(nq);
                inst.r = std::move(nr);
                break;
              }
            }
            // P and R agree on B but split on A; Q follows the split with
            // independent riders, so the merged antecedent P∨R can lose both.
            take(inst.p, Formula::conjunction(a, b));
            take(inst.r, Formula::conjunction(Formula::negation(a), b));
            take(inst.q, Formula::disjunction(Formula::conjunction(a, c),
                                              Formula::conjunction(Formula::negation(a), d)));
            break;
          case RuleId::RA:
            // Q and R each weaken one disjunct of P in their own direction;
            // when the riders clash, Q∧R drops that disjunct entirely.
            take(inst.p, Formula::disjunction(a, b));
            take(inst.q, Formula::disjunction(a, Formula::conjunction(b, c)));
            take(inst.r, Formula::disjunction(a, Formula::conjunction(b, d)));
            break;
          case RuleId::RO: {
            // R near ¬Q collapses Q∨R toward a tautology.
            const Formula base = random_formula(gen, pool, 2);
            take(inst.p, base);
            take(inst.q, compose(base, c));
            take(inst.r, gen.chance(1, 2) ? Formula::negation(*inst.q) : d);
            break;
          }
          default:
            break;
        }
      }
      break;
    }
    case RuleId::LS: {
      inst.q = nontrivial_formula(gen, pool, depth, ctx);
      inst.r = nontrivial_formula(gen, pool, depth, ctx);
      if (gen.chance(1, 2)) {
        // P of the form R ∧ X makes the Γ ⊨ P → R antecedent certain.
        for (int attempt = 0; attempt < 500; ++attempt) {
          Formula candidate =
              Formula::conjunction(*inst.r, random_formula(gen, pool, depth));
          if (nontrivial_under_all(candidate, ctx)) {
            inst.p = candidate;
            break;
          }
        }
        if (!inst.p) inst.p = nontrivial_formula(gen, pool, depth, ctx);
      } else {
        inst.p = nontrivial_formula(gen, pool, depth, ctx);
      }
      break;
    }
    case RuleId::As: {
      inst.p = nontrivial_formula(gen, pool, depth, ctx);
      inst.q = nontrivial_formula(gen, pool, depth, ctx);
      std::vector<AtomId> mentioned = atoms_union(atoms(*inst.p), atoms(*inst.q));
      inst.from_atom = mentioned[gen.below(mentioned.size())];
      inst.to_atom = pool[gen.below(pool.size())];
      break;
    }
    case RuleId::Mono: {
      std::optional<Theory> prime;
      for (int attempt = 0; attempt < 100 && !prime; ++attempt) {
        std::vector<Formula> extra = inst.gamma.members();
        std::size_t additions = 1 + gen.below(2);
        for (std::size_t i = 0; i < additions; ++i) {
          // Literal additions prune models aggressively, which is what makes
          // strengthened theories break existing partner implicants.
          if (gen.chance(1, 2)) {
            Formula lit = Formula::atom(pool[gen.below(pool.size())]);
            if (gen.chance(1, 2)) lit = Formula::negation(lit);
            extra.push_back(std::move(lit));
          } else {
            extra.push_back(random_formula(gen, pool, depth));
          }
        }
        Theory candidate(std::move(extra));
        if (is_consistent(candidate) && leaves_an_atom_open(candidate, pool)) {
          prime = std::move(candidate);
        }
      }
      inst.gamma_prime = prime ? *prime : inst.gamma;
      const std::vector<const Theory*> both{&inst.gamma, &*inst.gamma_prime};
      inst.p = nontrivial_formula(gen, pool, depth, both);
      inst.q = nontrivial_formula(gen, pool, depth, both);
      break;
    }
  }
  return inst;
}

}  // namespace

std::vector<RuleInstance> generate_instances(RuleId rule, EntailmentKind kind, std::size_t count,
                                             std::uint64_t seed) {
  const std::uint64_t cell_tag =
      (static_cast<std::uint64_t>(rule) << 8) | static_cast<std::uint64_t>(kind);
  Gen gen(mix64(seed ^ mix64(cell_tag + 1)));
  std::vector<RuleInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(generate_one(gen, rule, kind));
  return out;
}

// ---------------------------------------------------------------------------
// The reference table

namespace {

// Published counterexamples, re-verified on every report rather than trusted.
std::optional<RuleInstance> pinned_counterexample(RuleId rule, EntailmentKind kind) {
  RuleInstance inst;
  inst.kind = kind;
  switch (rule) {
    case RuleId::Tran:
      if (kind == EntailmentKind::Strong) return std::nullopt;
      inst.p = parse("x");
      inst.q = parse("x & y");
      inst.r = parse("y");
      return inst;
    case RuleId::LS:
      if (kind == EntailmentKind::Weak) return std::nullopt;
      inst.p = parse("x & !y");
      inst.r = parse("x");
      inst.q = parse("x & y");
      return inst;
    case RuleId::LN:
    case RuleId::RN:
      inst.p = parse("x");
      inst.q = parse("x <-> y");
      return inst;
    default:
      return std::nullopt;
  }
}

constexpr EntailmentKind kAllKinds[] = {EntailmentKind::Weak, EntailmentKind::Plain,
                                        EntailmentKind::Strong};

}  // namespace

bool RulesReport::all_confirmed() const {
  for (const RuleVerdict& cell : cells) {
    if (!cell.confirmed) return false;
  }
  return true;
}

std::string RulesReport::to_text() const {
  std::string out;
  out += "rule sweep: " + std::to_string(samples_per_cell) + " instances per cell, seed " +
         std::to_string(seed) + "\n";
  out += "yes = no violating instance found (falsification only, not a proof);\n";
  out += "no  = violating instance exhibited below.\n\n";

  auto cell_at = [&](RuleId rule, EntailmentKind kind) -> const RuleVerdict& {
    for (const RuleVerdict& cell : cells) {
      if (cell.rule == rule && cell.kind == kind) return cell;
    }
    throw std::logic_error("report is missing a rule/kind cell");
  };

  out += "rule    weak     plain    strong\n";
  for (RuleId rule : kAllRules) {
    std::string row = to_string(rule) + (rule_is_extension(rule) ? "*" : "");
    row.resize(8, ' ');
    for (EntailmentKind kind : kAllKinds) {
      const RuleVerdict& cell = cell_at(rule, kind);
      std::string text = cell.expected ? "yes" : "no";
      if (!cell.confirmed) text += "(?)";
      text.resize(9, ' ');
      row += text;
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row + "\n";
  }
  out += "* extension beyond the reference rule set\n";

  std::string examples;
  for (const RuleVerdict& cell : cells) {
    if (cell.counterexample) {
      examples += to_string(cell.rule) + "/" + to_string(cell.kind) + ": " +
                  cell.counterexample->to_string() + "\n";
    }
  }
  if (!examples.empty()) out += "\ncounterexamples:\n" + examples;
  return out;
}

RulesReport table2_report(std::size_t samples_per_cell, std::uint64_t seed) {
  if (samples_per_cell < 100) {
    throw std::invalid_argument("rule sweeps need at least 100 samples per cell");
  }
  RulesReport report;
  report.samples_per_cell = samples_per_cell;
  report.seed = seed;

  for (RuleId rule : kAllRules) {
    for (EntailmentKind kind : kAllKinds) {
      RuleVerdict verdict{rule, kind, rule_expected(rule, kind), false, std::nullopt};
      if (verdict.expected) {
        for (const RuleInstance& inst : generate_instances(rule, kind, samples_per_cell, seed)) {
          if (!check_rule_instance(rule, inst)) {
            throw std::logic_error("rule " + to_string(rule) + " (" + to_string(kind) +
                                   ") unexpectedly violated by instance: " + inst.to_string());
          }
        }
        verdict.confirmed = true;
      } else if (std::optional<RuleInstance> pinned = pinned_counterexample(rule, kind)) {
        pinned->kind = kind;
        if (check_rule_instance(rule, *pinned)) {
          throw std::logic_error("published counterexample for " + to_string(rule) + " (" +
                                 to_string(kind) +
                                 ") no longer violates the rule: " + pinned->to_string());
        }
        verdict.confirmed = true;
        verdict.counterexample = std::move(pinned);
      } else {
        for (const RuleInstance& inst : generate_instances(rule, kind, samples_per_cell, seed)) {
          if (!check_rule_instance(rule, inst)) {
            verdict.confirmed = true;
            verdict.counterexample = inst;
            break;
          }
        }
      }
      report.cells.push_back(std::move(verdict));
    }
  }
  return report;
}

}  // namespace pentail
