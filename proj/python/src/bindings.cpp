#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "pentail/formula.hpp"
#include "pentail/goal_reasoning.hpp"
#include "pentail/inference_rules.hpp"
#include "pentail/partial_entailment.hpp"
#include "pentail/prime_implicants.hpp"
#include "pentail/relevance.hpp"
#include "pentail/semantics.hpp"

namespace py = pybind11;

namespace {

using namespace pentail;

Theory theory_from(const std::vector<std::string>& formulas) {
  Theory theory;
  for (const std::string& text : formulas) theory = theory.extended(parse(text));
  return theory;
}

Literal literal_from(const std::string& text) {
  LiteralSet set = parse_literal_set("{" + text + "}");
  if (set.size() != 1) throw std::invalid_argument("expected a single literal: '" + text + "'");
  return set.literals().front();
}

LiteralSet literal_set_from(const std::vector<std::string>& literals) {
  std::vector<Literal> out;
  out.reserve(literals.size());
  for (const std::string& text : literals) out.push_back(literal_from(text));
  return LiteralSet(std::move(out));
}

std::vector<std::string> literal_set_out(const LiteralSet& set) {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (const Literal& l : set.literals()) out.push_back(l.to_string());
  return out;
}

std::vector<std::string> atom_names(const std::vector<AtomId>& atoms) {
  std::vector<std::string> out;
  out.reserve(atoms.size());
  for (const AtomId& atom : atoms) out.push_back(atom.name());
  return out;
}

std::vector<AtomId> atoms_from(const std::vector<std::string>& names) {
  std::vector<AtomId> out;
  out.reserve(names.size());
  for (const std::string& name : names) out.emplace_back(name);
  return out;
}

EntailmentKind kind_from(const std::string& name) {
  std::optional<EntailmentKind> kind = entailment_kind_from(name);
  if (!kind) {
    throw std::invalid_argument("unknown relation kind '" + name +
                                "' (expected weak, plain, or strong)");
  }
  return *kind;
}

std::vector<Action> actions_from(
    const std::vector<std::tuple<std::string, std::string, std::string>>& raw) {
  std::vector<Action> out;
  out.reserve(raw.size());
  for (const auto& [label, pre, post] : raw) {
    out.push_back({label, parse(pre), parse(post)});
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "propositional partial-entailment toolkit";

  // --- formulas ---------------------------------------------------------
  m.def(
      "parse_print", [](const std::string& text) { return parse(text).to_string(); },
      py::arg("formula"), "Parse a formula and print it back with minimal parentheses.");
  m.def(
      "atoms", [](const std::string& text) { return atom_names(atoms(parse(text))); },
      py::arg("formula"), "Sorted atom names occurring in the formula.");
  m.def(
      "condition",
      [](const std::string& formula, const std::string& literal) {
        return condition(parse(formula), literal_from(literal)).to_string();
      },
      py::arg("formula"), py::arg("literal"),
      "Replace the literal's atom by the constant it asserts.");
  m.def(
      "substitute",
      [](const std::string& formula, const std::string& from, const std::string& to) {
        return substitute_atom(parse(formula), AtomId(from), AtomId(to)).to_string();
      },
      py::arg("formula"), py::arg("from_atom"), py::arg("to_atom"),
      "Rename one atom throughout the formula.");

  // --- semantics --------------------------------------------------------
  m.def(
      "is_consistent",
      [](const std::vector<std::string>& theory) { return is_consistent(theory_from(theory)); },
      py::arg("theory"));
  m.def(
      "entails",
      [](const std::vector<std::string>& theory, const std::string& formula) {
        return entails(theory_from(theory), parse(formula));
      },
      py::arg("theory"), py::arg("formula"));
  m.def(
      "theories_equivalent",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        return theories_equivalent(theory_from(a), theory_from(b));
      },
      py::arg("first"), py::arg("second"));

  // --- prime implicants -------------------------------------------------
  m.def(
      "prime_implicants",
      [](const std::vector<std::string>& theory, const std::string& formula) {
        std::vector<std::vector<std::string>> out;
        const PrimeImplicantSet set = prime_implicants(theory_from(theory), parse(formula));
        for (const LiteralSet& pi : set.implicants()) {
          out.push_back(literal_set_out(pi));
        }
        return out;
      },
      py::arg("theory"), py::arg("formula"),
      "Minimal literal sets that close the gap from the theory to the formula.");
  m.def(
      "is_prime_implicant",
      [](const std::vector<std::string>& theory, const std::string& formula,
         const std::vector<std::string>& literals) {
        return is_prime_implicant(theory_from(theory), parse(formula),
                                  literal_set_from(literals));
      },
      py::arg("theory"), py::arg("formula"), py::arg("literals"));
  m.def(
      "literal_in_some_pi",
      [](const std::vector<std::string>& theory, const std::string& formula,
         const std::string& literal) {
        return literal_in_some_pi(theory_from(theory), parse(formula), literal_from(literal));
      },
      py::arg("theory"), py::arg("formula"), py::arg("literal"));
  m.def(
      "literal_in_all_pi",
      [](const std::vector<std::string>& theory, const std::string& formula,
         const std::string& literal) {
        return literal_in_all_pi(theory_from(theory), parse(formula), literal_from(literal));
      },
      py::arg("theory"), py::arg("formula"), py::arg("literal"));
  m.def(
      "abductive_explanations",
      [](const std::vector<std::string>& theory, const std::string& formula,
         const std::vector<std::string>& hypotheses) {
        std::vector<Literal> vocabulary;
        for (const std::string& text : hypotheses) vocabulary.push_back(literal_from(text));
        std::vector<std::vector<std::string>> out;
        for (const LiteralSet& pi : abductive_explanations(theory_from(theory), parse(formula),
                                                           HypothesisSet(std::move(vocabulary)))) {
          out.push_back(literal_set_out(pi));
        }
        return out;
      },
      py::arg("theory"), py::arg("formula"), py::arg("hypotheses"),
      "Minimal explanations drawn from the hypothesis literals.");

  // --- partial entailment ------------------------------------------------
  m.def(
      "is_trivial",
      [](const std::vector<std::string>& theory, const std::string& formula) {
        return is_trivial(theory_from(theory), parse(formula));
      },
      py::arg("theory"), py::arg("formula"));
  m.def(
      "partially_entails",
      [](const std::string& kind, const std::vector<std::string>& theory, const std::string& p,
         const std::string& q) {
        Verdict v = partially_entails(kind_from(kind), theory_from(theory), parse(p), parse(q));
        py::dict out;
        out["holds"] = v.holds;
        out["reason"] = to_string(v.reason);
        if (v.witness_or_refuter) out["refuter"] = literal_set_out(*v.witness_or_refuter);
        return out;
      },
      py::arg("kind"), py::arg("theory"), py::arg("antecedent"), py::arg("consequent"));
  m.def(
      "literal_set_relation",
      [](const std::string& kind, const std::vector<std::string>& pi,
         const std::vector<std::string>& pi_prime) {
        return literal_set_relation(kind_from(kind), literal_set_from(pi),
                                    literal_set_from(pi_prime));
      },
      py::arg("kind"), py::arg("first"), py::arg("second"));
  m.def(
      "clause_relation_report",
      [](const std::vector<std::string>& delta, const std::vector<std::string>& delta_prime) {
        ClauseRelationReport r =
            clause_relation_report(literal_set_from(delta), literal_set_from(delta_prime));
        py::dict out;
        out["subset"] = r.subset;
        out["classical"] = r.classical;
        out["weak"] = r.weak;
        out["plain"] = r.plain;
        out["strong"] = r.strong;
        out["all_agree"] = r.all_agree();
        return out;
      },
      py::arg("clause"), py::arg("clause_prime"));

  // --- inference rules ----------------------------------------------------
  m.def(
      "rule_table_report",
      [](std::size_t samples, std::uint64_t seed) {
        RulesReport report = table2_report(samples, seed);
        py::list cells;
        for (const RuleVerdict& cell : report.cells) {
          py::dict body;
          body["rule"] = to_string(cell.rule);
          body["kind"] = to_string(cell.kind);
          body["expected"] = cell.expected;
          body["confirmed"] = cell.confirmed;
          body["extension"] = rule_is_extension(cell.rule);
          if (cell.counterexample) body["counterexample"] = cell.counterexample->to_string();
          cells.append(body);
        }
        py::dict out;
        out["samples_per_cell"] = report.samples_per_cell;
        out["seed"] = report.seed;
        out["all_confirmed"] = report.all_confirmed();
        out["cells"] = cells;
        return out;
      },
      py::arg("samples") = 200, py::arg("seed") = 1,
      "Sweep every inference-rule cell on random instances.");

  // --- relevance -----------------------------------------------------------
  m.def(
      "variable_independent",
      [](const std::string& formula, const std::vector<std::string>& names) {
        return variable_independent(parse(formula), atoms_from(names));
      },
      py::arg("formula"), py::arg("atoms"));
  m.def(
      "strictly_relevant",
      [](const std::string& formula, const std::vector<std::string>& names) {
        return strictly_relevant(parse(formula), atoms_from(names));
      },
      py::arg("formula"), py::arg("atoms"));
  m.def(
      "relevant_formulas",
      [](const std::vector<std::string>& theory, const std::string& p, const std::string& q) {
        return relevant_formulas(theory_from(theory), parse(p), parse(q));
      },
      py::arg("theory"), py::arg("first"), py::arg("second"));
  m.def(
      "novelty",
      [](const std::vector<std::string>& theory, const std::string& p, const std::string& q) {
        NoveltyReport r = novelty(theory_from(theory), parse(p), parse(q));
        py::dict out;
        out["new_positive"] = r.new_positive;
        out["new_negative"] = r.new_negative;
        return out;
      },
      py::arg("theory"), py::arg("formula"), py::arg("target"));
  m.def(
      "novelty_independent",
      [](const std::string& p, const std::string& q) {
        return novelty_independent(parse(p), parse(q));
      },
      py::arg("formula"), py::arg("target"));

  // --- goals ----------------------------------------------------------------
  m.def(
      "completely_achieves",
      [](const std::vector<std::string>& theory, const std::string& goal, const std::string& pre,
         const std::string& post) {
        return completely_achieves(theory_from(theory), parse(goal),
                                   Action{"action", parse(pre), parse(post)});
      },
      py::arg("theory"), py::arg("goal"), py::arg("pre"), py::arg("post"));
  m.def(
      "partially_achieves",
      [](const std::string& kind, const std::vector<std::string>& theory, const std::string& goal,
         const std::string& pre, const std::string& post) {
        return partially_achieves(kind_from(kind), theory_from(theory), parse(goal),
                                  Action{"action", parse(pre), parse(post)});
      },
      py::arg("kind"), py::arg("theory"), py::arg("goal"), py::arg("pre"), py::arg("post"));
  m.def(
      "rank_actions",
      [](const std::vector<std::string>& theory, const std::string& goal,
         const std::vector<std::tuple<std::string, std::string, std::string>>& actions,
         const std::vector<std::string>& kinds) {
        std::set<EntailmentKind> counted;
        for (const std::string& name : kinds) counted.insert(kind_from(name));
        GoalReport report =
            rank_actions(theory_from(theory), parse(goal), actions_from(actions), counted);
        py::dict buckets;
        for (AchievementBucket b :
             {AchievementBucket::Complete, AchievementBucket::Strong, AchievementBucket::Plain,
              AchievementBucket::Weak, AchievementBucket::None}) {
          buckets[to_string(b).c_str()] = report.bucket(b);
        }
        py::list assessments;
        for (const ActionAssessment& a : report.assessments) {
          py::dict row;
          row["label"] = a.label;
          row["applicable"] = a.applicable;
          row["post_consistent"] = a.post_consistent;
          row["complete"] = a.complete;
          row["weak"] = a.weak;
          row["plain"] = a.plain;
          row["strong"] = a.strong;
          assessments.append(row);
        }
        py::dict out;
        out["buckets"] = buckets;
        out["inapplicable"] = report.inapplicable;
        out["assessments"] = assessments;
        return out;
      },
      py::arg("theory"), py::arg("goal"), py::arg("actions"),
      py::arg("kinds") = std::vector<std::string>{"weak", "plain", "strong"},
      "Bucket actions by the strongest relation their effect achieves.");
  m.def(
      "parse_scenario",
      [](const std::string& text) {
        Scenario s = parse_scenario(text);
        py::dict out;
        std::vector<std::string> beliefs;
        for (const Formula& f : s.beliefs.members()) beliefs.push_back(f.to_string());
        out["beliefs"] = beliefs;
        out["goal"] = s.goal.to_string();
        py::list actions;
        for (const Action& a : s.actions) {
          actions.append(py::make_tuple(a.label, a.pre.to_string(), a.post.to_string()));
        }
        out["actions"] = actions;
        return out;
      },
      py::arg("text"));
}
