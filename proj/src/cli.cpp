#include "pentail/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pentail/formula.hpp"
#include "pentail/goal_reasoning.hpp"
#include "pentail/inference_rules.hpp"
#include "pentail/partial_entailment.hpp"
#include "pentail/prime_implicants.hpp"
#include "pentail/relevance.hpp"
#include "pentail/semantics.hpp"

namespace pentail::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  std::string theory_file;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// One formula per line; '#' starts a comment; blank lines are skipped.
Theory parse_theory_text(std::string_view text, const std::string& origin) {
  Theory theory;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line =
        text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_number;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    try {
      theory = theory.extended(parse(line));
    } catch (const ParseError& e) {
      throw ParseError(origin + " line " + std::to_string(line_number) + ": " + e.what(),
                       e.position());
    }
  }
  return theory;
}

Theory load_theory(const Options& opt) {
  Theory theory;
  if (!opt.theory_file.empty()) {
    theory = parse_theory_text(read_file(opt.theory_file), opt.theory_file);
  }
  return theory;
}

bool json_mode(const Options& opt) { return opt.format == "json"; }

json literal_set_json(const LiteralSet& set) {
  json out = json::array();
  for (const Literal& l : set.literals()) out.push_back(l.to_string());
  return out;
}

json atom_list_json(const std::vector<AtomId>& atoms) {
  json out = json::array();
  for (const AtomId& a : atoms) out.push_back(a.name());
  return out;
}

void emit(std::ostream& out, const json& value) { out << value.dump(2) << "\n"; }

// Atom sets arrive in literal-set syntax, e.g. "{x, y}"; polarities make no
// sense here, so negative literals are rejected.
std::vector<AtomId> parse_atom_set(const std::string& text) {
  LiteralSet set = parse_literal_set(text);
  std::vector<AtomId> out;
  out.reserve(set.size());
  for (const Literal& l : set.literals()) {
    if (!l.is_positive()) {
      throw std::invalid_argument("atom set must list bare atoms, got '" + l.to_string() + "'");
    }
    out.push_back(l.atom());
  }
  return out;
}

EntailmentKind parse_kind(const std::string& name) {
  std::optional<EntailmentKind> kind = entailment_kind_from(name);
  if (!kind) {
    throw std::invalid_argument("unknown relation kind '" + name +
                                "' (expected weak, plain, or strong)");
  }
  return *kind;
}

// Yes/no verdict subcommands share this exit-code convention.
int verdict_exit(bool positive) { return positive ? 0 : 1; }

std::string yn(bool b) { return b ? "yes" : "no"; }

int run_pi(const Options& opt, const std::string& formula_text, std::ostream& out) {
  Theory gamma = load_theory(opt);
  PrimeImplicantSet set = prime_implicants(gamma, parse(formula_text));
  if (json_mode(opt)) {
    json cells = json::array();
    for (const LiteralSet& pi : set.implicants()) cells.push_back(literal_set_json(pi));
    emit(out, json{{"implicants", cells},
                   {"count", set.size()},
                   {"theory_atoms", atom_list_json(set.theory_atoms())},
                   {"formula_atoms", atom_list_json(set.formula_atoms())}});
  } else if (set.empty()) {
    out << "(none)\n";
  } else {
    out << set.to_text();
  }
  return 0;
}

int run_check(const Options& opt, const std::string& kind_name, const std::string& p_text,
              const std::string& q_text, std::ostream& out) {
  Theory gamma = load_theory(opt);
  Verdict verdict = partially_entails(parse_kind(kind_name), gamma, parse(p_text), parse(q_text));
  if (json_mode(opt)) {
    json body{{"holds", verdict.holds}, {"reason", to_string(verdict.reason)}};
    if (verdict.witness_or_refuter) {
      body["refuter"] = literal_set_json(*verdict.witness_or_refuter);
    }
    emit(out, body);
  } else if (verdict.holds) {
    out << "HOLDS\n";
  } else {
    out << "FAILS (reason=" << to_string(verdict.reason);
    if (verdict.witness_or_refuter) out << ", refuter=" << verdict.witness_or_refuter->to_string();
    out << ")\n";
  }
  return verdict_exit(verdict.holds);
}

int run_trivial(const Options& opt, const std::string& p_text, std::ostream& out) {
  bool trivial = is_trivial(load_theory(opt), parse(p_text));
  if (json_mode(opt)) {
    emit(out, json{{"trivial", trivial}});
  } else {
    out << (trivial ? "trivial\n" : "nontrivial\n");
  }
  return verdict_exit(trivial);
}

int run_rules(const Options& opt, std::size_t samples, std::uint64_t seed, std::ostream& out) {
  RulesReport report = table2_report(samples, seed);
  if (json_mode(opt)) {
    json cells = json::array();
    for (const RuleVerdict& cell : report.cells) {
      json body{{"rule", to_string(cell.rule)},
                {"kind", to_string(cell.kind)},
                {"expected", cell.expected},
                {"confirmed", cell.confirmed},
                {"extension", rule_is_extension(cell.rule)}};
      if (cell.counterexample) body["counterexample"] = cell.counterexample->to_string();
      cells.push_back(std::move(body));
    }
    emit(out, json{{"samples_per_cell", report.samples_per_cell},
                   {"seed", report.seed},
                   {"all_confirmed", report.all_confirmed()},
                   {"cells", cells}});
  } else {
    out << report.to_text();
  }
  return verdict_exit(report.all_confirmed());
}

int run_independent(const Options& opt, const std::string& p_text,
                    const std::string& atom_set_text, std::ostream& out) {
  bool independent = variable_independent(parse(p_text), parse_atom_set(atom_set_text));
  if (json_mode(opt)) {
    emit(out, json{{"independent", independent}});
  } else {
    out << (independent ? "independent\n" : "dependent\n");
  }
  return verdict_exit(independent);
}

int run_strict_relevant(const Options& opt, const std::string& p_text,
                        const std::string& atom_set_text, std::ostream& out) {
  bool relevant = strictly_relevant(parse(p_text), parse_atom_set(atom_set_text));
  if (json_mode(opt)) {
    emit(out, json{{"strictly_relevant", relevant}});
  } else {
    out << (relevant ? "strictly relevant\n" : "not strictly relevant\n");
  }
  return verdict_exit(relevant);
}

int run_relevant(const Options& opt, const std::string& p_text, const std::string& q_text,
                 std::ostream& out) {
  bool relevant = relevant_formulas(load_theory(opt), parse(p_text), parse(q_text));
  if (json_mode(opt)) {
    emit(out, json{{"relevant", relevant}});
  } else {
    out << (relevant ? "relevant\n" : "irrelevant\n");
  }
  return verdict_exit(relevant);
}

int run_novelty(const Options& opt, const std::string& p_text, const std::string& q_text,
                std::ostream& out) {
  NoveltyReport report = novelty(load_theory(opt), parse(p_text), parse(q_text));
  if (json_mode(opt)) {
    emit(out, json{{"new_positive", report.new_positive}, {"new_negative", report.new_negative}});
  } else {
    out << "new positive: " << yn(report.new_positive) << "\n";
    out << "new negative: " << yn(report.new_negative) << "\n";
  }
  return verdict_exit(report.new_positive || report.new_negative);
}

std::set<EntailmentKind> parse_kinds_list(const std::string& csv) {
  std::set<EntailmentKind> kinds;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string item(trim(csv.substr(
        start, comma == std::string::npos ? csv.size() - start : comma - start)));
    start = comma == std::string::npos ? csv.size() + 1 : comma + 1;
    if (item.empty()) continue;
    kinds.insert(parse_kind(item));
  }
  if (kinds.empty()) {
    throw std::invalid_argument("--kinds needs at least one of weak, plain, strong");
  }
  return kinds;
}

void append_labels(std::string& row, const std::vector<std::string>& labels) {
  if (labels.empty()) {
    row += "(none)";
    return;
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) row += ", ";
    row += labels[i];
  }
}

int run_goal(const Options& opt, const std::string& scenario_file, const std::string& kinds_csv,
             std::ostream& out) {
  Scenario scenario = parse_scenario(read_file(scenario_file));
  GoalReport report =
      rank_actions(scenario.beliefs, scenario.goal, scenario.actions, parse_kinds_list(kinds_csv));

  if (json_mode(opt)) {
    json buckets;
    for (AchievementBucket b :
         {AchievementBucket::Complete, AchievementBucket::Strong, AchievementBucket::Plain,
          AchievementBucket::Weak, AchievementBucket::None}) {
      json labels = json::array();
      for (const std::string& label : report.bucket(b)) labels.push_back(label);
      buckets[to_string(b)] = std::move(labels);
    }
    json inapplicable = json::array();
    for (const std::string& label : report.inapplicable) inapplicable.push_back(label);
    json assessments = json::array();
    for (const ActionAssessment& a : report.assessments) {
      assessments.push_back(json{{"label", a.label},
                                 {"applicable", a.applicable},
                                 {"post_consistent", a.post_consistent},
                                 {"complete", a.complete},
                                 {"weak", a.weak},
                                 {"plain", a.plain},
                                 {"strong", a.strong}});
    }
    emit(out, json{{"buckets", buckets},
                   {"inapplicable", inapplicable},
                   {"assessments", assessments}});
  } else {
    for (AchievementBucket b :
         {AchievementBucket::Complete, AchievementBucket::Strong, AchievementBucket::Plain,
          AchievementBucket::Weak, AchievementBucket::None}) {
      std::string row = to_string(b) + ": ";
      append_labels(row, report.bucket(b));
      out << row << "\n";
    }
    std::string row = "inapplicable: ";
    append_labels(row, report.inapplicable);
    out << row << "\n";
    for (const ActionAssessment& a : report.assessments) {
      out << a.label << ": applicable=" << yn(a.applicable)
          << " post_consistent=" << yn(a.post_consistent) << " complete=" << yn(a.complete)
          << " weak=" << yn(a.weak) << " plain=" << yn(a.plain) << " strong=" << yn(a.strong)
          << "\n";
    }
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;

  CLI::App app{"relativized prime implicants, partial entailment, and goal ranking"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--theory", opt.theory_file,
                 "file with one formula per line ('#' comments) read as the background theory");

  std::string formula_text, p_text, q_text, kind_name, scenario_file, atom_set_text;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  std::string kinds_csv = "weak,plain,strong";

  CLI::App* pi = app.add_subcommand("pi", "prime implicants of a formula under the theory");
  pi->add_option("formula", formula_text, "target formula")->required();

  CLI::App* check =
      app.add_subcommand("check", "decide a partial-entailment relation between two formulas");
  check->add_option("--kind", kind_name, "relation kind to decide")
      ->check(CLI::IsMember({"weak", "plain", "strong"}))
      ->required();
  check->add_option("antecedent", p_text, "antecedent formula")->required();
  check->add_option("consequent", q_text, "consequent formula")->required();

  CLI::App* trivial =
      app.add_subcommand("trivial", "is the formula decided either way by the theory?");
  trivial->add_option("formula", formula_text, "formula to test")->required();

  CLI::App* rules =
      app.add_subcommand("rules", "sweep the inference-rule table on random instances");
  rules->add_option("--samples", samples, "instances per rule/kind cell (min 100)")
      ->capture_default_str();
  rules->add_option("--seed", seed, "sweep seed")->capture_default_str();

  CLI::App* independent =
      app.add_subcommand("independent", "is the formula expressible without the given atoms?");
  independent->add_option("formula", formula_text, "formula to test")->required();
  independent->add_option("atoms", atom_set_text, "atom set, e.g. \"{x, y}\"")->required();

  CLI::App* strict =
      app.add_subcommand("strict-relevant", "is the formula strictly relevant to the atoms?");
  strict->add_option("formula", formula_text, "formula to test")->required();
  strict->add_option("atoms", atom_set_text, "atom set, e.g. \"{x, y}\"")->required();

  CLI::App* relevant =
      app.add_subcommand("relevant", "do the formulas share implicant literals under the theory?");
  relevant->add_option("first", p_text, "first formula")->required();
  relevant->add_option("second", q_text, "second formula")->required();

  CLI::App* novelty =
      app.add_subcommand("novelty", "does the first formula add implicants for the second?");
  novelty->add_option("formula", p_text, "formula being added")->required();
  novelty->add_option("target", q_text, "formula whose implicants are compared")->required();

  CLI::App* goal = app.add_subcommand("goal", "rank a scenario's actions against its goal");
  goal->add_option("scenario", scenario_file, "scenario file")->required();
  goal->add_option("--kinds", kinds_csv, "comma-separated relation kinds that count for ranking")
      ->capture_default_str();

  for (CLI::App* sub : {pi, check, trivial, rules, independent, strict, relevant, novelty, goal}) {
    sub->fallthrough();
  }

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("pentail");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (pi->parsed()) return run_pi(opt, formula_text, out);
    if (check->parsed()) return run_check(opt, kind_name, p_text, q_text, out);
    if (trivial->parsed()) return run_trivial(opt, formula_text, out);
    if (rules->parsed()) return run_rules(opt, samples, seed, out);
    if (independent->parsed()) return run_independent(opt, formula_text, atom_set_text, out);
    if (strict->parsed()) return run_strict_relevant(opt, formula_text, atom_set_text, out);
    if (relevant->parsed()) return run_relevant(opt, p_text, q_text, out);
    if (novelty->parsed()) return run_novelty(opt, p_text, q_text, out);
    if (goal->parsed()) return run_goal(opt, scenario_file, kinds_csv, out);
    err << "usage error: no subcommand\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pentail::cli
