#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "pentail/formula.hpp"
#include "pentail/inference_rules.hpp"
#include "pentail/partial_entailment.hpp"
#include "pentail/semantics.hpp"

using namespace pentail;

namespace {

RuleInstance instance(EntailmentKind kind) {
  RuleInstance inst;
  inst.kind = kind;
  return inst;
}

constexpr EntailmentKind kKinds[] = {EntailmentKind::Weak, EntailmentKind::Plain,
                                     EntailmentKind::Strong};

}  // namespace

TEST_CASE("rule metadata") {
  CHECK(to_string(RuleId::Ref) == "REF");
  CHECK(to_string(RuleId::Mono) == "MONO");
  CHECK(to_string(RuleId::CP) == "CP");
  CHECK(rule_is_extension(RuleId::CP));
  for (RuleId rule : kAllRules) {
    if (rule != RuleId::CP) CHECK_FALSE(rule_is_extension(rule));
  }
}

TEST_CASE("expected table cells") {
  const RuleId all_yes[] = {RuleId::Ref, RuleId::LE, RuleId::RE, RuleId::BE, RuleId::Rev};
  for (RuleId rule : all_yes) {
    for (EntailmentKind kind : kKinds) CHECK(rule_expected(rule, kind));
  }
  CHECK_FALSE(rule_expected(RuleId::Tran, EntailmentKind::Weak));
  CHECK_FALSE(rule_expected(RuleId::Tran, EntailmentKind::Plain));
  CHECK(rule_expected(RuleId::Tran, EntailmentKind::Strong));
  CHECK(rule_expected(RuleId::LS, EntailmentKind::Weak));
  CHECK_FALSE(rule_expected(RuleId::LS, EntailmentKind::Plain));
  CHECK_FALSE(rule_expected(RuleId::LS, EntailmentKind::Strong));
  const RuleId all_no[] = {RuleId::As, RuleId::LO, RuleId::RA,
                           RuleId::RO, RuleId::Mono, RuleId::LN,
                           RuleId::RN, RuleId::CP};
  for (RuleId rule : all_no) {
    for (EntailmentKind kind : kKinds) CHECK_FALSE(rule_expected(rule, kind));
  }
}

TEST_CASE("published counterexamples violate their rules") {
  // Transitivity, weak and plain: x vs x∧y vs y.
  for (EntailmentKind kind : {EntailmentKind::Weak, EntailmentKind::Plain}) {
    RuleInstance tran = instance(kind);
    tran.p = parse("x");
    tran.q = parse("x & y");
    tran.r = parse("y");
    CHECK_FALSE(check_rule_instance(RuleId::Tran, tran));
  }

  // Left strengthening, plain and strong: P = x∧¬y entails R = x, R relates to x∧y.
  for (EntailmentKind kind : {EntailmentKind::Plain, EntailmentKind::Strong}) {
    RuleInstance ls = instance(kind);
    ls.p = parse("x & !y");
    ls.r = parse("x");
    ls.q = parse("x & y");
    CHECK_FALSE(check_rule_instance(RuleId::LS, ls));
  }

  // Left and right negation, all kinds: x against x↔y.
  for (EntailmentKind kind : kKinds) {
    RuleInstance ln = instance(kind);
    ln.p = parse("x");
    ln.q = parse("x <-> y");
    CHECK_FALSE(check_rule_instance(RuleId::LN, ln));
    RuleInstance rn = instance(kind);
    rn.p = parse("x");
    rn.q = parse("x <-> y");
    CHECK_FALSE(check_rule_instance(RuleId::RN, rn));
  }
}

TEST_CASE("hand-picked violations exist for the searched cells") {
  for (EntailmentKind kind : kKinds) {
    RuleInstance as = instance(kind);
    as.p = parse("x");
    as.q = parse("x & !y");
    as.from_atom = AtomId("x");
    as.to_atom = AtomId("y");
    CHECK_FALSE(check_rule_instance(RuleId::As, as));

    RuleInstance mono = instance(kind);
    mono.gamma_prime = Theory({parse("y -> x")});
    mono.p = parse("x");
    mono.q = parse("x & !y");
    CHECK_FALSE(check_rule_instance(RuleId::Mono, mono));

    RuleInstance cp = instance(kind);
    cp.p = parse("x");
    cp.q = parse("x & y");
    CHECK_FALSE(check_rule_instance(RuleId::CP, cp));
  }

  RuleInstance lo = instance(EntailmentKind::Weak);
  lo.p = parse("x");
  lo.r = parse("!x");
  lo.q = parse("x <-> y");
  CHECK_FALSE(check_rule_instance(RuleId::LO, lo));

  RuleInstance ra = instance(EntailmentKind::Weak);
  ra.p = parse("x");
  ra.q = parse("x <-> y");
  ra.r = parse("x <-> !y");
  CHECK_FALSE(check_rule_instance(RuleId::RA, ra));

  RuleInstance ro = instance(EntailmentKind::Strong);
  ro.p = parse("x");
  ro.q = parse("x & y");
  ro.r = parse("!x");
  CHECK_FALSE(check_rule_instance(RuleId::RO, ro));
}

TEST_CASE("holding instances check out") {
  RuleInstance ref = instance(EntailmentKind::Strong);
  ref.p = parse("x | y");
  CHECK(check_rule_instance(RuleId::Ref, ref));

  RuleInstance tran = instance(EntailmentKind::Strong);
  tran.p = parse("x");
  tran.q = parse("x & y");
  tran.r = parse("x & y & z");
  CHECK(check_rule_instance(RuleId::Tran, tran));

  RuleInstance le = instance(EntailmentKind::Plain);
  le.p = parse("x");
  le.r = parse("!!x");
  le.q = parse("x & y");
  CHECK(check_rule_instance(RuleId::LE, le));

  RuleInstance be = instance(EntailmentKind::Weak);
  be.gamma = Theory({parse("x & y")});
  be.gamma_prime = Theory({parse("y"), parse("x")});
  be.p = parse("z");
  be.q = parse("z & w");
  CHECK(check_rule_instance(RuleId::BE, be));

  RuleInstance rev = instance(EntailmentKind::Weak);
  rev.p = parse("x");
  rev.q = parse("x & y");
  CHECK(check_rule_instance(RuleId::Rev, rev));
}

TEST_CASE("instances missing a slot are rejected") {
  RuleInstance bare = instance(EntailmentKind::Weak);
  CHECK_THROWS_AS(check_rule_instance(RuleId::Ref, bare), std::invalid_argument);

  RuleInstance no_r = instance(EntailmentKind::Weak);
  no_r.p = parse("x");
  no_r.q = parse("y");
  CHECK_THROWS_AS(check_rule_instance(RuleId::Tran, no_r), std::invalid_argument);
  CHECK_THROWS_AS(check_rule_instance(RuleId::As, no_r), std::invalid_argument);
  CHECK_THROWS_AS(check_rule_instance(RuleId::BE, no_r), std::invalid_argument);
  CHECK_THROWS_AS(check_rule_instance(RuleId::Mono, no_r), std::invalid_argument);

  RuleInstance bad_rev = instance(EntailmentKind::Weak);
  bad_rev.gamma = Theory({parse("z")});
  bad_rev.p = parse("x");
  bad_rev.q = parse("x & y");
  CHECK_THROWS_AS(check_rule_instance(RuleId::Rev, bad_rev), std::invalid_argument);
}

TEST_CASE("relevance of the antecedent to the consequent on holding pairs") {
  // Whenever a kind holds over the empty theory, the two formulas share atoms.
  for (RuleId rule : {RuleId::LN, RuleId::Tran, RuleId::RO}) {
    for (EntailmentKind kind : kKinds) {
      for (const RuleInstance& inst : generate_instances(rule, kind, 40, 99)) {
        if (!inst.p || !inst.q || !inst.gamma.empty()) continue;
        if (!partially_entails(kind, Theory(), *inst.p, *inst.q).holds) continue;
        RuleInstance rev = instance(kind);
        rev.p = inst.p;
        rev.q = inst.q;
        CHECK(check_rule_instance(RuleId::Rev, rev));
      }
    }
  }
}

TEST_CASE("instance generation is deterministic and well-formed") {
  for (RuleId rule : kAllRules) {
    const auto first = generate_instances(rule, EntailmentKind::Plain, 25, 4242);
    const auto second = generate_instances(rule, EntailmentKind::Plain, 25, 4242);
    REQUIRE(first.size() == 25);
    REQUIRE(second.size() == 25);
    for (std::size_t i = 0; i < first.size(); ++i) {
      CHECK(first[i].to_string() == second[i].to_string());
      // Every generated instance is checkable without throwing.
      (void)check_rule_instance(rule, first[i]);
    }
    const auto other_seed = generate_instances(rule, EntailmentKind::Plain, 25, 4243);
    bool any_difference = false;
    for (std::size_t i = 0; i < first.size(); ++i) {
      if (first[i].to_string() != other_seed[i].to_string()) any_difference = true;
    }
    CHECK(any_difference);
  }
}

TEST_CASE("generated instances satisfy their structural contracts") {
  for (EntailmentKind kind : kKinds) {
    for (const RuleInstance& inst : generate_instances(RuleId::Rev, kind, 30, 7)) {
      CHECK(inst.gamma.empty());
    }
    for (const RuleInstance& inst : generate_instances(RuleId::BE, kind, 30, 7)) {
      REQUIRE(inst.gamma_prime.has_value());
      CHECK(theories_equivalent(inst.gamma, *inst.gamma_prime));
    }
    for (const RuleInstance& inst : generate_instances(RuleId::Mono, kind, 30, 7)) {
      REQUIRE(inst.gamma_prime.has_value());
      bool entails_all = true;
      for (const Formula& member : inst.gamma.members()) {
        if (!entails(*inst.gamma_prime, member)) entails_all = false;
      }
      CHECK(entails_all);
    }
    for (const RuleInstance& inst : generate_instances(RuleId::As, kind, 30, 7)) {
      CHECK(inst.from_atom.has_value());
      CHECK(inst.to_atom.has_value());
    }
    for (const RuleInstance& inst : generate_instances(RuleId::Ref, kind, 30, 7)) {
      CHECK_FALSE(is_trivial(inst.gamma, *inst.p));
    }
  }
}

TEST_CASE("the full table sweep reproduces every expected cell") {
  const RulesReport report = table2_report(120, 5);
  REQUIRE(report.cells.size() == 45);
  CHECK(report.samples_per_cell == 120);
  CHECK(report.seed == 5);
  CHECK(report.all_confirmed());
  for (const RuleVerdict& cell : report.cells) {
    CHECK(cell.confirmed);
    CHECK(cell.counterexample.has_value() == !cell.expected);
    if (cell.counterexample) {
      // Counterexamples must be independently re-checkable violations.
      CHECK_FALSE(check_rule_instance(cell.rule, *cell.counterexample));
      CHECK(cell.counterexample->kind == cell.kind);
    }
  }
  const std::string text = report.to_text();
  CHECK(text.find("REF") != std::string::npos);
  CHECK(text.find("CP") != std::string::npos);
  CHECK(text.find("falsification") != std::string::npos);

  CHECK_THROWS_AS(table2_report(99, 5), std::invalid_argument);
}

TEST_CASE("report rendering marks unconfirmed cells") {
  RulesReport report;
  report.samples_per_cell = 100;
  report.seed = 1;
  for (RuleId rule : kAllRules) {
    for (EntailmentKind kind : kKinds) {
      report.cells.push_back(RuleVerdict{rule, kind, rule_expected(rule, kind),
                                         /*confirmed=*/true, std::nullopt});
    }
  }
  CHECK(report.all_confirmed());
  report.cells.front().confirmed = false;
  CHECK(report.all_confirmed() == false);
  CHECK(report.to_text().find("(?)") != std::string::npos);
}
