"""Propositional partial-entailment toolkit.

String-based bindings over the C++ core: formulas go in and come out as text
in the CLI grammar (atoms ``[a-z][A-Za-z0-9_]*``, operators ``!``, ``&``,
``|``, ``->``, ``<->``), theories as lists of formula strings, and literal
sets as lists like ``["x", "!y"]``.
"""

from ._core import (
    abductive_explanations,
    atoms,
    clause_relation_report,
    completely_achieves,
    condition,
    entails,
    is_consistent,
    is_prime_implicant,
    is_trivial,
    literal_in_all_pi,
    literal_in_some_pi,
    literal_set_relation,
    novelty,
    novelty_independent,
    parse_print,
    parse_scenario,
    partially_achieves,
    partially_entails,
    prime_implicants,
    rank_actions,
    relevant_formulas,
    rule_table_report,
    strictly_relevant,
    substitute,
    theories_equivalent,
    variable_independent,
)

__all__ = [
    "abductive_explanations",
    "atoms",
    "clause_relation_report",
    "completely_achieves",
    "condition",
    "entails",
    "is_consistent",
    "is_prime_implicant",
    "is_trivial",
    "literal_in_all_pi",
    "literal_in_some_pi",
    "literal_set_relation",
    "novelty",
    "novelty_independent",
    "parse_print",
    "parse_scenario",
    "partially_achieves",
    "partially_entails",
    "prime_implicants",
    "rank_actions",
    "relevant_formulas",
    "rule_table_report",
    "strictly_relevant",
    "substitute",
    "theories_equivalent",
    "variable_independent",
]
