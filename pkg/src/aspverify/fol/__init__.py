"""Two-sorted first-order formula core and its surface-syntax parser."""

from .core import (
    And,
    Atom,
    Compare,
    Exists,
    Falsity,
    FoTerm,
    ForAll,
    Formula,
    Iff,
    Implies,
    Inf,
    IntConst,
    IntOp,
    IntOpKind,
    Or,
    Placeholder,
    Rel,
    Sort,
    Sup,
    SymConst,
    Theory,
    Truth,
    Var,
    alpha_equivalent,
    atoms,
    conj,
    disj,
    exists,
    forall,
    formula_to_str,
    free_variables,
    fresh_name,
    is_negation,
    is_subsort,
    map_atoms,
    map_terms,
    neg,
    node_count,
    predicates,
    rename_predicates,
    substitute,
    substitute_term,
    term_sort,
    term_to_str,
    term_variables,
    universal_closure,
)
from .parser import parse_formula, parse_formulas

__all__ = [
    "And",
    "Atom",
    "Compare",
    "Exists",
    "Falsity",
    "FoTerm",
    "ForAll",
    "Formula",
    "Iff",
    "Implies",
    "Inf",
    "IntConst",
    "IntOp",
    "IntOpKind",
    "Or",
    "Placeholder",
    "Rel",
    "Sort",
    "Sup",
    "SymConst",
    "Theory",
    "Truth",
    "Var",
    "alpha_equivalent",
    "atoms",
    "conj",
    "disj",
    "exists",
    "forall",
    "formula_to_str",
    "free_variables",
    "fresh_name",
    "is_negation",
    "is_subsort",
    "map_atoms",
    "map_terms",
    "neg",
    "node_count",
    "parse_formula",
    "parse_formulas",
    "predicates",
    "rename_predicates",
    "substitute",
    "substitute_term",
    "term_sort",
    "term_to_str",
    "term_variables",
    "universal_closure",
]
