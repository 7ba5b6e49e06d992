"""Input-language AST, parser, and variable-scoping operations."""

from .ast import (
    Atom,
    BasicHead,
    BinOp,
    BinOpKind,
    BodyElement,
    ChoiceHead,
    Comparison,
    ConditionalLiteral,
    FalsityHead,
    Ground,
    GroundSymbol,
    Head,
    Infimum,
    Literal,
    Negate,
    Numeral,
    Polarity,
    Program,
    Relation,
    Rule,
    SimpleElement,
    Supremum,
    SymbolicConstant,
    Term,
    Variable,
    global_variables,
    has_conditional_literals,
    head_atom,
    local_variables,
    program_predicates,
    rule_variables,
    symbolic_constants,
    term_variables,
)
from .parser import parse_program, parse_rule

__all__ = [
    "Atom",
    "BasicHead",
    "BinOp",
    "BinOpKind",
    "BodyElement",
    "ChoiceHead",
    "Comparison",
    "ConditionalLiteral",
    "FalsityHead",
    "Ground",
    "GroundSymbol",
    "Head",
    "Infimum",
    "Literal",
    "Negate",
    "Numeral",
    "Polarity",
    "Program",
    "Relation",
    "Rule",
    "SimpleElement",
    "Supremum",
    "SymbolicConstant",
    "Term",
    "Variable",
    "global_variables",
    "has_conditional_literals",
    "head_atom",
    "local_variables",
    "parse_program",
    "parse_rule",
    "program_predicates",
    "rule_variables",
    "symbolic_constants",
    "term_variables",
]
