"""AST for the input logic-program language.

The fragment covers negation (including double negation), integer arithmetic
with `+ - * / \\`, intervals `..`, and singleton choice rules `{atom}`, plus
conditional literals in rule bodies.  Terms contain no function symbols;
predicate atoms are the only compound constructs.

Comparisons are allowed as conditional-literal heads.  The surface language
does not fix this either way; we accept it and note it here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Union


# ---------------------------------------------------------------------------
# ground symbols and terms


class GroundSymbol:
    """Base class for precomputed symbols: numerals, constants, #inf, #sup."""

    __slots__ = ()


@dataclass(frozen=True)
class Numeral(GroundSymbol):
    value: int

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class SymbolicConstant(GroundSymbol):
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Infimum(GroundSymbol):
    def __str__(self) -> str:
        return "#inf"


@dataclass(frozen=True)
class Supremum(GroundSymbol):
    def __str__(self) -> str:
        return "#sup"


class BinOpKind(enum.Enum):
    PLUS = "+"
    MINUS = "-"
    TIMES = "*"
    DIVIDE = "/"
    MODULO = "\\"
    INTERVAL = ".."


# precedence levels for parsing and printing; higher binds tighter
_TERM_PREC = {
    BinOpKind.INTERVAL: 1,
    BinOpKind.PLUS: 2,
    BinOpKind.MINUS: 2,
    BinOpKind.TIMES: 3,
    BinOpKind.DIVIDE: 3,
    BinOpKind.MODULO: 3,
}
_NEGATE_PREC = 4
_PRIMARY_PREC = 5


class Term:
    """Base class for program terms."""

    __slots__ = ()

    def __str__(self) -> str:
        return term_to_str(self)


@dataclass(frozen=True)
class Ground(Term):
    symbol: GroundSymbol


@dataclass(frozen=True)
class Variable(Term):
    name: str


@dataclass(frozen=True)
class BinOp(Term):
    op: BinOpKind
    left: Term
    right: Term


@dataclass(frozen=True)
class Negate(Term):
    # parser folds unary minus on a numeral into the numeral itself,
    # so Negate never wraps a bare Numeral
    operand: Term


def term_to_str(t: Term, min_prec: int = 0) -> str:
    match t:
        case Ground(symbol):
            return str(symbol)
        case Variable(name):
            return name
        case Negate(operand):
            s = "-" + term_to_str(operand, _PRIMARY_PREC)
            return f"({s})" if _NEGATE_PREC < min_prec else s
        case BinOp(op, left, right):
            prec = _TERM_PREC[op]
            s = f"{term_to_str(left, prec)}{op.value}{term_to_str(right, prec + 1)}"
            return f"({s})" if prec < min_prec else s
    raise TypeError(f"not a term: {t!r}")


def term_variables(t: Term) -> Iterator[str]:
    """Yield variable names in t, left to right, with repetitions."""
    match t:
        case Ground(_):
            return
        case Variable(name):
            yield name
        case Negate(operand):
            yield from term_variables(operand)
        case BinOp(_, left, right):
            yield from term_variables(left)
            yield from term_variables(right)


# ---------------------------------------------------------------------------
# atoms, literals, comparisons


@dataclass(frozen=True)
class Atom:
    predicate: str
    args: tuple[Term, ...] = ()

    @property
    def arity(self) -> int:
        return len(self.args)

    def __str__(self) -> str:
        if not self.args:
            return self.predicate
        return f"{self.predicate}({', '.join(map(str, self.args))})"


class Polarity(enum.Enum):
    POSITIVE = ""
    NEGATED = "not "
    DOUBLY_NEGATED = "not not "


@dataclass(frozen=True)
class Literal:
    polarity: Polarity
    atom: Atom

    def __str__(self) -> str:
        return f"{self.polarity.value}{self.atom}"


class Relation(enum.Enum):
    EQ = "="
    NEQ = "!="
    LT = "<"
    LEQ = "<="
    GT = ">"
    GEQ = ">="


@dataclass(frozen=True)
class Comparison:
    relation: Relation
    lhs: Term
    rhs: Term

    def __str__(self) -> str:
        return f"{self.lhs} {self.relation.value} {self.rhs}"


SimpleElement = Union[Literal, Comparison]


@dataclass(frozen=True)
class ConditionalLiteral:
    """`head : cond1, ..., condn` — only valid inside rule bodies."""

    head: SimpleElement
    conditions: tuple[SimpleElement, ...]

    def __post_init__(self):
        if not self.conditions:
            raise ValueError("conditional literal requires at least one condition")

    def __str__(self) -> str:
        return f"{self.head} : {', '.join(map(str, self.conditions))}"


BodyElement = Union[Literal, Comparison, ConditionalLiteral]


# ---------------------------------------------------------------------------
# rules and programs


class Head:
    __slots__ = ()


@dataclass(frozen=True)
class BasicHead(Head):
    atom: Atom

    def __str__(self) -> str:
        return str(self.atom)


@dataclass(frozen=True)
class ChoiceHead(Head):
    atom: Atom

    def __str__(self) -> str:
        return f"{{{self.atom}}}"


@dataclass(frozen=True)
class FalsityHead(Head):
    def __str__(self) -> str:
        return ""


@dataclass(frozen=True)
class Rule:
    head: Head
    body: tuple[BodyElement, ...] = ()

    @property
    def is_constraint(self) -> bool:
        return isinstance(self.head, FalsityHead)

    def __str__(self) -> str:
        # a conditional literal's condition list is only terminated by `;`,
        # so bodies containing one must use `;` between all elements
        sep = "; " if any(isinstance(e, ConditionalLiteral) for e in self.body) else ", "
        body = sep.join(map(str, self.body))
        if self.is_constraint:
            return f":- {body}."
        if not self.body:
            return f"{self.head}."
        return f"{self.head} :- {body}."


@dataclass(frozen=True)
class Program:
    rules: tuple[Rule, ...] = ()

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __str__(self) -> str:
        return "\n".join(map(str, self.rules))


# ---------------------------------------------------------------------------
# variable scoping


def _atom_variables(a: Atom) -> Iterator[str]:
    for t in a.args:
        yield from term_variables(t)


def _simple_variables(e: SimpleElement) -> Iterator[str]:
    match e:
        case Literal(_, atom):
            yield from _atom_variables(atom)
        case Comparison(_, lhs, rhs):
            yield from term_variables(lhs)
            yield from term_variables(rhs)


def _element_variables(e: BodyElement) -> Iterator[str]:
    if isinstance(e, ConditionalLiteral):
        yield from _simple_variables(e.head)
        for c in e.conditions:
            yield from _simple_variables(c)
    else:
        yield from _simple_variables(e)


def _head_variables(h: Head) -> Iterator[str]:
    match h:
        case BasicHead(atom) | ChoiceHead(atom):
            yield from _atom_variables(atom)
        case FalsityHead():
            return


def rule_variables(rule: Rule) -> list[str]:
    """All variable names of the rule in first-occurrence order."""
    seen: dict[str, None] = {}
    for v in _head_variables(rule.head):
        seen.setdefault(v)
    for e in rule.body:
        for v in _element_variables(e):
            seen.setdefault(v)
    return list(seen)


def global_variables(rule: Rule) -> list[str]:
    """Variables that are global in the rule, in first-occurrence order.

    A variable is global when it occurs in the head, in a plain body element,
    or in the head of a conditional literal while also occurring somewhere
    outside that conditional literal.
    """
    plain: set[str] = set(_head_variables(rule.head))
    for e in rule.body:
        if not isinstance(e, ConditionalLiteral):
            plain.update(_simple_variables(e))

    global_set = set(plain)
    for i, e in enumerate(rule.body):
        if not isinstance(e, ConditionalLiteral):
            continue
        outside = set(plain)
        for j, other in enumerate(rule.body):
            if j != i and isinstance(other, ConditionalLiteral):
                outside.update(_element_variables(other))
        for v in _simple_variables(e.head):
            if v in outside:
                global_set.add(v)

    return [v for v in rule_variables(rule) if v in global_set]


def local_variables(cl: ConditionalLiteral, rule: Rule) -> list[str]:
    """Variables of cl that are not global in rule, in cl-occurrence order."""
    globals_ = set(global_variables(rule))
    seen: dict[str, None] = {}
    for v in _element_variables(cl):
        if v not in globals_:
            seen.setdefault(v)
    return list(seen)


# ---------------------------------------------------------------------------
# program inventories


def head_atom(rule: Rule) -> Atom | None:
    match rule.head:
        case BasicHead(atom) | ChoiceHead(atom):
            return atom
    return None


def program_predicates(program: Program) -> list[tuple[str, int]]:
    """Every predicate/arity of the program, in first-occurrence order."""
    seen: dict[tuple[str, int], None] = {}

    def visit_simple(e: SimpleElement) -> None:
        if isinstance(e, Literal):
            seen.setdefault((e.atom.predicate, e.atom.arity))

    for rule in program:
        atom = head_atom(rule)
        if atom is not None:
            seen.setdefault((atom.predicate, atom.arity))
        for e in rule.body:
            if isinstance(e, ConditionalLiteral):
                visit_simple(e.head)
                for c in e.conditions:
                    visit_simple(c)
            else:
                visit_simple(e)
    return list(seen)


def symbolic_constants(program: Program) -> list[str]:
    """Every symbolic constant of the program, in first-occurrence order."""
    seen: dict[str, None] = {}

    def visit_term(t: Term) -> None:
        match t:
            case Ground(SymbolicConstant(name)):
                seen.setdefault(name)
            case BinOp(_, left, right):
                visit_term(left)
                visit_term(right)
            case Negate(operand):
                visit_term(operand)

    def visit_simple(e: SimpleElement) -> None:
        match e:
            case Literal(_, atom):
                for t in atom.args:
                    visit_term(t)
            case Comparison(_, lhs, rhs):
                visit_term(lhs)
                visit_term(rhs)

    for rule in program:
        atom = head_atom(rule)
        if atom is not None:
            for t in atom.args:
                visit_term(t)
        for e in rule.body:
            if isinstance(e, ConditionalLiteral):
                visit_simple(e.head)
                for c in e.conditions:
                    visit_simple(c)
            else:
                visit_simple(e)
    return list(seen)


def has_conditional_literals(program: Program) -> bool:
    return any(
        isinstance(e, ConditionalLiteral) for rule in program for e in rule.body
    )
