"""Two-sorted first-order formulas: the target language of the translation.

The general sort carries every program value; the integer sort is a subsort
of it, so an integer-sorted term may stand in any general position.  Negation
has no node of its own: `not F` is notation for `F -> #false`, kept canonical
so the here-and-there machinery only ever treats implication specially.

`and`/`or` are n-ary with `and([]) = #true` and `or([]) = #false`, which keeps
completion disjunctions uniform.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterator

from ..errors import SortError


class Sort(enum.Enum):
    GENERAL = "general"
    INTEGER = "integer"


def is_subsort(sub: Sort, sup: Sort) -> bool:
    return sub == sup or (sub == Sort.INTEGER and sup == Sort.GENERAL)


# ---------------------------------------------------------------------------
# terms


class FoTerm:
    __slots__ = ()

    def __str__(self) -> str:
        return term_to_str(self)


@dataclass(frozen=True)
class Var(FoTerm):
    name: str
    sort: Sort = Sort.GENERAL


@dataclass(frozen=True)
class IntConst(FoTerm):
    value: int


@dataclass(frozen=True)
class SymConst(FoTerm):
    name: str


@dataclass(frozen=True)
class Inf(FoTerm):
    pass


@dataclass(frozen=True)
class Sup(FoTerm):
    pass


@dataclass(frozen=True)
class Placeholder(FoTerm):
    """Nullary uninterpreted constant standing for externally supplied data."""

    name: str
    sort: Sort = Sort.GENERAL


class IntOpKind(enum.Enum):
    PLUS = "+"
    MINUS = "-"
    TIMES = "*"


@dataclass(frozen=True)
class IntOp(FoTerm):
    op: IntOpKind
    left: FoTerm
    right: FoTerm

    def __post_init__(self):
        for side in (self.left, self.right):
            if term_sort(side) != Sort.INTEGER:
                raise SortError(
                    f"arithmetic over a general-sorted term: {term_to_str(side)}"
                )


def term_sort(t: FoTerm) -> Sort:
    match t:
        case Var(_, sort) | Placeholder(_, sort):
            return sort
        case IntConst(_) | IntOp(_, _, _):
            return Sort.INTEGER
        case SymConst(_) | Inf() | Sup():
            return Sort.GENERAL
    raise TypeError(f"not a term: {t!r}")


_INT_PREC = {IntOpKind.PLUS: 1, IntOpKind.MINUS: 1, IntOpKind.TIMES: 2}


def term_to_str(t: FoTerm, min_prec: int = 0) -> str:
    match t:
        case Var(name, sort):
            return f"{name}$i" if sort == Sort.INTEGER else name
        case IntConst(value):
            return str(value)
        case SymConst(name):
            return name
        case Inf():
            return "#inf"
        case Sup():
            return "#sup"
        case Placeholder(name, _):
            return name
        case IntOp(op, left, right):
            prec = _INT_PREC[op]
            s = f"{term_to_str(left, prec)} {op.value} {term_to_str(right, prec + 1)}"
            return f"({s})" if prec < min_prec else s
    raise TypeError(f"not a term: {t!r}")


def term_variables(t: FoTerm) -> Iterator[Var]:
    match t:
        case Var(_, _):
            yield t
        case IntOp(_, left, right):
            yield from term_variables(left)
            yield from term_variables(right)
        case _:
            return


def substitute_term(t: FoTerm, var: Var, value: FoTerm) -> FoTerm:
    match t:
        case Var(_, _):
            return value if t == var else t
        case IntOp(op, left, right):
            return IntOp(
                op, substitute_term(left, var, value), substitute_term(right, var, value)
            )
        case _:
            return t


# ---------------------------------------------------------------------------
# formulas


class Formula:
    __slots__ = ()

    def __str__(self) -> str:
        return formula_to_str(self)


@dataclass(frozen=True)
class Atom(Formula):
    predicate: str
    args: tuple[FoTerm, ...] = ()

    @property
    def arity(self) -> int:
        return len(self.args)


class Rel(enum.Enum):
    EQ = "="
    NEQ = "!="
    LT = "<"
    LEQ = "<="
    GT = ">"
    GEQ = ">="


@dataclass(frozen=True)
class Compare(Formula):
    relation: Rel
    left: FoTerm
    right: FoTerm


@dataclass(frozen=True)
class Truth(Formula):
    pass


@dataclass(frozen=True)
class Falsity(Formula):
    pass


@dataclass(frozen=True)
class And(Formula):
    items: tuple[Formula, ...]


@dataclass(frozen=True)
class Or(Formula):
    items: tuple[Formula, ...]


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class ForAll(Formula):
    variables: tuple[Var, ...]
    body: Formula


@dataclass(frozen=True)
class Exists(Formula):
    variables: tuple[Var, ...]
    body: Formula


def neg(f: Formula) -> Formula:
    """not F, canonically F -> #false."""
    return Implies(f, Falsity())


def is_negation(f: Formula) -> bool:
    return isinstance(f, Implies) and isinstance(f.right, Falsity)


def conj(items) -> Formula:
    items = tuple(items)
    if not items:
        return Truth()
    if len(items) == 1:
        return items[0]
    return And(items)


def disj(items) -> Formula:
    items = tuple(items)
    if not items:
        return Falsity()
    if len(items) == 1:
        return items[0]
    return Or(items)


def forall(variables, body: Formula) -> Formula:
    variables = tuple(variables)
    return ForAll(variables, body) if variables else body


def exists(variables, body: Formula) -> Formula:
    variables = tuple(variables)
    return Exists(variables, body) if variables else body


# ---------------------------------------------------------------------------
# traversal


def free_variables(f: Formula) -> list[Var]:
    """Free variables in first-occurrence order."""
    out: dict[Var, None] = {}

    def walk(g: Formula, bound: frozenset[Var]) -> None:
        match g:
            case Atom(_, args):
                for t in args:
                    for v in term_variables(t):
                        if v not in bound:
                            out.setdefault(v)
            case Compare(_, left, right):
                for t in (left, right):
                    for v in term_variables(t):
                        if v not in bound:
                            out.setdefault(v)
            case Truth() | Falsity():
                pass
            case And(items) | Or(items):
                for item in items:
                    walk(item, bound)
            case Implies(left, right) | Iff(left, right):
                walk(left, bound)
                walk(right, bound)
            case ForAll(variables, body) | Exists(variables, body):
                walk(body, bound | frozenset(variables))

    walk(f, frozenset())
    return list(out)


def atoms(f: Formula) -> Iterator[Atom]:
    match f:
        case Atom(_, _):
            yield f
        case And(items) | Or(items):
            for item in items:
                yield from atoms(item)
        case Implies(left, right) | Iff(left, right):
            yield from atoms(left)
            yield from atoms(right)
        case ForAll(_, body) | Exists(_, body):
            yield from atoms(body)
        case _:
            return


def predicates(f: Formula) -> list[tuple[str, int]]:
    """Predicate/arity pairs of f in first-occurrence order."""
    seen: dict[tuple[str, int], None] = {}
    for a in atoms(f):
        seen.setdefault((a.predicate, a.arity))
    return list(seen)


def map_atoms(f: Formula, fn: Callable[[Atom], Formula]) -> Formula:
    match f:
        case Atom(_, _):
            return fn(f)
        case And(items):
            return And(tuple(map_atoms(i, fn) for i in items))
        case Or(items):
            return Or(tuple(map_atoms(i, fn) for i in items))
        case Implies(left, right):
            return Implies(map_atoms(left, fn), map_atoms(right, fn))
        case Iff(left, right):
            return Iff(map_atoms(left, fn), map_atoms(right, fn))
        case ForAll(variables, body):
            return ForAll(variables, map_atoms(body, fn))
        case Exists(variables, body):
            return Exists(variables, map_atoms(body, fn))
        case _:
            return f


def rename_predicates(f: Formula, mapping: dict[tuple[str, int], str]) -> Formula:
    def rename(a: Atom) -> Formula:
        new = mapping.get((a.predicate, a.arity))
        return Atom(new, a.args) if new is not None else a

    return map_atoms(f, rename)


def map_terms(f: Formula, fn: Callable[[FoTerm], FoTerm]) -> Formula:
    """Apply fn to every term position (fn is responsible for recursion)."""
    match f:
        case Atom(predicate, args):
            return Atom(predicate, tuple(fn(t) for t in args))
        case Compare(relation, left, right):
            return Compare(relation, fn(left), fn(right))
        case And(items):
            return And(tuple(map_terms(i, fn) for i in items))
        case Or(items):
            return Or(tuple(map_terms(i, fn) for i in items))
        case Implies(left, right):
            return Implies(map_terms(left, fn), map_terms(right, fn))
        case Iff(left, right):
            return Iff(map_terms(left, fn), map_terms(right, fn))
        case ForAll(variables, body):
            return ForAll(variables, map_terms(body, fn))
        case Exists(variables, body):
            return Exists(variables, map_terms(body, fn))
        case _:
            return f


def node_count(f: Formula) -> int:
    """Formula and term nodes combined; simplification must not increase it."""

    def count_term(t: FoTerm) -> int:
        match t:
            case IntOp(_, left, right):
                return 1 + count_term(left) + count_term(right)
            case _:
                return 1

    match f:
        case Atom(_, args):
            return 1 + sum(count_term(t) for t in args)
        case Compare(_, left, right):
            return 1 + count_term(left) + count_term(right)
        case Truth() | Falsity():
            return 1
        case And(items) | Or(items):
            return 1 + sum(node_count(i) for i in items)
        case Implies(left, right) | Iff(left, right):
            return 1 + node_count(left) + node_count(right)
        case ForAll(variables, body) | Exists(variables, body):
            return 1 + len(variables) + node_count(body)
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# substitution and closure


def fresh_name(base: str, taken: set[str]) -> str:
    if base not in taken:
        return base
    i = 1
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"


def substitute(f: Formula, var: Var, value: FoTerm) -> Formula:
    """Capture-avoiding substitution of value for free occurrences of var."""
    if not is_subsort(term_sort(value), var.sort):
        raise SortError(
            f"cannot substitute general-sorted term {term_to_str(value)} "
            f"for integer variable {var.name}"
        )

    value_vars = set(term_variables(value))

    def walk(g: Formula) -> Formula:
        match g:
            case Atom(_, _) | Compare(_, _, _):
                return map_terms(g, lambda t: substitute_term(t, var, value))
            case Truth() | Falsity():
                return g
            case And(items):
                return And(tuple(walk(i) for i in items))
            case Or(items):
                return Or(tuple(walk(i) for i in items))
            case Implies(left, right):
                return Implies(walk(left), walk(right))
            case Iff(left, right):
                return Iff(walk(left), walk(right))
            case ForAll(variables, body) | Exists(variables, body):
                ctor = ForAll if isinstance(g, ForAll) else Exists
                if var in variables:
                    return g
                clashing = [v for v in variables if v in value_vars]
                if clashing:
                    taken = {v.name for v in free_variables(body)}
                    taken.update(v.name for v in variables)
                    taken.update(v.name for v in value_vars)
                    taken.add(var.name)
                    renamed_body = body
                    new_vars = list(variables)
                    for v in clashing:
                        replacement = Var(fresh_name(v.name, taken), v.sort)
                        taken.add(replacement.name)
                        new_vars[new_vars.index(v)] = replacement
                        renamed_body = substitute(renamed_body, v, replacement)
                    return ctor(tuple(new_vars), walk(renamed_body))
                return ctor(variables, walk(body))
        raise TypeError(f"not a formula: {g!r}")

    return walk(f)


def universal_closure(f: Formula) -> Formula:
    """Prepend one forall over the free variables, first-occurrence order."""
    return forall(free_variables(f), f)


def alpha_equivalent(f: Formula, g: Formula) -> bool:
    """Structural equality up to renaming of bound variables."""
    return _canonical(f) == _canonical(g)


def _canonical(f: Formula) -> Formula:
    counter = [0]

    def walk(g: Formula, env: dict[Var, Var]) -> Formula:
        def term(t: FoTerm) -> FoTerm:
            match t:
                case Var(_, _):
                    return env.get(t, t)
                case IntOp(op, left, right):
                    return IntOp(op, term(left), term(right))
                case _:
                    return t

        match g:
            case Atom(predicate, args):
                return Atom(predicate, tuple(term(t) for t in args))
            case Compare(relation, left, right):
                return Compare(relation, term(left), term(right))
            case Truth() | Falsity():
                return g
            case And(items):
                return And(tuple(walk(i, env) for i in items))
            case Or(items):
                return Or(tuple(walk(i, env) for i in items))
            case Implies(left, right):
                return Implies(walk(left, env), walk(right, env))
            case Iff(left, right):
                return Iff(walk(left, env), walk(right, env))
            case ForAll(variables, body) | Exists(variables, body):
                ctor = ForAll if isinstance(g, ForAll) else Exists
                inner = dict(env)
                renamed = []
                for v in variables:
                    counter[0] += 1
                    nv = Var(f"_B{counter[0]}", v.sort)
                    inner[v] = nv
                    renamed.append(nv)
                return ctor(tuple(renamed), walk(body, inner))
        raise TypeError(f"not a formula: {g!r}")

    return walk(f, {})


# ---------------------------------------------------------------------------
# printing

# precedence levels: iff 1, implies 2, or 3, and 4, unary/quantifier 5, atom 6
_PREC_IFF = 1
_PREC_IMPLIES = 2
_PREC_OR = 3
_PREC_AND = 4
_PREC_UNARY = 5
_PREC_ATOM = 6


def _var_decl(v: Var) -> str:
    return f"{v.name}$i" if v.sort == Sort.INTEGER else v.name


def formula_to_str(f: Formula, min_prec: int = 0) -> str:
    def wrap(s: str, prec: int) -> str:
        return f"({s})" if prec < min_prec else s

    match f:
        case Atom(predicate, args):
            if not args:
                return predicate
            return f"{predicate}({', '.join(term_to_str(t) for t in args)})"
        case Compare(relation, left, right):
            return wrap(
                f"{term_to_str(left)} {relation.value} {term_to_str(right)}",
                _PREC_ATOM,
            )
        case Truth():
            return "#true"
        case Falsity():
            return "#false"
        case Implies(left, Falsity()):
            return wrap("not " + formula_to_str(left, _PREC_UNARY + 1), _PREC_UNARY)
        case And(items):
            s = " and ".join(formula_to_str(i, _PREC_AND + 1) for i in items)
            return wrap(s, _PREC_AND)
        case Or(items):
            s = " or ".join(formula_to_str(i, _PREC_OR + 1) for i in items)
            return wrap(s, _PREC_OR)
        case Implies(left, right):
            s = (
                formula_to_str(left, _PREC_IMPLIES + 1)
                + " -> "
                + formula_to_str(right, _PREC_IMPLIES)
            )
            return wrap(s, _PREC_IMPLIES)
        case Iff(left, right):
            s = (
                formula_to_str(left, _PREC_IFF + 1)
                + " <-> "
                + formula_to_str(right, _PREC_IFF + 1)
            )
            return wrap(s, _PREC_IFF)
        case ForAll(variables, body) | Exists(variables, body):
            word = "forall" if isinstance(f, ForAll) else "exists"
            names = " ".join(_var_decl(v) for v in variables)
            return wrap(
                f"{word} {names} ({formula_to_str(body)})", _PREC_UNARY
            )
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# theories


@dataclass(frozen=True)
class Theory:
    """Ordered collection of sentences."""

    formulas: tuple[Formula, ...] = ()

    def __post_init__(self):
        for f in self.formulas:
            free = free_variables(f)
            if free:
                names = ", ".join(v.name for v in free)
                raise ValueError(f"theory formula has free variables: {names}")

    def __iter__(self) -> Iterator[Formula]:
        return iter(self.formulas)

    def __len__(self) -> int:
        return len(self.formulas)

    def __getitem__(self, index):
        return self.formulas[index]

    def __str__(self) -> str:
        return "\n".join(formula_to_str(f) for f in self.formulas)
