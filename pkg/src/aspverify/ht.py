"""Here-and-there machinery.

Three pieces live here: a brute-force ground oracle for here-and-there
satisfaction, equilibrium models, and reduct-based stable models; the
classical doubled-signature reduction `gamma`; and the assembly of strong
equivalence claim sequences.

An interpretation is a pair of worlds <H, T> with H a subset of T.  A ground
formula is evaluated by Kripke semantics: an implication holds at the here
world only if it also holds classically at the there world.  Equilibrium
models are total models <T, T> with no smaller here world; they coincide
with the stable models that the independent reduct oracle computes, which
the test suite exercises at random.

The oracle enumerates candidate worlds exhaustively and guards against
signatures above a configurable atom bound; this is a resource guard, not a
semantic limit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from . import fol, translate
from .claims import Claim, ClaimSequence, Direction, Role
from .errors import AspverifyError, SignatureTooLargeError
from .fol import core
from .syntax import ast

ATOM_BOUND = 16

# ---------------------------------------------------------------------------
# ground values and atom keys

# a ground value is an int, a symbolic-constant name, or one of two markers
_INF = ("#inf",)
_SUP = ("#sup",)

GroundValue = object
AtomKey = tuple  # (predicate, value, value, ...)


def _order_key(v: GroundValue):
    if v is _INF:
        return (0, 0)
    if isinstance(v, int):
        return (1, v)
    if isinstance(v, str):
        return (2, v)
    return (3, 0)


def compare_values(relation: fol.Rel, a: GroundValue, b: GroundValue) -> bool:
    """The total order on ground values: #inf < integers < symbolic < #sup;
    symbolic constants are ordered lexicographically."""
    match relation:
        case fol.Rel.EQ:
            return a == b
        case fol.Rel.NEQ:
            return a != b
        case fol.Rel.LT:
            return _order_key(a) < _order_key(b)
        case fol.Rel.LEQ:
            return _order_key(a) <= _order_key(b)
        case fol.Rel.GT:
            return _order_key(a) > _order_key(b)
        case fol.Rel.GEQ:
            return _order_key(a) >= _order_key(b)
    raise TypeError(f"not a relation: {relation!r}")


def eval_ground_fo_term(t: core.FoTerm) -> GroundValue:
    match t:
        case core.IntConst(value):
            return value
        case core.SymConst(name):
            return name
        case core.Inf():
            return _INF
        case core.Sup():
            return _SUP
        case core.IntOp(op, left, right):
            a = eval_ground_fo_term(left)
            b = eval_ground_fo_term(right)
            if not isinstance(a, int) or not isinstance(b, int):
                raise ValueError("arithmetic over a non-integer value")
            match op:
                case core.IntOpKind.PLUS:
                    return a + b
                case core.IntOpKind.MINUS:
                    return a - b
                case core.IntOpKind.TIMES:
                    return a * b
        case core.Placeholder(name, _):
            raise ValueError(f"placeholder {name} has no fixed value")
        case core.Var(name, _):
            raise ValueError(f"variable {name} in ground evaluation")
    raise TypeError(f"not a term: {t!r}")


def atom_key(a: core.Atom) -> AtomKey:
    return (a.predicate, *map(eval_ground_fo_term, a.args))


# ---------------------------------------------------------------------------
# interpretations and satisfaction


@dataclass(frozen=True)
class HtInterpretation:
    here: frozenset[AtomKey]
    there: frozenset[AtomKey]

    def __post_init__(self):
        if not self.here <= self.there:
            raise ValueError("the here world must be a subset of the there world")


def classical_satisfies(world: frozenset, f: core.Formula) -> bool:
    """Plain classical evaluation of a ground, quantifier-free formula."""
    match f:
        case core.Atom(_, _):
            return atom_key(f) in world
        case core.Compare(relation, left, right):
            return compare_values(
                relation, eval_ground_fo_term(left), eval_ground_fo_term(right)
            )
        case core.Truth():
            return True
        case core.Falsity():
            return False
        case core.And(items):
            return all(classical_satisfies(world, i) for i in items)
        case core.Or(items):
            return any(classical_satisfies(world, i) for i in items)
        case core.Implies(left, right):
            return not classical_satisfies(world, left) or classical_satisfies(
                world, right
            )
        case core.Iff(left, right):
            return classical_satisfies(world, left) == classical_satisfies(
                world, right
            )
        case core.ForAll(_, _) | core.Exists(_, _):
            raise ValueError("quantified formula in ground evaluation")
    raise TypeError(f"not a formula: {f!r}")


def ht_satisfies(interp: HtInterpretation, f: core.Formula) -> bool:
    """Kripke semantics on the two worlds; requires a ground formula."""
    match f:
        case core.Atom(_, _):
            return atom_key(f) in interp.here
        case core.Compare(_, _, _) | core.Truth() | core.Falsity():
            return classical_satisfies(interp.here, f)
        case core.And(items):
            return all(ht_satisfies(interp, i) for i in items)
        case core.Or(items):
            return any(ht_satisfies(interp, i) for i in items)
        case core.Implies(left, right):
            here_ok = not ht_satisfies(interp, left) or ht_satisfies(interp, right)
            return here_ok and classical_satisfies(interp.there, f)
        case core.Iff(left, right):
            return ht_satisfies(interp, core.Implies(left, right)) and ht_satisfies(
                interp, core.Implies(right, left)
            )
        case core.ForAll(_, _) | core.Exists(_, _):
            raise ValueError("quantified formula in ground evaluation")
    raise TypeError(f"not a formula: {f!r}")


def _signature(formulas: Iterable[core.Formula], bound: int) -> list[AtomKey]:
    seen: dict[AtomKey, None] = {}
    for f in formulas:
        for a in core.atoms(f):
            seen.setdefault(atom_key(a))
    if len(seen) > bound:
        raise SignatureTooLargeError(
            f"{len(seen)} ground atoms exceed the exhaustive-search bound {bound}"
        )
    return list(seen)


def _subsets(items: list) -> Iterable[frozenset]:
    for r in range(len(items) + 1):
        for combo in itertools.combinations(items, r):
            yield frozenset(combo)


def equilibrium_models(
    theory: fol.Theory | Iterable[core.Formula], bound: int = ATOM_BOUND
) -> frozenset[frozenset[AtomKey]]:
    """All T such that <T, T> satisfies the theory and no H strictly below
    T does; requires ground, quantifier-free formulas."""
    formulas = tuple(theory)
    universe = _signature(formulas, bound)
    models = []
    for there in _subsets(universe):
        total = HtInterpretation(there, there)
        if not all(ht_satisfies(total, f) for f in formulas):
            continue
        minimal = True
        for here in _subsets(sorted(there, key=repr)):
            if here == there:
                continue
            interp = HtInterpretation(here, there)
            if all(ht_satisfies(interp, f) for f in formulas):
                minimal = False
                break
        if minimal:
            models.append(there)
    return frozenset(models)


# ---------------------------------------------------------------------------
# reduct-based stable models (independent oracle)


def _term_values(t: ast.Term) -> list[GroundValue]:
    """All values of a variable-free program term; may be empty."""
    match t:
        case ast.Ground(ast.Numeral(value)):
            return [value]
        case ast.Ground(ast.SymbolicConstant(name)):
            return [name]
        case ast.Ground(ast.Infimum()):
            return [_INF]
        case ast.Ground(ast.Supremum()):
            return [_SUP]
        case ast.Variable(name):
            raise ValueError(f"variable {name} in a ground program")
        case ast.Negate(operand):
            return [-v for v in _term_values(operand) if isinstance(v, int)]
        case ast.BinOp(op, left, right):
            out: dict[GroundValue, None] = {}
            for a in _term_values(left):
                for b in _term_values(right):
                    if not (isinstance(a, int) and isinstance(b, int)):
                        continue
                    match op:
                        case ast.BinOpKind.PLUS:
                            out.setdefault(a + b)
                        case ast.BinOpKind.MINUS:
                            out.setdefault(a - b)
                        case ast.BinOpKind.TIMES:
                            out.setdefault(a * b)
                        case ast.BinOpKind.INTERVAL:
                            for k in range(a, b + 1):
                                out.setdefault(k)
                        case ast.BinOpKind.DIVIDE | ast.BinOpKind.MODULO:
                            if b == 0:
                                continue
                            # Euclidean: 0 <= r < |b|, a == b*q + r
                            r = a % abs(b)
                            q = (a - r) // b
                            out.setdefault(
                                q if op == ast.BinOpKind.DIVIDE else r
                            )
            return list(out)
    raise TypeError(f"not a term: {t!r}")


def _atom_values(atom: ast.Atom) -> list[AtomKey]:
    value_lists = [_term_values(t) for t in atom.args]
    return [
        (atom.predicate, *combo) for combo in itertools.product(*value_lists)
    ]


@dataclass(frozen=True)
class _FlatRule:
    """Propositional instance: head None means a constraint."""

    head: AtomKey | None
    choice: bool
    positive: tuple[AtomKey, ...]
    negative: tuple[AtomKey, ...]  # `not a`
    double: tuple[AtomKey, ...]  # `not not a`


def _flatten_program(program: ast.Program) -> tuple[list[_FlatRule], list[AtomKey]]:
    """Expand value multiplicity into propositional rules.

    A body element with several values expands disjunctively (one rule
    instance per witness); a basic head with several values expands
    conjunctively (one rule per derived atom); a comparison is a static
    test that either drops out or kills the instance.
    """
    flat: list[_FlatRule] = []
    universe: dict[AtomKey, None] = {}

    for rule in program:
        option_lists: list[list[tuple[str, AtomKey]]] = []
        dead = False
        for element in rule.body:
            if isinstance(element, ast.ConditionalLiteral):
                raise AspverifyError(
                    "conditional literals unsupported in the ground oracle"
                )
            if isinstance(element, ast.Comparison):
                holds = any(
                    compare_values(
                        {
                            ast.Relation.EQ: fol.Rel.EQ,
                            ast.Relation.NEQ: fol.Rel.NEQ,
                            ast.Relation.LT: fol.Rel.LT,
                            ast.Relation.LEQ: fol.Rel.LEQ,
                            ast.Relation.GT: fol.Rel.GT,
                            ast.Relation.GEQ: fol.Rel.GEQ,
                        }[element.relation],
                        a,
                        b,
                    )
                    for a in _term_values(element.lhs)
                    for b in _term_values(element.rhs)
                )
                if not holds:
                    dead = True
                    break
                continue
            keys = _atom_values(element.atom)
            universe.update((k, None) for k in keys)
            kind = {
                ast.Polarity.POSITIVE: "pos",
                ast.Polarity.NEGATED: "neg",
                ast.Polarity.DOUBLY_NEGATED: "dbl",
            }[element.polarity]
            options = [(kind, k) for k in keys]
            if not options:
                dead = True
                break
            option_lists.append(options)
        if dead:
            continue

        head_keys: list[AtomKey | None]
        choice = isinstance(rule.head, ast.ChoiceHead)
        atom = ast.head_atom(rule)
        if atom is None:
            head_keys = [None]
        else:
            head_keys = list(_atom_values(atom))
            universe.update((k, None) for k in head_keys)
            if not head_keys:
                # a head term without values derives nothing
                continue

        for combo in itertools.product(*option_lists):
            positive = tuple(k for kind, k in combo if kind == "pos")
            negative = tuple(k for kind, k in combo if kind == "neg")
            double = tuple(k for kind, k in combo if kind == "dbl")
            for head in head_keys:
                flat.append(_FlatRule(head, choice, positive, negative, double))

    return flat, list(universe)


def _reduct_fixpoint(rules: list[_FlatRule], candidate: frozenset) -> frozenset | None:
    """Least model of the reduct's definite part; None if a constraint fires."""
    active = []
    for r in rules:
        if any(k in candidate for k in r.negative):
            continue
        if any(k not in candidate for k in r.double):
            continue
        if r.choice and r.head is not None and r.head not in candidate:
            continue
        active.append(r)

    derived: set[AtomKey] = set()
    changed = True
    while changed:
        changed = False
        for r in active:
            if r.head is None or r.head in derived:
                continue
            if all(k in derived for k in r.positive):
                derived.add(r.head)
                changed = True
    for r in active:
        if r.head is None and all(k in derived for k in r.positive):
            return None
    return frozenset(derived)


def stable_models_reduct(
    program: ast.Program, bound: int = ATOM_BOUND
) -> frozenset[frozenset[AtomKey]]:
    """Stable models of a variable-free program by reduct fixpoint check."""
    flat, universe = _flatten_program(program)
    if len(universe) > bound:
        raise SignatureTooLargeError(
            f"{len(universe)} ground atoms exceed the exhaustive-search bound {bound}"
        )
    models = []
    for candidate in _subsets(universe):
        if _reduct_fixpoint(flat, candidate) == candidate:
            models.append(candidate)
    return frozenset(models)


# ---------------------------------------------------------------------------
# the classical doubled-signature reduction


def prime(f: core.Formula) -> core.Formula:
    """Replace every predicate by its primed copy."""
    mapping = {}
    for p, arity in core.predicates(f):
        if p.endswith("'"):
            raise AspverifyError(f"predicate {p} is already primed")
        mapping[(p, arity)] = p + "'"
    return core.rename_predicates(f, mapping)


def gamma(f: core.Formula) -> core.Formula:
    """Classical encoding of here-and-there satisfaction over a doubled
    signature: the unprimed predicates describe the here world, the primed
    copies the there world.  Sound under the inclusion axioms p(X) -> p'(X).
    """
    for p, _ in core.predicates(f):
        if p.endswith("'"):
            raise AspverifyError(f"predicate {p} is already primed")

    def walk(g: core.Formula) -> core.Formula:
        match g:
            case core.Atom(_, _) | core.Compare(_, _, _) | core.Truth() | core.Falsity():
                return g
            case core.And(items):
                return core.And(tuple(walk(i) for i in items))
            case core.Or(items):
                return core.Or(tuple(walk(i) for i in items))
            case core.Implies(left, right):
                return core.And(
                    (
                        core.Implies(walk(left), walk(right)),
                        core.Implies(prime(left), prime(right)),
                    )
                )
            case core.Iff(left, right):
                return walk(
                    core.And(
                        (core.Implies(left, right), core.Implies(right, left))
                    )
                )
            case core.ForAll(variables, body):
                return core.ForAll(variables, walk(body))
            case core.Exists(variables, body):
                return core.Exists(variables, walk(body))
        raise TypeError(f"not a formula: {g!r}")

    return walk(f)


# ---------------------------------------------------------------------------
# strong equivalence claims


def inclusion_axioms(predicates: Iterable[tuple[str, int]]) -> list[Claim]:
    """forall X (p(X) -> p'(X)) for every predicate, as universal axioms."""
    out = []
    for name, arity in predicates:
        variables = tuple(
            core.Var(f"X{i + 1}", fol.Sort.GENERAL) for i in range(arity)
        )
        body = core.Implies(
            core.Atom(name, variables), core.Atom(name + "'", variables)
        )
        out.append(
            Claim(
                f"inclusion({name}/{arity})",
                Role.AXIOM,
                fol.forall(variables, body),
                Direction.UNIVERSAL,
            )
        )
    return out


def strong_equivalence_claims(
    program1: ast.Program, program2: ast.Program
) -> ClaimSequence:
    """Claims whose provability establishes strong equivalence.

    The conjecture gamma(F1) <-> gamma(F2) (with F1, F2 the translated
    program conjunctions, the biconditional taken inside gamma) is split
    into one claim per direction, proven under the inclusion axioms plus
    the standard-interpretation axioms attached at problem emission.
    Conditional literals are allowed; strong equivalence needs neither
    tightness nor completion.
    """
    f1 = fol.conj(translate.tau_star(program1))
    f2 = fol.conj(translate.tau_star(program2))

    seen: dict[tuple[str, int], None] = {}
    for p in core.predicates(f1):
        seen.setdefault(p)
    for p in core.predicates(f2):
        seen.setdefault(p)

    axioms = inclusion_axioms(seen)
    forward = Claim(
        "strong-equivalence(forward)",
        Role.CONJECTURE,
        gamma(core.Implies(f1, f2)),
        Direction.FORWARD,
    )
    backward = Claim(
        "strong-equivalence(backward)",
        Role.CONJECTURE,
        gamma(core.Implies(f2, f1)),
        Direction.BACKWARD,
    )
    return ClaimSequence(tuple(axioms) + (forward, backward))
