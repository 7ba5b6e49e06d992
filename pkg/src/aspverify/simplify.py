"""Equivalence-preserving formula simplification.

Every registered pass preserves the here-and-there model set of its input,
which is strictly stronger than classical equivalence; the property suite
checks this literally against the ground oracle.  Classically sound rewrites
that are not sound in here-and-there (the prime example: dropping double
negation) are deliberately absent.

The pass list is a conservative reconstruction: truth/falsity absorption,
equality-witness elimination, unused-quantifier dropping, same-kind nesting
flattening, and duplicate removal.  Passes run in order to a fixpoint with a
bounded iteration count; exceeding the bound is reported through the module
logger, not fatal.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

from . import fol
from .fol import core

logger = logging.getLogger(__name__)

FIXPOINT_BOUND = 64


def _bottom_up(f: core.Formula, fn: Callable[[core.Formula], core.Formula]) -> core.Formula:
    match f:
        case core.And(items):
            f = core.And(tuple(_bottom_up(i, fn) for i in items))
        case core.Or(items):
            f = core.Or(tuple(_bottom_up(i, fn) for i in items))
        case core.Implies(left, right):
            f = core.Implies(_bottom_up(left, fn), _bottom_up(right, fn))
        case core.Iff(left, right):
            f = core.Iff(_bottom_up(left, fn), _bottom_up(right, fn))
        case core.ForAll(variables, body):
            f = core.ForAll(variables, _bottom_up(body, fn))
        case core.Exists(variables, body):
            f = core.Exists(variables, _bottom_up(body, fn))
    return fn(f)


# ---------------------------------------------------------------------------
# individual passes


def _absorb_node(f: core.Formula) -> core.Formula:
    match f:
        case core.And(items):
            if any(isinstance(i, core.Falsity) for i in items):
                return core.Falsity()
            kept = tuple(i for i in items if not isinstance(i, core.Truth))
            if len(kept) != len(items):
                return fol.conj(kept)
            if len(items) < 2:
                return fol.conj(items)
            return f
        case core.Or(items):
            if any(isinstance(i, core.Truth) for i in items):
                return core.Truth()
            kept = tuple(i for i in items if not isinstance(i, core.Falsity))
            if len(kept) != len(items):
                return fol.disj(kept)
            if len(items) < 2:
                return fol.disj(items)
            return f
        case core.Implies(core.Truth(), right):
            return right
        case core.Implies(_, core.Truth()):
            return core.Truth()
        case core.Implies(core.Falsity(), _):
            return core.Truth()
        case core.Iff(left, core.Truth()):
            return left
        case core.Iff(core.Truth(), right):
            return right
        case core.Iff(left, core.Falsity()):
            return fol.neg(left)
        case core.Iff(core.Falsity(), right):
            return fol.neg(right)
    return f


def absorption(f: core.Formula) -> core.Formula:
    """#true/#false absorption.  F -> #false (negation) is never rewritten."""
    return _bottom_up(f, _absorb_node)


def _atomic_term(t: core.FoTerm) -> bool:
    return not isinstance(t, core.IntOp)


def _occurrences(f: core.Formula, var: core.Var) -> int:
    count = 0

    def visit_term(t: core.FoTerm) -> core.FoTerm:
        nonlocal count
        count += sum(1 for v in core.term_variables(t) if v == var)
        return t

    core.map_terms(f, visit_term)
    return count


def _find_witness(
    variables: tuple[core.Var, ...], items: list[core.Formula]
) -> tuple[core.Var, core.FoTerm, int] | None:
    """First conjunct `Z = t` (or `t = Z`) eliminable by substitution."""
    for index, item in enumerate(items):
        if not (isinstance(item, core.Compare) and item.relation == core.Rel.EQ):
            continue
        for var, term in ((item.left, item.right), (item.right, item.left)):
            if not isinstance(var, core.Var) or var not in variables:
                continue
            if any(v == var for v in core.term_variables(term)):
                continue
            if not core.is_subsort(core.term_sort(term), var.sort):
                continue
            rest = [it for i, it in enumerate(items) if i != index]
            uses = sum(_occurrences(it, var) for it in rest)
            # substitution must not grow the formula
            if not _atomic_term(term) and uses > 1:
                continue
            return var, term, index
    return None


def _witness_node(f: core.Formula) -> core.Formula:
    match f:
        case core.Exists(variables, body):
            items = list(body.items) if isinstance(body, core.And) else [body]
            found = _find_witness(variables, items)
            if found is None:
                return f
            var, term, index = found
            rest = [it for i, it in enumerate(items) if i != index]
            replaced = core.substitute(fol.conj(rest), var, term)
            return fol.exists((v for v in variables if v != var), replaced)
        case core.ForAll(variables, core.Implies(antecedent, consequent)):
            items = (
                list(antecedent.items)
                if isinstance(antecedent, core.And)
                else [antecedent]
            )
            found = _find_witness(variables, items)
            if found is None:
                return f
            var, term, index = found
            rest = [it for i, it in enumerate(items) if i != index]
            replaced = core.substitute(
                core.Implies(fol.conj(rest), consequent), var, term
            )
            if isinstance(replaced, core.Implies) and isinstance(
                replaced.left, core.Truth
            ):
                replaced = replaced.right
            return fol.forall((v for v in variables if v != var), replaced)
    return f


def witness_elimination(f: core.Formula) -> core.Formula:
    """exists Z (Z = t and F) => F[Z := t]; forall Z (Z = t -> F) => F[Z := t]."""
    return _bottom_up(f, _witness_node)


def _hygiene_node(f: core.Formula) -> core.Formula:
    match f:
        case core.ForAll(variables, body) | core.Exists(variables, body):
            free = set(core.free_variables(body))
            kept = tuple(v for v in variables if v in free)
            if kept != variables:
                ctor = fol.forall if isinstance(f, core.ForAll) else fol.exists
                return ctor(kept, body)
    return f


def drop_unused_quantifiers(f: core.Formula) -> core.Formula:
    return _bottom_up(f, _hygiene_node)


def _flatten_node(f: core.Formula) -> core.Formula:
    match f:
        case core.And(items) if any(isinstance(i, core.And) for i in items):
            flat: list[core.Formula] = []
            for i in items:
                flat.extend(i.items if isinstance(i, core.And) else (i,))
            return fol.conj(flat)
        case core.Or(items) if any(isinstance(i, core.Or) for i in items):
            flat = []
            for i in items:
                flat.extend(i.items if isinstance(i, core.Or) else (i,))
            return fol.disj(flat)
        case core.ForAll(outer, core.ForAll(inner, body)):
            if not {v.name for v in outer} & {v.name for v in inner}:
                return core.ForAll(outer + inner, body)
        case core.Exists(outer, core.Exists(inner, body)):
            if not {v.name for v in outer} & {v.name for v in inner}:
                return core.Exists(outer + inner, body)
    return f


def flatten_nesting(f: core.Formula) -> core.Formula:
    return _bottom_up(f, _flatten_node)


def _dedup_node(f: core.Formula) -> core.Formula:
    match f:
        case core.And(items):
            seen: dict[core.Formula, None] = {}
            for i in items:
                seen.setdefault(i)
            if len(seen) != len(items):
                return fol.conj(seen)
        case core.Or(items):
            seen = {}
            for i in items:
                seen.setdefault(i)
            if len(seen) != len(items):
                return fol.disj(seen)
    return f


def remove_duplicates(f: core.Formula) -> core.Formula:
    return _bottom_up(f, _dedup_node)


DEFAULT_PASSES: tuple[tuple[str, Callable[[core.Formula], core.Formula]], ...] = (
    ("absorption", absorption),
    ("witness-elimination", witness_elimination),
    ("drop-unused-quantifiers", drop_unused_quantifiers),
    ("flatten-nesting", flatten_nesting),
    ("remove-duplicates", remove_duplicates),
)


@dataclass(frozen=True)
class PassList:
    """Ordered rewrite passes applied to a fixpoint with a bounded count."""

    passes: tuple[tuple[str, Callable[[core.Formula], core.Formula]], ...] = (
        DEFAULT_PASSES
    )
    fixpoint_bound: int = FIXPOINT_BOUND

    def apply(self, f: core.Formula) -> core.Formula:
        for _ in range(self.fixpoint_bound):
            result = f
            for _, rewrite in self.passes:
                result = rewrite(result)
            if result == f:
                return f
            f = result
        logger.warning(
            "simplification did not reach a fixpoint within %d iterations",
            self.fixpoint_bound,
        )
        return f


DEFAULT_PASS_LIST = PassList()


def simplify(f: core.Formula, passes: PassList | None = None) -> core.Formula:
    return (passes or DEFAULT_PASS_LIST).apply(f)


def simplify_theory(theory: fol.Theory, passes: PassList | None = None) -> fol.Theory:
    return fol.Theory(tuple(simplify(f, passes) for f in theory))
