"""Predicate dependency analysis and completion of translated theories.

Tightness means the predicate dependency graph has no positive cycles;
private recursion means some cycle (of any edge polarity) passes through a
predicate that is neither an input nor an output symbol.  Completion is only
meaningful for tight programs without private recursion, so callers that
hold the source program's graph pass it in and get those checks enforced.

Completion operates on translated theories rather than source rules: choice
rules then complete correctly through their doubly-negated body conjunct,
and a single input shape is maintained.  Mixed-polarity cycles do not block
completion; only positive ones do.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import fol
from .errors import (
    AnalysisError,
    CompletionShapeError,
    NotTightError,
    PrivateRecursionError,
)
from .fol import core
from .syntax import ast

Predicate = tuple[str, int]


def format_predicate(p: Predicate) -> str:
    return f"{p[0]}/{p[1]}"


class EdgePolarity(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class DependencyGraph:
    """Predicate-level dependencies with edge polarity.

    vertices: every predicate of the program, first-occurrence order.
    edges: (head predicate, body predicate, polarity), source order, deduplicated.
    """

    vertices: tuple[Predicate, ...]
    edges: tuple[tuple[Predicate, Predicate, EdgePolarity], ...]

    def successors(self, v: Predicate, positive_only: bool = False):
        for src, dst, polarity in self.edges:
            if src == v and (not positive_only or polarity == EdgePolarity.POSITIVE):
                yield dst


@dataclass(frozen=True)
class IoSignature:
    """Input/output declarations; everything else in a program is private."""

    inputs: frozenset[Predicate] = frozenset()
    outputs: frozenset[Predicate] = frozenset()
    placeholders: tuple[tuple[str, fol.Sort], ...] = ()

    def __post_init__(self):
        shared = self.inputs & self.outputs
        if shared:
            names = ", ".join(sorted(format_predicate(p) for p in shared))
            raise ValueError(f"predicates declared both input and output: {names}")

    def placeholder_sorts(self) -> dict[str, fol.Sort]:
        return dict(self.placeholders)

    def is_public(self, p: Predicate) -> bool:
        return p in self.inputs or p in self.outputs

    def privates(self, predicates) -> list[Predicate]:
        return [p for p in predicates if not self.is_public(p)]


EMPTY_IO = IoSignature()


def dependency_graph(program: ast.Program) -> DependencyGraph:
    """Build the dependency graph; conditional literals are rejected because
    their effect on predicate dependencies is unsettled."""
    if ast.has_conditional_literals(program):
        raise AnalysisError("conditional literals unsupported in dependency analysis")

    vertices = tuple(ast.program_predicates(program))
    edges: dict[tuple[Predicate, Predicate, EdgePolarity], None] = {}
    for rule in program:
        head = ast.head_atom(rule)
        if head is None:
            continue
        src = (head.predicate, head.arity)
        for element in rule.body:
            if not isinstance(element, ast.Literal):
                continue
            dst = (element.atom.predicate, element.atom.arity)
            polarity = (
                EdgePolarity.POSITIVE
                if element.polarity == ast.Polarity.POSITIVE
                else EdgePolarity.NEGATIVE
            )
            edges.setdefault((src, dst, polarity))
    return DependencyGraph(vertices, tuple(edges))


def _strongly_connected(
    vertices: tuple[Predicate, ...], successors
) -> list[list[Predicate]]:
    """Tarjan's algorithm, iterative to be safe on deep chains."""
    index: dict[Predicate, int] = {}
    lowlink: dict[Predicate, int] = {}
    on_stack: set[Predicate] = set()
    stack: list[Predicate] = []
    sccs: list[list[Predicate]] = []
    counter = [0]

    for root in vertices:
        if root in index:
            continue
        work = [(root, iter(successors(root)))]
        index[root] = lowlink[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = lowlink[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(successors(w))))
                    advanced = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                component = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    component.append(w)
                    if w == v:
                        break
                sccs.append(component)
    return sccs


def _cycle_through(
    graph: DependencyGraph, start: Predicate, component: set[Predicate], positive_only: bool
) -> tuple[str, ...]:
    """Shortest cycle from start back to start inside the component."""
    if start in graph.successors(start, positive_only):
        return (format_predicate(start), format_predicate(start))
    parents: dict[Predicate, Predicate] = {}
    frontier = [start]
    seen = {start}
    while frontier:
        next_frontier = []
        for v in frontier:
            for w in graph.successors(v, positive_only):
                if w == start:
                    chain = [v]
                    while chain[-1] != start:
                        chain.append(parents[chain[-1]])
                    chain.reverse()
                    chain.append(start)
                    return tuple(format_predicate(p) for p in chain)
                if w in component and w not in seen:
                    seen.add(w)
                    parents[w] = v
                    next_frontier.append(w)
        frontier = next_frontier
    raise AssertionError("component without a cycle through its member")


def positive_cycles(graph: DependencyGraph) -> list[tuple[str, ...]]:
    """One representative cycle per positive strongly connected component."""
    cycles = []
    sccs = _strongly_connected(
        graph.vertices, lambda v: graph.successors(v, positive_only=True)
    )
    for component in sccs:
        members = set(component)
        first = min(component, key=graph.vertices.index)
        if len(component) > 1 or first in graph.successors(first, positive_only=True):
            cycles.append(_cycle_through(graph, first, members, positive_only=True))
    return cycles


def is_tight(graph: DependencyGraph) -> bool:
    """True iff the subgraph of positive edges is acyclic."""
    return not positive_cycles(graph)


def private_recursion_cycles(
    graph: DependencyGraph, io: IoSignature
) -> list[tuple[str, ...]]:
    """One representative cycle per component that recurses through a private
    predicate; edge polarity does not matter here."""
    cycles = []
    sccs = _strongly_connected(graph.vertices, graph.successors)
    for component in sccs:
        members = set(component)
        privates = [p for p in component if not io.is_public(p)]
        if not privates:
            continue
        witness = min(privates, key=graph.vertices.index)
        if len(component) > 1 or witness in graph.successors(witness):
            cycles.append(_cycle_through(graph, witness, members, positive_only=False))
    return cycles


def has_private_recursion(graph: DependencyGraph, io: IoSignature) -> bool:
    return bool(private_recursion_cycles(graph, io))


# ---------------------------------------------------------------------------
# completion


@dataclass(frozen=True)
class _Definition:
    prefix: tuple[core.Var, ...]
    antecedent: core.Formula
    head: core.Atom


def _decompose(f: core.Formula):
    """Split a translated sentence into (prefix, antecedent, consequent)."""
    prefix: list[core.Var] = []
    g = f
    while isinstance(g, core.ForAll):
        prefix.extend(g.variables)
        g = g.body
    match g:
        case core.Atom(_, _):
            return prefix, core.Truth(), g
        case core.Implies(antecedent, core.Falsity()):
            return prefix, antecedent, core.Falsity()
        case core.Implies(antecedent, core.Atom(_, _) as head):
            return prefix, antecedent, head
        case core.Falsity():
            return prefix, core.Truth(), core.Falsity()
    raise CompletionShapeError(
        f"not in translated implication form: {core.formula_to_str(f)}"
    )


def _all_variable_names(theory: fol.Theory) -> set[str]:
    names: set[str] = set()

    def visit(f: core.Formula) -> None:
        match f:
            case core.Atom(_, args):
                for t in args:
                    names.update(v.name for v in core.term_variables(t))
            case core.Compare(_, left, right):
                for t in (left, right):
                    names.update(v.name for v in core.term_variables(t))
            case core.And(items) | core.Or(items):
                for i in items:
                    visit(i)
            case core.Implies(a, b) | core.Iff(a, b):
                visit(a)
                visit(b)
            case core.ForAll(variables, body) | core.Exists(variables, body):
                names.update(v.name for v in variables)
                visit(body)

    for f in theory:
        visit(f)
    return names


def _disjunct(defn: _Definition, targets: tuple[core.Var, ...]) -> core.Formula:
    args = defn.head.args
    direct = (
        len(set(args)) == len(args)
        and all(isinstance(a, core.Var) and a in defn.prefix for a in args)
    )
    if direct:
        remaining = [v for v in defn.prefix if v not in args]
        body = defn.antecedent
        for arg, target in zip(args, targets):
            body = core.substitute(body, arg, target)
        return fol.exists(remaining, body)
    equalities = [
        core.Compare(core.Rel.EQ, target, arg) for target, arg in zip(targets, args)
    ]
    items = equalities + (
        [] if isinstance(defn.antecedent, core.Truth) else [defn.antecedent]
    )
    return fol.exists(defn.prefix, fol.conj(items))


def complete(
    theory: fol.Theory,
    io: IoSignature = EMPTY_IO,
    graph: DependencyGraph | None = None,
) -> fol.Theory:
    """Clark completion of a translated theory.

    Every non-input predicate receives one biconditional definition whose
    disjuncts come from its rules (none yields `<-> #false`); input
    predicates stay open; constraints pass through unchanged.  When the
    source program's dependency graph is supplied, non-tightness and private
    recursion are rejected up front.
    """
    if graph is not None:
        bad = positive_cycles(graph)
        if bad:
            raise NotTightError(bad)
        private = private_recursion_cycles(graph, io)
        if private:
            raise PrivateRecursionError(private)

    definitions: dict[Predicate, list[_Definition]] = {}
    constraints: list[core.Formula] = []
    order: dict[Predicate, None] = {}

    for f in theory:
        prefix, antecedent, consequent = _decompose(f)
        for p in core.predicates(f):
            order.setdefault(p)
        if isinstance(consequent, core.Falsity):
            constraints.append(f)
            continue
        key = (consequent.predicate, consequent.arity)
        definitions.setdefault(key, []).append(
            _Definition(tuple(prefix), antecedent, consequent)
        )

    defined = [p for p in order if p not in io.inputs]
    for extra in sorted(io.outputs - set(order)):
        defined.append(extra)

    used_names = _all_variable_names(theory)
    out: list[core.Formula] = []
    for predicate in defined:
        name, arity = predicate
        targets = []
        i = 1
        while len(targets) < arity:
            candidate = f"V{i}"
            i += 1
            if candidate not in used_names:
                targets.append(core.Var(candidate, fol.Sort.GENERAL))
        targets = tuple(targets)
        disjuncts = [
            _disjunct(d, targets) for d in definitions.get(predicate, [])
        ]
        head = core.Atom(name, targets)
        out.append(fol.forall(targets, core.Iff(head, fol.disj(disjuncts))))

    out.extend(constraints)
    return fol.Theory(tuple(out))
