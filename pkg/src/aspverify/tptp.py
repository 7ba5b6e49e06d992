"""Problem emission in the TPTP typed first-order dialect with arithmetic.

The two-sorted formula language is mapped onto a declared sort `general`
plus the native `$int`.  Subsorting is realized by an explicit injective
embedding `f__integer__: $int > general` rather than a subtype declaration,
because arithmetic-aware provers expect native `$int` terms.  The total
order on program values (#inf < integers < symbolic constants < #sup, with
symbolic constants ordered lexicographically) is restored by an axiomatized
strict order predicate on `general` that agrees with `$less` on embedded
integers; the order block is emitted only when a problem compares
general-sorted terms or mentions #inf/#sup.

Symbolic constants are emitted with an `s__` prefix so they can never
collide with predicate symbols; placeholders keep their declared name and
take part in neither distinctness nor order axioms, since they stand for
unknown inputs.  Emission is deterministic: identical input yields
bit-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import fol
from .errors import AspverifyError
from .fol import core

GENERAL = "general"
EMBED = "f__integer__"
LESS = "p__less__"
INFIMUM = "c__infimum__"
SUPREMUM = "c__supremum__"

_RESERVED = {GENERAL, EMBED, LESS, INFIMUM, SUPREMUM}

_INT_REL = {
    core.Rel.LT: "$less",
    core.Rel.LEQ: "$lesseq",
    core.Rel.GT: "$greater",
    core.Rel.GEQ: "$greatereq",
}

_INT_OP = {
    core.IntOpKind.PLUS: "$sum",
    core.IntOpKind.MINUS: "$difference",
    core.IntOpKind.TIMES: "$product",
}


@dataclass(frozen=True)
class TptpProblem:
    """One prover problem: named axioms, exactly one conjecture."""

    name: str
    axioms: tuple[tuple[str, core.Formula], ...]
    conjecture: tuple[str, core.Formula]
    header: tuple[str, ...] = ()


@dataclass
class _Inventory:
    predicates: dict[tuple[str, int], None] = field(default_factory=dict)
    symbolic: dict[str, None] = field(default_factory=dict)
    placeholders: dict[str, fol.Sort] = field(default_factory=dict)
    needs_order: bool = False
    uses_inf: bool = False
    uses_sup: bool = False


def _scan_term(t: core.FoTerm, inv: _Inventory) -> None:
    match t:
        case core.SymConst(name):
            inv.symbolic.setdefault(name)
        case core.Placeholder(name, sort):
            known = inv.placeholders.get(name)
            if known is not None and known != sort:
                raise AspverifyError(f"placeholder {name} used at two sorts")
            inv.placeholders[name] = sort
        case core.Inf():
            inv.uses_inf = True
        case core.Sup():
            inv.uses_sup = True
        case core.IntOp(_, left, right):
            _scan_term(left, inv)
            _scan_term(right, inv)


def _scan(f: core.Formula, inv: _Inventory) -> None:
    match f:
        case core.Atom(predicate, args):
            inv.predicates.setdefault((predicate, len(args)))
            for t in args:
                _scan_term(t, inv)
        case core.Compare(relation, left, right):
            _scan_term(left, inv)
            _scan_term(right, inv)
            general = (
                core.term_sort(left) == fol.Sort.GENERAL
                or core.term_sort(right) == fol.Sort.GENERAL
            )
            if general and relation not in (core.Rel.EQ, core.Rel.NEQ):
                inv.needs_order = True
        case core.And(items) | core.Or(items):
            for i in items:
                _scan(i, inv)
        case core.Implies(a, b) | core.Iff(a, b):
            _scan(a, inv)
            _scan(b, inv)
        case core.ForAll(_, body) | core.Exists(_, body):
            _scan(body, inv)


def _sanitize(name: str) -> str:
    out = []
    for c in name:
        out.append(c if c.isalnum() or c == "_" else "_")
    s = "".join(out)
    if not s or not (s[0].isalpha() and s[0].islower()):
        s = "a_" + s
    return s


class _Symbols:
    """Deterministic mapping from package-level names to TFF functor names."""

    def __init__(self, inv: _Inventory):
        self.taken = set(_RESERVED)
        self.predicate: dict[tuple[str, int], str] = {}
        self.constant: dict[str, str] = {}
        self.placeholder: dict[str, str] = {}
        for name in sorted(inv.symbolic):
            self.constant[name] = self._claim(f"s__{name}")
        for key in sorted(inv.predicates):
            name, _ = key
            base = name.replace("'", "__prime") if name.endswith("'") else name
            self.predicate[key] = self._claim(_sanitize(base))
        for name in sorted(inv.placeholders):
            self.placeholder[name] = self._claim(_sanitize(name))

    def _claim(self, base: str) -> str:
        name = base
        count = 0
        while name in self.taken:
            count += 1
            name = f"{base}_{count}"
        self.taken.add(name)
        return name


def _sort_name(sort: fol.Sort) -> str:
    return "$int" if sort == fol.Sort.INTEGER else GENERAL


class _Emitter:
    def __init__(self, inv: _Inventory, symbols: _Symbols):
        self.inv = inv
        self.symbols = symbols

    def term(self, t: core.FoTerm, scope: dict[core.Var, str], general: bool) -> str:
        if general and core.term_sort(t) == fol.Sort.INTEGER:
            return f"{EMBED}({self.term(t, scope, False)})"
        match t:
            case core.Var(_, _):
                name = scope.get(t)
                if name is None:
                    raise AspverifyError(f"unbound variable {t.name} at emission")
                return name
            case core.IntConst(value):
                return str(value)
            case core.SymConst(name):
                return self.symbols.constant[name]
            case core.Inf():
                return INFIMUM
            case core.Sup():
                return SUPREMUM
            case core.Placeholder(name, _):
                return self.symbols.placeholder[name]
            case core.IntOp(op, left, right):
                a = self.term(left, scope, False)
                b = self.term(right, scope, False)
                return f"{_INT_OP[op]}({a}, {b})"
        raise TypeError(f"not a term: {t!r}")

    def compare(self, f: core.Compare, scope: dict[core.Var, str]) -> str:
        both_int = (
            core.term_sort(f.left) == fol.Sort.INTEGER
            and core.term_sort(f.right) == fol.Sort.INTEGER
        )
        if both_int:
            a = self.term(f.left, scope, False)
            b = self.term(f.right, scope, False)
            match f.relation:
                case core.Rel.EQ:
                    return f"({a} = {b})"
                case core.Rel.NEQ:
                    return f"({a} != {b})"
                case _:
                    return f"{_INT_REL[f.relation]}({a}, {b})"
        a = self.term(f.left, scope, True)
        b = self.term(f.right, scope, True)
        match f.relation:
            case core.Rel.EQ:
                return f"({a} = {b})"
            case core.Rel.NEQ:
                return f"({a} != {b})"
            case core.Rel.LT:
                return f"{LESS}({a}, {b})"
            case core.Rel.LEQ:
                return f"({LESS}({a}, {b}) | ({a} = {b}))"
            case core.Rel.GT:
                return f"{LESS}({b}, {a})"
            case core.Rel.GEQ:
                return f"({LESS}({b}, {a}) | ({a} = {b}))"
        raise TypeError(f"not a relation: {f.relation!r}")

    def formula(self, f: core.Formula, scope: dict[core.Var, str]) -> str:
        match f:
            case core.Atom(predicate, args):
                name = self.symbols.predicate[(predicate, len(args))]
                if not args:
                    return name
                inner = ", ".join(self.term(t, scope, True) for t in args)
                return f"{name}({inner})"
            case core.Compare(_, _, _):
                return self.compare(f, scope)
            case core.Truth():
                return "$true"
            case core.Falsity():
                return "$false"
            case core.Implies(left, core.Falsity()):
                return f"~({self.formula(left, scope)})"
            case core.And(items):
                return "(" + " & ".join(self.formula(i, scope) for i in items) + ")"
            case core.Or(items):
                return "(" + " | ".join(self.formula(i, scope) for i in items) + ")"
            case core.Implies(left, right):
                return f"({self.formula(left, scope)} => {self.formula(right, scope)})"
            case core.Iff(left, right):
                return f"({self.formula(left, scope)} <=> {self.formula(right, scope)})"
            case core.ForAll(variables, body) | core.Exists(variables, body):
                mark = "!" if isinstance(f, core.ForAll) else "?"
                inner = dict(scope)
                decls = []
                used = set(scope.values())
                for v in variables:
                    name = v.name
                    while name in used:
                        name = name + "0"
                    used.add(name)
                    inner[v] = name
                    decls.append(f"{name}: {_sort_name(v.sort)}")
                return f"{mark}[{', '.join(decls)}]: ({self.formula(body, inner)})"
        raise TypeError(f"not a formula: {f!r}")


def _standard_block(inv: _Inventory, symbols: _Symbols) -> tuple[list[str], list[str]]:
    """Type declarations and axioms shared by every problem, sized by the
    symbol inventory: distinctness is quadratic in the number of symbolic
    constants, everything else linear."""
    types = [
        f"tff(general_type, type, {GENERAL}: $tType).",
        f"tff(f__integer___type, type, {EMBED}: $int > {GENERAL}).",
    ]
    axioms = [
        "tff(f__integer___injective, axiom, "
        f"![X: $int, Y: $int]: (({EMBED}(X) = {EMBED}(Y)) => (X = Y)))."
    ]

    constants = [symbols.constant[name] for name in sorted(inv.symbolic)]
    for c in constants:
        types.append(f"tff({c}_type, type, {c}: {GENERAL}).")
    for i, a in enumerate(constants):
        for b in constants[i + 1 :]:
            axioms.append(f"tff(distinct_{a}_{b}, axiom, ({a} != {b})).")
    for c in constants:
        axioms.append(
            f"tff(distinct_int_{c}, axiom, ![X: $int]: ({EMBED}(X) != {c}))."
        )

    needs_order = inv.needs_order or inv.uses_inf or inv.uses_sup
    if needs_order:
        types.append(
            f"tff(p__less___type, type, {LESS}: ({GENERAL} * {GENERAL}) > $o)."
        )
        axioms.append(
            f"tff(order_irreflexive, axiom, ![X: {GENERAL}]: ~({LESS}(X, X)))."
        )
        axioms.append(
            "tff(order_transitive, axiom, "
            f"![X: {GENERAL}, Y: {GENERAL}, Z: {GENERAL}]: "
            f"(({LESS}(X, Y) & {LESS}(Y, Z)) => {LESS}(X, Z)))."
        )
        axioms.append(
            "tff(order_total, axiom, "
            f"![X: {GENERAL}, Y: {GENERAL}]: "
            f"((X = Y) | {LESS}(X, Y) | {LESS}(Y, X)))."
        )
        axioms.append(
            "tff(order_int_agreement, axiom, "
            "![X: $int, Y: $int]: "
            f"({LESS}({EMBED}(X), {EMBED}(Y)) <=> $less(X, Y)))."
        )
        for c in constants:
            axioms.append(
                f"tff(order_int_below_{c}, axiom, "
                f"![X: $int]: {LESS}({EMBED}(X), {c}))."
            )
        for i, a in enumerate(constants):
            for b in constants[i + 1 :]:
                axioms.append(f"tff(order_{a}_{b}, axiom, {LESS}({a}, {b})).")

    if inv.uses_inf:
        types.append(f"tff(c__infimum___type, type, {INFIMUM}: {GENERAL}).")
        axioms.append(
            "tff(infimum_least, axiom, "
            f"![X: {GENERAL}]: ((X = {INFIMUM}) | {LESS}({INFIMUM}, X)))."
        )
    if inv.uses_sup:
        types.append(f"tff(c__supremum___type, type, {SUPREMUM}: {GENERAL}).")
        axioms.append(
            "tff(supremum_greatest, axiom, "
            f"![X: {GENERAL}]: ((X = {SUPREMUM}) | {LESS}(X, {SUPREMUM})))."
        )

    for name in sorted(inv.placeholders):
        emitted = symbols.placeholder[name]
        types.append(
            f"tff({emitted}_type, type, {emitted}: {_sort_name(inv.placeholders[name])})."
        )

    for key in sorted(inv.predicates):
        emitted = symbols.predicate[key]
        _, arity = key
        if arity == 0:
            types.append(f"tff({emitted}_type, type, {emitted}: $o).")
        else:
            args = " * ".join([GENERAL] * arity)
            args = f"({args})" if arity > 1 else args
            types.append(f"tff({emitted}_type, type, {emitted}: {args} > $o).")

    return types, axioms


def emit(problem: TptpProblem) -> str:
    """Render a problem to TFF text; closed formulas only."""
    inv = _Inventory()
    for _, f in problem.axioms:
        _scan(f, inv)
    _scan(problem.conjecture[1], inv)

    for _, f in tuple(problem.axioms) + (problem.conjecture,):
        free = core.free_variables(f)
        if free:
            names = ", ".join(v.name for v in free)
            raise AspverifyError(f"problem formula has free variables: {names}")

    symbols = _Symbols(inv)
    emitter = _Emitter(inv, symbols)

    lines = [f"% problem: {problem.name}"]
    lines.extend(f"% {h}" for h in problem.header)
    types, std_axioms = _standard_block(inv, symbols)
    lines.extend(types)
    lines.extend(std_axioms)

    used_names: set[str] = set()

    def formula_name(base: str) -> str:
        name = _sanitize(base)
        count = 0
        while name in used_names:
            count += 1
            name = f"{_sanitize(base)}_{count}"
        used_names.add(name)
        return name

    for name, f in problem.axioms:
        lines.append(
            f"tff({formula_name(name)}, axiom, {emitter.formula(f, {})})."
        )
    cname, cformula = problem.conjecture
    lines.append(
        f"tff({formula_name(cname)}, conjecture, {emitter.formula(cformula, {})})."
    )
    return "\n".join(lines) + "\n"
