"""Translation from programs to two-sorted first-order theories.

Every program term t is characterized by a value formula val_t(Z) that holds
of exactly the values of t; intervals and arithmetic make this a proper
relation rather than a function.  Rules become universally closed
implications over their global variables; a conditional literal becomes an
implication universally quantified over its local variables; a choice head
contributes a doubly-negated copy of the head atom to the body, which keeps
every rule an implication with an atomic consequent, the shape completion
requires.

Division convention: `/` and `\\` are translated through a quotient-remainder
pair with J != 0, I = J*Q + R and 0 <= R < |J| (Euclidean).  The bound on R
is encoded as `R < J or R < 0 - J` since the formula language has no absolute
value.  The convention is isolated here; nothing else in the package assumes
it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import fol, syntax
from .syntax import ast

_REL_MAP = {
    ast.Relation.EQ: fol.Rel.EQ,
    ast.Relation.NEQ: fol.Rel.NEQ,
    ast.Relation.LT: fol.Rel.LT,
    ast.Relation.LEQ: fol.Rel.LEQ,
    ast.Relation.GT: fol.Rel.GT,
    ast.Relation.GEQ: fol.Rel.GEQ,
}


@dataclass
class ValContext:
    """Fresh-variable allocation for one rule translation.

    Fresh names never collide with the rule's own variables: allocation
    skips every name in `taken`.  Value variables (stem Z) are always
    numbered; arithmetic witnesses (I, J, K, Q, R) use the bare stem first.
    """

    taken: set[str] = field(default_factory=set)
    counters: dict[str, int] = field(default_factory=dict)

    @classmethod
    def for_rule(cls, rule: ast.Rule) -> "ValContext":
        return cls(taken=set(syntax.rule_variables(rule)))

    def fresh(self, stem: str, sort: fol.Sort, numbered: bool = False) -> fol.Var:
        if not numbered and stem not in self.taken:
            self.taken.add(stem)
            return fol.Var(stem, sort)
        count = self.counters.get(stem, 0)
        while True:
            count += 1
            name = f"{stem}{count}"
            if name not in self.taken:
                break
        self.counters[stem] = count
        self.taken.add(name)
        return fol.Var(name, sort)

    def value_var(self) -> fol.Var:
        return self.fresh("Z", fol.Sort.GENERAL, numbered=True)

    def int_var(self, stem: str) -> fol.Var:
        return self.fresh(stem, fol.Sort.INTEGER)


def _ground_term(symbol: ast.GroundSymbol) -> fol.FoTerm:
    match symbol:
        case ast.Numeral(value):
            return fol.IntConst(value)
        case ast.SymbolicConstant(name):
            return fol.SymConst(name)
        case ast.Infimum():
            return fol.Inf()
        case ast.Supremum():
            return fol.Sup()
    raise TypeError(f"not a ground symbol: {symbol!r}")


def val_formula(t: ast.Term, z: fol.Var, ctx: ValContext | None = None) -> fol.Formula:
    """val_t(z): holds of exactly the values of t.

    A term with no values (symbolic constants under arithmetic, an empty
    interval) yields an unsatisfiable formula, not an error.
    """
    if ctx is None:
        ctx = ValContext(taken=set(syntax.term_variables(t)) | {z.name})

    def eq(a: fol.FoTerm, b: fol.FoTerm) -> fol.Formula:
        return fol.Compare(fol.Rel.EQ, a, b)

    match t:
        case ast.Ground(symbol):
            return eq(z, _ground_term(symbol))
        case ast.Variable(name):
            return eq(z, fol.Var(name, fol.Sort.GENERAL))
        case ast.Negate(operand):
            lowered = ast.BinOp(
                ast.BinOpKind.MINUS, ast.Ground(ast.Numeral(0)), operand
            )
            return val_formula(lowered, z, ctx)
        case ast.BinOp(op, left, right):
            i = ctx.int_var("I")
            j = ctx.int_var("J")
            left_val = val_formula(left, i, ctx)
            right_val = val_formula(right, j, ctx)
            if op in (ast.BinOpKind.PLUS, ast.BinOpKind.MINUS, ast.BinOpKind.TIMES):
                kind = {
                    ast.BinOpKind.PLUS: fol.IntOpKind.PLUS,
                    ast.BinOpKind.MINUS: fol.IntOpKind.MINUS,
                    ast.BinOpKind.TIMES: fol.IntOpKind.TIMES,
                }[op]
                return fol.Exists(
                    (i, j),
                    fol.And((eq(z, fol.IntOp(kind, i, j)), left_val, right_val)),
                )
            if op == ast.BinOpKind.INTERVAL:
                k = ctx.int_var("K")
                return fol.Exists(
                    (i, j, k),
                    fol.And(
                        (
                            left_val,
                            right_val,
                            fol.Compare(fol.Rel.LEQ, i, k),
                            fol.Compare(fol.Rel.LEQ, k, j),
                            eq(z, k),
                        )
                    ),
                )
            # division and modulo share the quotient-remainder scheme
            q = ctx.int_var("Q")
            r = ctx.int_var("R")
            zero = fol.IntConst(0)
            result = q if op == ast.BinOpKind.DIVIDE else r
            return fol.Exists(
                (i, j, q, r),
                fol.And(
                    (
                        left_val,
                        right_val,
                        fol.Compare(fol.Rel.NEQ, j, zero),
                        eq(
                            i,
                            fol.IntOp(
                                fol.IntOpKind.PLUS,
                                fol.IntOp(fol.IntOpKind.TIMES, j, q),
                                r,
                            ),
                        ),
                        fol.Compare(fol.Rel.LEQ, zero, r),
                        fol.Or(
                            (
                                fol.Compare(fol.Rel.LT, r, j),
                                fol.Compare(
                                    fol.Rel.LT,
                                    r,
                                    fol.IntOp(fol.IntOpKind.MINUS, zero, j),
                                ),
                            )
                        ),
                        eq(z, result),
                    )
                ),
            )
    raise TypeError(f"not a term: {t!r}")


def _atom_translation(atom: ast.Atom, polarity: ast.Polarity, ctx: ValContext) -> fol.Formula:
    zs = [ctx.value_var() for _ in atom.args]
    vals = [val_formula(t, z, ctx) for t, z in zip(atom.args, zs)]
    head: fol.Formula = fol.Atom(atom.predicate, tuple(zs))
    if polarity == ast.Polarity.NEGATED:
        head = fol.neg(head)
    elif polarity == ast.Polarity.DOUBLY_NEGATED:
        head = fol.neg(fol.neg(head))
    return fol.exists(zs, fol.conj(vals + [head]))


def _comparison_translation(cmp: ast.Comparison, ctx: ValContext) -> fol.Formula:
    z1 = ctx.value_var()
    z2 = ctx.value_var()
    return fol.Exists(
        (z1, z2),
        fol.And(
            (
                val_formula(cmp.lhs, z1, ctx),
                val_formula(cmp.rhs, z2, ctx),
                fol.Compare(_REL_MAP[cmp.relation], z1, z2),
            )
        ),
    )


def tau_body(
    elem: ast.BodyElement, rule: ast.Rule, ctx: ValContext | None = None
) -> fol.Formula:
    """Translate one body element in the context of its rule."""
    if ctx is None:
        ctx = ValContext.for_rule(rule)
    match elem:
        case ast.Literal(polarity, atom):
            return _atom_translation(atom, polarity, ctx)
        case ast.Comparison(_, _, _):
            return _comparison_translation(elem, ctx)
        case ast.ConditionalLiteral(head, conditions):
            locals_ = [
                fol.Var(name, fol.Sort.GENERAL)
                for name in syntax.local_variables(elem, rule)
            ]
            antecedent = fol.conj(tau_body(c, rule, ctx) for c in conditions)
            consequent = tau_body(head, rule, ctx)
            return fol.forall(locals_, fol.Implies(antecedent, consequent))
    raise TypeError(f"not a body element: {elem!r}")


def tau_star_rule(rule: ast.Rule) -> fol.Formula:
    """Translate one rule to a universally closed sentence."""
    ctx = ValContext.for_rule(rule)
    globals_ = [
        fol.Var(name, fol.Sort.GENERAL) for name in syntax.global_variables(rule)
    ]

    head_vals: list[fol.Formula] = []
    head_vars: list[fol.Var] = []
    consequent: fol.Formula
    extra: list[fol.Formula] = []
    match rule.head:
        case ast.FalsityHead():
            consequent = fol.Falsity()
        case ast.BasicHead(atom) | ast.ChoiceHead(atom):
            head_vars = [ctx.value_var() for _ in atom.args]
            head_vals = [
                val_formula(t, z, ctx) for t, z in zip(atom.args, head_vars)
            ]
            consequent = fol.Atom(atom.predicate, tuple(head_vars))
            if isinstance(rule.head, ast.ChoiceHead):
                extra = [fol.neg(fol.neg(consequent))]

    body = [tau_body(e, rule, ctx) for e in rule.body]
    antecedent = fol.conj(head_vals + body + extra)
    return fol.forall(globals_ + head_vars, fol.Implies(antecedent, consequent))


def tau_star(program: ast.Program) -> fol.Theory:
    """Translate a whole program, rule by rule, in source order."""
    return fol.Theory(tuple(tau_star_rule(rule) for rule in program))
