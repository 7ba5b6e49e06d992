"""Tests for typed first-order problem emission.

Every emitted problem in this file is additionally run through the
independent syntax and sort checker in tff_checker.py, so the goldens
cannot drift into ill-formed output.
"""

from __future__ import annotations

import pytest

import tff_checker
from aspverify.errors import AspverifyError
from aspverify.fol import Sort, parse_formula
from aspverify.fol.core import Placeholder, Atom
from aspverify.ht import prime
from aspverify.tptp import TptpProblem, emit


def _emit(name, axioms, conjecture, header=()):
    problem = TptpProblem(
        name,
        tuple((n, parse_formula(f) if isinstance(f, str) else f) for n, f in axioms),
        (
            conjecture[0],
            parse_formula(conjecture[1])
            if isinstance(conjecture[1], str)
            else conjecture[1],
        ),
        header=tuple(header),
    )
    text = emit(problem)
    assert tff_checker.check_problem(text) == []
    return text


class TestStandardBlock:
    def test_always_declares_general_and_embedding(self):
        text = _emit("tiny", (), ("goal", "p"))
        assert "tff(general_type, type, general: $tType)." in text
        assert "tff(f__integer___type, type, f__integer__: $int > general)." in text
        assert (
            "tff(f__integer___injective, axiom, ![X: $int, Y: $int]: "
            "((f__integer__(X) = f__integer__(Y)) => (X = Y)))." in text
        )

    def test_predicate_declarations_by_arity(self):
        text = _emit("arity", (), ("goal", "p and q(1) and r(a, 2)"))
        assert "tff(p_type, type, p: $o)." in text
        assert "tff(q_type, type, q: general > $o)." in text
        assert "tff(r_type, type, r: (general * general) > $o)." in text

    def test_header_comments(self):
        text = _emit("hdr", (), ("goal", "p"), header=("tool version: 0.1.0", "claim: demo"))
        lines = text.splitlines()
        assert lines[0] == "% problem: hdr"
        assert lines[1] == "% tool version: 0.1.0"
        assert lines[2] == "% claim: demo"


class TestGoldenProblems:
    def test_integer_problem(self):
        text = _emit("ints", (), ("goal", "forall N$i (N$i >= 2 -> p(N$i * N$i))"))
        assert text == (
            "% problem: ints\n"
            "tff(general_type, type, general: $tType).\n"
            "tff(f__integer___type, type, f__integer__: $int > general).\n"
            "tff(p_type, type, p: general > $o).\n"
            "tff(f__integer___injective, axiom, ![X: $int, Y: $int]: "
            "((f__integer__(X) = f__integer__(Y)) => (X = Y))).\n"
            "tff(goal, conjecture, ![N: $int]: (($greatereq(N, 2) => "
            "p(f__integer__($product(N, N)))))).\n"
        )

    def test_order_problem(self):
        text = _emit(
            "order-demo",
            (("guard", "forall X (X < a -> q(X))"),),
            ("goal", "q(b) or #inf <= 3"),
        )
        assert text == (
            "% problem: order-demo\n"
            "tff(general_type, type, general: $tType).\n"
            "tff(f__integer___type, type, f__integer__: $int > general).\n"
            "tff(s__a_type, type, s__a: general).\n"
            "tff(s__b_type, type, s__b: general).\n"
            "tff(p__less___type, type, p__less__: (general * general) > $o).\n"
            "tff(c__infimum___type, type, c__infimum__: general).\n"
            "tff(q_type, type, q: general > $o).\n"
            "tff(f__integer___injective, axiom, ![X: $int, Y: $int]: "
            "((f__integer__(X) = f__integer__(Y)) => (X = Y))).\n"
            "tff(distinct_s__a_s__b, axiom, (s__a != s__b)).\n"
            "tff(distinct_int_s__a, axiom, ![X: $int]: (f__integer__(X) != s__a)).\n"
            "tff(distinct_int_s__b, axiom, ![X: $int]: (f__integer__(X) != s__b)).\n"
            "tff(order_irreflexive, axiom, ![X: general]: ~(p__less__(X, X))).\n"
            "tff(order_transitive, axiom, ![X: general, Y: general, Z: general]: "
            "((p__less__(X, Y) & p__less__(Y, Z)) => p__less__(X, Z))).\n"
            "tff(order_total, axiom, ![X: general, Y: general]: "
            "((X = Y) | p__less__(X, Y) | p__less__(Y, X))).\n"
            "tff(order_int_agreement, axiom, ![X: $int, Y: $int]: "
            "(p__less__(f__integer__(X), f__integer__(Y)) <=> $less(X, Y))).\n"
            "tff(order_int_below_s__a, axiom, ![X: $int]: "
            "p__less__(f__integer__(X), s__a)).\n"
            "tff(order_int_below_s__b, axiom, ![X: $int]: "
            "p__less__(f__integer__(X), s__b)).\n"
            "tff(order_s__a_s__b, axiom, p__less__(s__a, s__b)).\n"
            "tff(infimum_least, axiom, ![X: general]: "
            "((X = c__infimum__) | p__less__(c__infimum__, X))).\n"
            "tff(guard, axiom, ![X: general]: ((p__less__(X, s__a) => q(X)))).\n"
            "tff(goal, conjecture, (q(s__b) | (p__less__(c__infimum__, f__integer__(3)) "
            "| (c__infimum__ = f__integer__(3))))).\n"
        )


class TestFormulaRendering:
    def test_integers_embedded_in_general_positions(self):
        text = _emit("embed", (), ("goal", "p(1) and forall N$i (q(N$i))"))
        assert "p(f__integer__(1))" in text
        assert "q(f__integer__(N))" in text

    def test_arithmetic_uses_dollar_words(self):
        text = _emit(
            "arith",
            (),
            ("goal", "forall N$i (N$i + 1 = 2 and N$i - 1 = 0 and N$i * N$i < 9)"),
        )
        assert "($sum(N, 1) = 2)" in text
        assert "($difference(N, 1) = 0)" in text
        assert "$less($product(N, N), 9)" in text

    def test_integer_relations(self):
        text = _emit(
            "rels",
            (),
            ("goal", "forall N$i (N$i < 1 and N$i <= 2 and N$i > 3 and N$i >= 4 and N$i != 5)"),
        )
        assert "$less(N, 1)" in text
        assert "$lesseq(N, 2)" in text
        assert "$greater(N, 3)" in text
        assert "$greatereq(N, 4)" in text
        assert "(N != 5)" in text

    def test_general_order_expansions(self):
        text = _emit("gen-rels", (), ("goal", "forall X Y (X <= Y -> not (Y < X))"))
        assert "(p__less__(X, Y) | (X = Y))" in text
        assert "~(p__less__(Y, X))" in text

    def test_negation_renders_as_tilde(self):
        text = _emit("neg", (), ("goal", "not p"))
        assert "tff(goal, conjecture, ~(p))." in text

    def test_nested_quantifier_shadowing_renamed(self):
        text = _emit("shadow", (), ("goal", "forall X (p(X) and exists X (q(X)))"))
        assert "![X: general]: ((p(X) & ?[X0: general]: (q(X0))))" in text


class TestSymbolTable:
    def test_symbolic_constants_prefixed_and_distinct(self):
        text = _emit("syms", (), ("goal", "p(a) and p(b) and p(c)"))
        assert "tff(s__a_type, type, s__a: general)." in text
        assert "tff(distinct_s__a_s__b, axiom, (s__a != s__b))." in text
        assert "tff(distinct_s__a_s__c, axiom, (s__a != s__c))." in text
        assert "tff(distinct_s__b_s__c, axiom, (s__b != s__c))." in text
        assert "tff(distinct_int_s__a, axiom, ![X: $int]: (f__integer__(X) != s__a))." in text

    def test_primed_predicates_mangled(self):
        f = prime(parse_formula("p and q(1)"))
        text = _emit("primed", (("doubled", f),), ("goal", "p"))
        assert "tff(p__prime_type, type, p__prime: $o)." in text
        assert "(p__prime & q__prime(f__integer__(1)))" in text

    def test_placeholder_keeps_name_and_skips_distinctness(self):
        f = parse_formula("n > 0 and exists X (X = n)", placeholders={"n": Sort.INTEGER})
        text = _emit("ph", (), ("goal", f))
        assert "tff(n_type, type, n: $int)." in text
        assert "$greater(n, 0)" in text
        assert "(X = f__integer__(n))" in text
        assert "distinct_n" not in text and "distinct_int_n" not in text

    def test_reserved_names_renamed(self):
        text = _emit("clash", (), ("goal", "general and f__integer__"))
        assert "tff(general_1_type, type, general_1: $o)." in text
        assert "tff(f__integer___1_type, type, f__integer___1: $o)." in text
        assert "tff(goal, conjecture, (general_1 & f__integer___1))." in text

    def test_axiom_names_sanitized_and_deduplicated(self):
        text = _emit(
            "names",
            (("strong-equivalence(forward)", "p"), ("ax", "p"), ("ax", "q")),
            ("goal", "p"),
        )
        assert "tff(strong_equivalence_forward_, axiom, p)." in text
        assert "tff(ax, axiom, p)." in text
        assert "tff(ax_1, axiom, q)." in text


class TestOrderBlock:
    def test_absent_for_integer_only_problems(self):
        text = _emit("no-order", (), ("goal", "forall N$i (N$i < 3 -> p(N$i))"))
        assert "p__less__" not in text
        assert "order_total" not in text
        assert "c__infimum__" not in text

    def test_absent_for_general_equality_only(self):
        text = _emit("eq-only", (), ("goal", "forall X (X = a or X != a)"))
        assert "p__less__" not in text

    def test_triggered_by_general_comparison(self):
        text = _emit("cmp", (), ("goal", "forall X (X < a -> p(X))"))
        assert "tff(p__less___type, type, p__less__: (general * general) > $o)." in text
        assert "order_irreflexive" in text
        assert "order_transitive" in text
        assert "order_total" in text
        assert "order_int_agreement" in text
        assert "tff(order_int_below_s__a, axiom, ![X: $int]: p__less__(f__integer__(X), s__a))." in text

    def test_triggered_by_extremes(self):
        text = _emit("sup", (), ("goal", "p(#sup) and 1 < #sup"))
        assert "tff(c__supremum___type, type, c__supremum__: general)." in text
        assert (
            "tff(supremum_greatest, axiom, ![X: general]: "
            "((X = c__supremum__) | p__less__(X, c__supremum__)))." in text
        )

    def test_symbolic_constants_ordered_lexicographically(self):
        text = _emit("lex", (), ("goal", "b < a"))
        assert "tff(order_s__a_s__b, axiom, p__less__(s__a, s__b))." in text
        assert "tff(goal, conjecture, p__less__(s__b, s__a))." in text


class TestErrors:
    def test_free_variables_rejected(self):
        problem = TptpProblem("free", (), ("goal", parse_formula("p(X)")))
        with pytest.raises(AspverifyError, match="free variables: X"):
            emit(problem)

    def test_placeholder_sort_conflict_rejected(self):
        mixed = TptpProblem(
            "conflict",
            (("one", Atom("p", (Placeholder("n", Sort.INTEGER),))),),
            ("goal", Atom("p", (Placeholder("n", Sort.GENERAL),))),
        )
        with pytest.raises(AspverifyError, match="placeholder n used at two sorts"):
            emit(mixed)


class TestDeterminism:
    def test_bit_identical_reruns(self):
        def build():
            return _emit(
                "det",
                (("guard", "forall X (X < a -> q(X))"),),
                ("goal", "q(b) or exists N$i (N$i = 7 and p(N$i))"),
            )

        assert build() == build()
