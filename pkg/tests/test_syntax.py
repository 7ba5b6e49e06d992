"""Parser and AST tests for the input language."""

import random

import pytest

import oracles
from aspverify import ParseError, UnsupportedConstructError, parse_program, parse_rule
from aspverify.syntax import (
    Atom,
    BasicHead,
    BinOp,
    BinOpKind,
    ChoiceHead,
    Comparison,
    ConditionalLiteral,
    FalsityHead,
    Ground,
    Literal,
    Negate,
    Numeral,
    Polarity,
    Relation,
    SymbolicConstant,
    Variable,
    global_variables,
    local_variables,
    program_predicates,
    symbolic_constants,
)
from conftest import COLORING_CL_RULE, PRIME_PROGRAM_1, TRANSITIVE_PROGRAM


def num(v):
    return Ground(Numeral(v))


class TestRuleShapes:
    def test_fact(self):
        rule = parse_rule("p(1).")
        assert rule.head == BasicHead(Atom("p", (num(1),)))
        assert rule.body == ()

    def test_nullary_fact(self):
        assert parse_rule("p.").head == BasicHead(Atom("p", ()))

    def test_basic_rule(self):
        rule = parse_rule("p(X) :- q(X), not r(X).")
        assert rule.head == BasicHead(Atom("p", (Variable("X"),)))
        assert rule.body == (
            Literal(Polarity.POSITIVE, Atom("q", (Variable("X"),))),
            Literal(Polarity.NEGATED, Atom("r", (Variable("X"),))),
        )

    def test_double_negation(self):
        rule = parse_rule("p :- not not q.")
        assert rule.body == (Literal(Polarity.DOUBLY_NEGATED, Atom("q", ())),)

    def test_choice_rule(self):
        rule = parse_rule("{p(X)} :- q(X).")
        assert rule.head == ChoiceHead(Atom("p", (Variable("X"),)))

    def test_constraint(self):
        rule = parse_rule(":- p, q.")
        assert rule.head == FalsityHead()
        assert rule.is_constraint

    def test_comparison_in_body(self):
        rule = parse_rule("p(X) :- X = 1..3.")
        assert rule.body == (
            Comparison(
                Relation.EQ,
                Variable("X"),
                BinOp(BinOpKind.INTERVAL, num(1), num(3)),
            ),
        )

    def test_all_relations(self):
        for text, rel in [
            ("=", Relation.EQ),
            ("!=", Relation.NEQ),
            ("<", Relation.LT),
            ("<=", Relation.LEQ),
            (">", Relation.GT),
            (">=", Relation.GEQ),
        ]:
            rule = parse_rule(f"p :- 1 {text} 2.")
            assert rule.body[0].relation == rel

    def test_conditional_literal(self):
        (rule,) = parse_program(COLORING_CL_RULE).rules
        cl, vtx = rule.body
        assert isinstance(cl, ConditionalLiteral)
        assert cl.head == Literal(
            Polarity.NEGATED, Atom("asg", (Variable("V"), Variable("C")))
        )
        assert cl.conditions == (
            Literal(Polarity.POSITIVE, Atom("col", (Variable("C"),))),
        )
        assert vtx == Literal(Polarity.POSITIVE, Atom("vtx", (Variable("V"),)))

    def test_comments_and_whitespace(self):
        program = parse_program("% a comment\np.  % trailing\n\n  q :- p.\n")
        assert len(program.rules) == 2


class TestTerms:
    def test_precedence_times_over_plus(self):
        rule = parse_rule("p(1+2*3).")
        (arg,) = rule.head.atom.args
        assert arg == BinOp(
            BinOpKind.PLUS, num(1), BinOp(BinOpKind.TIMES, num(2), num(3))
        )

    def test_interval_binds_loosest(self):
        rule = parse_rule("p(1..2+3).")
        (arg,) = rule.head.atom.args
        assert arg == BinOp(
            BinOpKind.INTERVAL, num(1), BinOp(BinOpKind.PLUS, num(2), num(3))
        )

    def test_parentheses_override(self):
        rule = parse_rule("p((1+2)*3).")
        (arg,) = rule.head.atom.args
        assert arg == BinOp(
            BinOpKind.TIMES, BinOp(BinOpKind.PLUS, num(1), num(2)), num(3)
        )

    def test_unary_minus_on_numeral_folds(self):
        rule = parse_rule("p(-3).")
        assert rule.head.atom.args == (num(-3),)

    def test_unary_minus_on_variable(self):
        rule = parse_rule("p(-X).")
        assert rule.head.atom.args == (Negate(Variable("X")),)

    def test_division_and_modulo(self):
        rule = parse_rule("p(X/2, X\\2).")
        a, b = rule.head.atom.args
        assert a == BinOp(BinOpKind.DIVIDE, Variable("X"), num(2))
        assert b == BinOp(BinOpKind.MODULO, Variable("X"), num(2))

    def test_extreme_elements(self):
        rule = parse_rule("p(#inf, #sup).")
        a, b = rule.head.atom.args
        assert a == Ground(oracles.ast.Infimum())
        assert b == Ground(oracles.ast.Supremum())

    def test_symbolic_constant(self):
        rule = parse_rule("p(abc).")
        assert rule.head.atom.args == (Ground(SymbolicConstant("abc")),)


class TestVariableScoping:
    def test_global_variables(self):
        (rule,) = parse_program(COLORING_CL_RULE).rules
        assert global_variables(rule) == ["V"]

    def test_local_variables(self):
        (rule,) = parse_program(COLORING_CL_RULE).rules
        cl = rule.body[0]
        assert local_variables(cl, rule) == ["C"]

    def test_plain_rule_all_global(self):
        rule = parse_rule("p(X, Y) :- q(X), r(Y, Z).")
        assert global_variables(rule) == ["X", "Y", "Z"]


class TestProgramQueries:
    def test_program_predicates(self):
        program = parse_program(PRIME_PROGRAM_1)
        assert set(program_predicates(program)) == {("composite", 1), ("prime", 1)}

    def test_symbolic_constants(self):
        program = parse_program(PRIME_PROGRAM_1)
        assert symbolic_constants(program) == ["n"]

    def test_transitive_predicates(self):
        program = parse_program(TRANSITIVE_PROGRAM)
        assert set(program_predicates(program)) == {("edge", 2), ("transitive", 2)}


class TestRoundTrip:
    CORPUS = [
        "p(1).",
        "p :- q, not r.",
        "{p(X)} :- q(X, -Y).",
        ":- p(1..3), q(2*2).",
        "p(X) :- X = 1..3, X != 2.",
        ":- not asg(V, C) : col(C); vtx(V).",
        "p(#inf) :- q(#sup).",
        "p(X/2) :- q(X\\3).",
    ]

    @pytest.mark.parametrize("text", CORPUS)
    def test_print_parse_fixpoint(self, text):
        once = parse_program(text)
        printed = "\n".join(str(r) for r in once.rules)
        assert parse_program(printed) == once

    def test_random_programs_round_trip(self):
        rng = random.Random(404)
        for _ in range(200):
            text = oracles.random_prop_program(rng)
            once = parse_program(text)
            printed = "\n".join(str(r) for r in once.rules)
            assert parse_program(printed) == once


class TestErrors:
    def test_missing_period(self):
        with pytest.raises(ParseError) as e:
            parse_program("p :- q")
        assert "1:7" in str(e.value)

    def test_error_carries_position(self):
        with pytest.raises(ParseError) as e:
            parse_program("p.\nq :- .")
        assert "2:6" in str(e.value)

    def test_aggregates_rejected(self):
        with pytest.raises(UnsupportedConstructError):
            parse_program("p :- #count { X : q(X) } > 1.")

    def test_disjunctive_head_rejected(self):
        with pytest.raises(UnsupportedConstructError):
            parse_program("p | q :- r.")

    def test_function_symbols_rejected(self):
        with pytest.raises(UnsupportedConstructError):
            parse_program("p(f(1)).")

    def test_multi_element_choice_rejected(self):
        with pytest.raises(UnsupportedConstructError):
            parse_program("{p; q}.")

    def test_conditional_literal_in_head_rejected(self):
        with pytest.raises((UnsupportedConstructError, ParseError)):
            parse_program("p(X) : q(X) :- r.")

    def test_empty_program_is_fine(self):
        assert parse_program("").rules == ()
        assert parse_program("% only a comment\n").rules == ()
