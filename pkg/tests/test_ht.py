"""Tests for the here-and-there machinery: satisfaction, equilibrium models,
the reduct oracle, the doubled-signature reduction, and strong equivalence."""

import random

import pytest

import oracles
from aspverify import (
    AspverifyError,
    HtInterpretation,
    SignatureTooLargeError,
    classical_satisfies,
    equilibrium_models,
    gamma,
    ht_satisfies,
    inclusion_axioms,
    parse_program,
    stable_models_reduct,
    strong_equivalence_claims,
)
from aspverify.claims import Direction, Role
from aspverify.fol import Atom, Or, core, neg, parse_formula
from aspverify.ht import prime
from aspverify.translate import tau_star

P = ("p",)
Q = ("q",)


def interp(here, there):
    return HtInterpretation(frozenset(here), frozenset(there))


def all_pairs(atoms):
    return [
        (h, t) for t in oracles.subsets(atoms) for h in oracles.subsets(t)
    ]


class TestSatisfaction:
    def test_atom_needs_here(self):
        assert not ht_satisfies(interp([], [P]), parse_formula("p"))
        assert ht_satisfies(interp([P], [P]), parse_formula("p"))

    def test_double_negation_differs_from_atom(self):
        i = interp([], [P])
        assert not ht_satisfies(i, parse_formula("p"))
        assert not ht_satisfies(i, parse_formula("not p"))
        assert ht_satisfies(i, parse_formula("not not p"))

    def test_total_interpretation_is_classical(self):
        rng = random.Random(31)
        for _ in range(300):
            f = oracles.random_ground_formula(rng)
            for t in oracles.subsets([P, Q]):
                assert ht_satisfies(interp(t, t), f) == classical_satisfies(t, f)

    def test_persistence(self):
        # satisfaction at <H,T> implies classical satisfaction by T
        rng = random.Random(32)
        for _ in range(300):
            f = oracles.random_ground_formula(rng)
            for h, t in all_pairs([P, Q]):
                if ht_satisfies(interp(h, t), f):
                    assert classical_satisfies(t, f)

    def test_comparisons_are_rigid(self):
        f = parse_formula("1 < 2 and c < #sup and #inf < 0")
        assert ht_satisfies(interp([], []), f)

    def test_quantifiers_rejected(self):
        f = parse_formula("forall X (p(X))")
        with pytest.raises(ValueError, match="quantified"):
            ht_satisfies(interp([], []), f)
        with pytest.raises(ValueError, match="quantified"):
            classical_satisfies(frozenset(), f)

    def test_here_must_be_inside_there(self):
        with pytest.raises(ValueError, match="subset"):
            HtInterpretation(frozenset({P}), frozenset())


class TestValidSchemas:
    def test_weak_excluded_middle(self):
        # not F or not not F holds in every interpretation
        for f in oracles.enumerate_ground_formulas(("p", "q"), 1):
            schema = Or((neg(f), neg(neg(f))))
            for h, t in all_pairs([P, Q]):
                assert ht_satisfies(interp(h, t), schema)

    def test_three_way_axiom(self):
        # F or (F -> G) or not G holds in every interpretation
        formulas = oracles.enumerate_ground_formulas(("p", "q"), 1)
        rng = random.Random(33)
        for _ in range(2000):
            f, g = rng.choice(formulas), rng.choice(formulas)
            schema = Or((f, core.Implies(f, g), neg(g)))
            for h, t in all_pairs([P, Q]):
                assert ht_satisfies(interp(h, t), schema)

    def test_excluded_middle_fails(self):
        schema = Or((Atom("p", ()), neg(Atom("p", ()))))
        assert not ht_satisfies(interp([], [P]), schema)


class TestEquilibrium:
    def test_two_implications(self):
        theory = [parse_formula("q -> p"), parse_formula("r -> p")]
        assert equilibrium_models(theory) == frozenset({frozenset()})

    def test_double_negation_gives_two_models(self):
        theory = [parse_formula("not not p -> p")]
        assert equilibrium_models(theory) == frozenset(
            {frozenset(), frozenset({P})}
        )

    def test_fact(self):
        assert equilibrium_models([parse_formula("p")]) == frozenset(
            {frozenset({P})}
        )

    def test_negative_loop_has_no_models(self):
        assert equilibrium_models([parse_formula("not p -> p")]) == frozenset()

    def test_bound_enforced(self):
        too_many = [parse_formula(" and ".join(f"p({k})" for k in range(20)))]
        with pytest.raises(SignatureTooLargeError):
            equilibrium_models(too_many)


class TestReduct:
    def test_negative_self_loop(self):
        assert stable_models_reduct(parse_program("p :- not p.")) == frozenset()

    def test_choice(self):
        assert stable_models_reduct(parse_program("{p}.")) == frozenset(
            {frozenset(), frozenset({P})}
        )

    def test_ground_arithmetic(self):
        program = parse_program("p(1..3). q(2*2) :- p(2), not p(5).")
        assert stable_models_reduct(program) == frozenset(
            {frozenset({("p", 1), ("p", 2), ("p", 3), ("q", 4)})}
        )

    def test_constraint_prunes(self):
        program = parse_program("{p}. :- not p.")
        assert stable_models_reduct(program) == frozenset({frozenset({P})})

    def test_variables_rejected(self):
        with pytest.raises(ValueError, match="variable"):
            stable_models_reduct(parse_program("p(X) :- q(X)."))

    def test_bound_enforced(self):
        with pytest.raises(SignatureTooLargeError):
            stable_models_reduct(parse_program("p(1..20)."))

    def test_agreement_with_independent_oracle(self):
        rng = random.Random(34)
        for _ in range(200):
            text = oracles.random_prop_program(rng)
            engine = oracles.nullary_names(stable_models_reduct(parse_program(text)))
            assert engine == oracles.stable_models_prop(text), text


class TestGamma:
    def test_implication_golden(self):
        assert str(gamma(parse_formula("p -> q"))) == "(p -> q) and (p' -> q')"

    def test_negation_golden(self):
        assert str(gamma(parse_formula("not p"))) == "not p and not p'"

    def test_atoms_and_disjunction_unchanged(self):
        f = parse_formula("p or q")
        assert gamma(f) == f

    def test_quantifiers_preserved(self):
        f = parse_formula("forall X (p(X) -> q(X))")
        g = gamma(f)
        assert isinstance(g, core.ForAll)

    def test_primed_input_rejected(self):
        f = core.Atom("p'", ())
        with pytest.raises(AspverifyError, match="already primed"):
            gamma(core.Implies(f, f))

    def test_prime_renames_all_predicates(self):
        f = parse_formula("p(X) and q")
        assert str(prime(f)) == "p'(X) and q'"

    def test_gamma_matches_ht_semantics(self):
        # <H,T> |= F iff the doubled world H + primed(T) |= gamma(F)
        rng = random.Random(35)
        for _ in range(500):
            f = oracles.random_ground_formula(rng)
            g = gamma(f)
            for h, t in all_pairs([P, Q]):
                doubled = frozenset(h) | frozenset({(k[0] + "'",) for k in t})
                assert ht_satisfies(interp(h, t), f) == classical_satisfies(doubled, g)


class TestInclusionAxioms:
    def test_names_roles_and_shape(self):
        axioms = inclusion_axioms([("p", 1), ("q", 0)])
        assert [a.name for a in axioms] == ["inclusion(p/1)", "inclusion(q/0)"]
        assert all(a.role == Role.AXIOM for a in axioms)
        assert all(a.direction == Direction.UNIVERSAL for a in axioms)
        assert str(axioms[0].formula) == "forall X1 (p(X1) -> p'(X1))"
        assert str(axioms[1].formula) == "q -> q'"


class TestStrongEquivalenceClaims:
    def test_claim_structure(self):
        claims = strong_equivalence_claims(
            parse_program("p :- q."), parse_program("p :- q. p :- q, p.")
        )
        names = [c.name for c in claims]
        assert names == [
            "inclusion(q/0)",
            "inclusion(p/0)",
            "strong-equivalence(forward)",
            "strong-equivalence(backward)",
        ]
        forward, backward = claims.conjectures
        assert forward.direction == Direction.FORWARD
        assert backward.direction == Direction.BACKWARD

    def test_conditional_literals_allowed(self):
        # strong equivalence needs no completion, so these are accepted
        claims = strong_equivalence_claims(
            parse_program(":- not asg(V, C) : col(C); vtx(V)."),
            parse_program(":- not asg(V, C) : col(C); vtx(V)."),
        )
        assert len(claims.conjectures) == 2


def truth_table_verdict(text1: str, text2: str) -> bool:
    """Decide the strong-equivalence claims by exhaustive doubled worlds."""
    claims = strong_equivalence_claims(parse_program(text1), parse_program(text2))
    keys = set()
    for c in claims:
        keys |= oracles.ground_atom_keys(c.formula)
    keys = sorted(keys)
    for world in oracles.subsets(keys):
        if not all(classical_satisfies(world, a.formula) for a in claims.axioms):
            continue
        if not all(classical_satisfies(world, c.formula) for c in claims.conjectures):
            return False
    return True


class TestStrongEquivalenceDecision:
    def test_redundant_rule_equivalent(self):
        assert truth_table_verdict("q :- p.", "q :- p.\nq :- p, q.")

    def test_double_negation_choice_equivalent(self):
        assert truth_table_verdict("p :- not not p.", "{p}.")

    def test_fact_versus_default_not_equivalent(self):
        assert not truth_table_verdict("p.", "p :- not q.")

    def test_separating_context(self):
        # the pair above really differs: adding q separates their answer sets
        with_fact_1 = stable_models_reduct(parse_program("p.\nq."))
        with_fact_2 = stable_models_reduct(parse_program("p :- not q.\nq."))
        assert with_fact_1 != with_fact_2

    def test_agreement_with_oracle(self):
        rng = random.Random(36)
        for _ in range(60):
            t1 = oracles.random_prop_program(rng, max_rules=3)
            t2 = oracles.random_prop_program(rng, max_rules=3)
            assert truth_table_verdict(t1, t2) == oracles.strongly_equivalent_oracle(
                t1, t2
            ), (t1, t2)
