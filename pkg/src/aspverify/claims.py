"""Proof outlines: ordered sequences of axioms, lemmas, and conjectures.

A claim's proof task may use as premises every axiom of compatible direction
plus every *lemma* of compatible direction that precedes it and has been
proven; conjectures never serve as premises, which keeps them independent of
one another and makes parallel dispatch sound.  A universal claim or axiom
is compatible with both directions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .fol import core


class Role(enum.Enum):
    AXIOM = "axiom"
    LEMMA = "lemma"
    CONJECTURE = "conjecture"


class Direction(enum.Enum):
    FORWARD = "forward"
    BACKWARD = "backward"
    UNIVERSAL = "universal"


def compatible(premise: Direction, claim: Direction) -> bool:
    return premise == Direction.UNIVERSAL or premise == claim


@dataclass(frozen=True)
class Claim:
    name: str
    role: Role
    formula: core.Formula
    direction: Direction = Direction.UNIVERSAL


@dataclass(frozen=True)
class ClaimSequence:
    claims: tuple[Claim, ...]

    def __post_init__(self):
        names = [c.name for c in self.claims]
        if len(set(names)) != len(names):
            raise ValueError("claim names must be unique")

    def __iter__(self):
        return iter(self.claims)

    def __len__(self) -> int:
        return len(self.claims)

    @property
    def axioms(self) -> tuple[Claim, ...]:
        return tuple(c for c in self.claims if c.role == Role.AXIOM)

    @property
    def lemmas(self) -> tuple[Claim, ...]:
        return tuple(c for c in self.claims if c.role == Role.LEMMA)

    @property
    def conjectures(self) -> tuple[Claim, ...]:
        return tuple(c for c in self.claims if c.role == Role.CONJECTURE)

    def provable(self) -> tuple[Claim, ...]:
        """Claims that need a prover run, in sequence order."""
        return tuple(c for c in self.claims if c.role != Role.AXIOM)

    def potential_premises(self, claim: Claim) -> tuple[Claim, ...]:
        """Axioms and earlier lemmas of compatible direction.

        Which of the lemmas actually become premises depends on their prover
        outcome; the orchestrator filters this list down to the proven ones.
        """
        position = self.claims.index(claim)
        out = [
            c
            for c in self.claims
            if c.role == Role.AXIOM and compatible(c.direction, claim.direction)
        ]
        out.extend(
            c
            for i, c in enumerate(self.claims)
            if i < position
            and c.role == Role.LEMMA
            and compatible(c.direction, claim.direction)
        )
        return tuple(out)

    def unused_lemmas(self) -> tuple[Claim, ...]:
        """Lemmas that no later claim could ever use as a premise."""
        unused = []
        for i, lemma in enumerate(self.claims):
            if lemma.role != Role.LEMMA:
                continue
            later = self.claims[i + 1 :]
            if not any(
                c.role != Role.AXIOM and compatible(lemma.direction, c.direction)
                for c in later
            ):
                unused.append(lemma)
        return tuple(unused)

    def simplified(self, simplify_fn) -> "ClaimSequence":
        return ClaimSequence(
            tuple(
                Claim(c.name, c.role, simplify_fn(c.formula), c.direction)
                for c in self.claims
            )
        )
