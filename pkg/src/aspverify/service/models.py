"""Request and response models for the HTTP service.

Every endpoint takes program, specification, and formula inputs as plain
text in the request body, exactly as they would appear in files, so the
command-line client can forward file contents unchanged.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, model_validator

from .._version import VERSION


class HealthResponse(BaseModel):
    status: str = "ok"
    version: str = VERSION


class TranslateRequest(BaseModel):
    program: str


class CompleteRequest(BaseModel):
    program: str
    spec: str | None = Field(
        default=None,
        description=(
            "Specification text supplying input/output declarations; without "
            "it, predicates that no rule defines are treated as inputs."
        ),
    )


class SimplifyRequest(BaseModel):
    program: str | None = None
    formulas: str | None = Field(
        default=None, description="'.'-terminated first-order formulas"
    )

    @model_validator(mode="after")
    def _exactly_one_input(self) -> "SimplifyRequest":
        if (self.program is None) == (self.formulas is None):
            raise ValueError("provide exactly one of 'program' and 'formulas'")
        return self


class AnalyzeRequest(BaseModel):
    program: str
    spec: str | None = Field(
        default=None,
        description=(
            "Specification text supplying input/output declarations; without "
            "it, every predicate is treated as public."
        ),
    )


class TheoryResponse(BaseModel):
    formulas: list[str]


class AnalyzeResponse(BaseModel):
    predicates: list[str]
    tight: bool
    positive_cycles: list[str]
    private_recursion: bool
    private_recursion_cycles: list[str]


class VerifyRequest(BaseModel):
    equivalence: Literal["external", "strong"]
    program: str
    second: str
    second_kind: Literal["program", "spec"] = "program"
    user_guide: str | None = None
    prover_path: str | None = None
    time_limit: int = Field(default=60, ge=1)
    cores: int = Field(default=1, ge=1)
    save_problems: str | None = None
    simplify: bool = True

    @model_validator(mode="after")
    def _consistent_mode(self) -> "VerifyRequest":
        if self.equivalence == "strong" and self.second_kind == "spec":
            raise ValueError("strong equivalence compares two programs")
        if self.user_guide is not None and not (
            self.equivalence == "external" and self.second_kind == "program"
        ):
            raise ValueError(
                "user guides apply only to program-to-program verification"
            )
        return self


class ClaimOutcome(BaseModel):
    name: str
    role: str
    direction: str
    outcome: str
    wall_time: float
    status: str | None = None


class VerifyResponse(BaseModel):
    verdict: Literal["proven", "not proven"]
    claims: list[ClaimOutcome]
