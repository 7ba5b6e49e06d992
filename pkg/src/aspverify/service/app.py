"""HTTP service exposing the verification pipelines.

The service is a thin layer over the library: each endpoint parses its
inputs, calls the corresponding pipeline, and returns a JSON rendering of
the result.  Input and analysis problems map to 422 responses, a missing
prover executable to 503; both carry a human-readable `detail` field.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import completion, ht, translate, verify
from .._version import VERSION
from ..completion import IoSignature
from ..errors import AspverifyError, ProverNotFoundError
from ..fol import core, parse_formulas
from ..simplify import simplify
from ..syntax import ast, parse_program
from .models import (
    AnalyzeRequest,
    AnalyzeResponse,
    CompleteRequest,
    HealthResponse,
    SimplifyRequest,
    TheoryResponse,
    TranslateRequest,
    VerifyRequest,
    VerifyResponse,
)


def _spec_or_empty(text: str | None) -> verify.SpecificationFile:
    return verify.parse_spec(text) if text is not None else verify.EMPTY_SPEC


def _default_complete_io(program: ast.Program) -> IoSignature:
    """Without declarations, predicates that no rule defines are inputs."""
    defined = set()
    for rule in program:
        head = ast.head_atom(rule)
        if head is not None:
            defined.add((head.predicate, head.arity))
    undefined = [p for p in ast.program_predicates(program) if p not in defined]
    return IoSignature(inputs=frozenset(undefined))


def _all_public_io(*programs: ast.Program) -> IoSignature:
    outputs = []
    for program in programs:
        outputs.extend(ast.program_predicates(program))
    return IoSignature(outputs=frozenset(outputs))


def _theory_response(formulas) -> TheoryResponse:
    return TheoryResponse(formulas=[core.formula_to_str(f) for f in formulas])


def create_app() -> FastAPI:
    app = FastAPI(
        title="aspverify",
        version=VERSION,
        description=(
            "Verification toolchain for answer-set programs: translation to "
            "two-sorted first-order theories, completion, dependency "
            "analysis, simplification, and equivalence verification through "
            "an external theorem prover."
        ),
    )

    @app.exception_handler(AspverifyError)
    def _tool_error(request: Request, exc: AspverifyError) -> JSONResponse:
        status = 503 if isinstance(exc, ProverNotFoundError) else 422
        return JSONResponse(status_code=status, content={"detail": str(exc)})

    @app.exception_handler(ValueError)
    def _value_error(request: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse()

    @app.post("/translate", response_model=TheoryResponse)
    def translate_endpoint(request: TranslateRequest) -> TheoryResponse:
        theory = translate.tau_star(parse_program(request.program))
        return _theory_response(theory)

    @app.post("/complete", response_model=TheoryResponse)
    def complete_endpoint(request: CompleteRequest) -> TheoryResponse:
        program = parse_program(request.program)
        if request.spec is not None:
            io = verify.parse_spec(request.spec).io
        else:
            io = _default_complete_io(program)
        graph = completion.dependency_graph(program)
        theory = translate.tau_star(program)
        completed = completion.complete(theory, io, graph=graph)
        return _theory_response(completed)

    @app.post("/simplify", response_model=TheoryResponse)
    def simplify_endpoint(request: SimplifyRequest) -> TheoryResponse:
        if request.program is not None:
            formulas = list(translate.tau_star(parse_program(request.program)))
        else:
            formulas = parse_formulas(request.formulas)
        return _theory_response(simplify(f) for f in formulas)

    @app.post("/analyze", response_model=AnalyzeResponse)
    def analyze_endpoint(request: AnalyzeRequest) -> AnalyzeResponse:
        program = parse_program(request.program)
        io = _spec_or_empty(request.spec).io if request.spec is not None else None
        graph = completion.dependency_graph(program)
        positive = completion.positive_cycles(graph)
        if io is not None:
            private = completion.private_recursion_cycles(graph, io)
        else:
            private = []
        return AnalyzeResponse(
            predicates=[completion.format_predicate(p) for p in graph.vertices],
            tight=not positive,
            positive_cycles=[" -> ".join(c) for c in positive],
            private_recursion=bool(private),
            private_recursion_cycles=[" -> ".join(c) for c in private],
        )

    @app.post("/verify", response_model=VerifyResponse)
    def verify_endpoint(request: VerifyRequest) -> VerifyResponse:
        program = parse_program(request.program)
        if request.equivalence == "strong":
            claims = ht.strong_equivalence_claims(
                program, parse_program(request.second)
            )
        elif request.second_kind == "spec":
            claims = verify.external_equivalence_claims(
                program, verify.parse_spec(request.second)
            )
        else:
            second = parse_program(request.second)
            guide = (
                verify.parse_spec(request.user_guide)
                if request.user_guide is not None
                else None
            )
            io = guide.io if guide is not None else _all_public_io(program, second)
            claims = verify.program_to_program_claims(program, second, io, guide)
        if request.simplify:
            claims = claims.simplified(simplify)
        config = verify.ProverConfig(
            path=request.prover_path,
            time_limit=request.time_limit,
            cores=request.cores,
            save_problems=request.save_problems,
        )
        report = verify.run(claims, config)
        return VerifyResponse(**report.to_dict())

    return app
