"""Verification task assembly, prover orchestration, and reporting.

Three layers live here.  `parse_spec` reads specification files: input/output
declarations, placeholder declarations, assumptions, specification formulas,
and directed lemmas.  `external_equivalence_claims` and
`program_to_program_claims` assemble proof outlines (claim sequences) whose
provability establishes that a program matches a specification, or that two
programs have the same external behavior over all intended inputs.  `run`
drives an external theorem prover over the outline: each claim is emitted as
a typed first-order problem, the prover is invoked as a subprocess with a
time limit, and its SZS status line is mapped to an outcome.

Claim assembly relies on completion, so programs must be tight, free of
private recursion, and free of conditional literals; violations surface as
analysis errors before any prover runs.  Private predicates are kept via
their completed definitions, renamed fresh so the two sides of a task can
never capture each other's internals.

The orchestrator respects outline order: a claim is dispatched only after
every earlier lemma of compatible direction is settled, proven lemmas join
the claim's premises, and an unproven lemma marks its dependent claims
"skipped" while independent claims still run.  Up to `cores` prover subprocesses run
concurrently; the report always lists claims in outline order.
"""

from __future__ import annotations

import enum
import os
import re
import shutil
import subprocess
import tempfile
import time
from concurrent import futures
from dataclasses import dataclass
from pathlib import Path

from . import completion, fol, translate, tptp
from ._version import VERSION
from .claims import Claim, ClaimSequence, Direction, Role
from .completion import EMPTY_IO, IoSignature, Predicate, format_predicate
from .errors import (
    AnalysisError,
    AspverifyError,
    ParseError,
    ProverNotFoundError,
    VocabularyError,
)
from .fol import core
from .syntax import ast

PROVER_ENV_VAR = "ASPVERIFY_PROVER"
KNOWN_PROVERS = ("vampire", "eprover")


# ---------------------------------------------------------------------------
# specification files


@dataclass(frozen=True)
class SpecificationFile:
    """Parsed contents of a `.spec` file.

    Assumptions characterize the intended inputs; specs state what the
    program's outputs must satisfy; lemmas are user-supplied stepping stones,
    each tagged with the direction whose proofs it may support.
    """

    io: IoSignature = EMPTY_IO
    assumptions: tuple[core.Formula, ...] = ()
    specs: tuple[core.Formula, ...] = ()
    lemmas: tuple[tuple[Direction, core.Formula], ...] = ()


EMPTY_SPEC = SpecificationFile()

_DIRECTIVE = re.compile(r"([a-z]+)\s*(?:\(\s*([a-z]+)\s*\))?\s*:")
_PREDICATE_DECL = re.compile(r"([a-z][A-Za-z0-9_]*)\s*/\s*(\d+)\Z")
_PLACEHOLDER_DECL = re.compile(r"([a-z][A-Za-z0-9_]*)\s*->\s*(integer|general)\Z")

_DIRECTIVE_NAMES = ("input", "output", "assumption", "spec", "lemma")


def _directive_chunks(text: str) -> list[tuple[str, int, int]]:
    """Split into '.'-terminated directives, keeping start positions.

    '%' starts a comment running to end of line.  The split is textual: no
    construct of the directive language contains a '.' other than the
    terminator.
    """
    chunks: list[tuple[str, int, int]] = []
    buf: list[str] = []
    start: tuple[int, int] | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        content = raw.split("%", 1)[0]
        for i, ch in enumerate(content):
            if ch == ".":
                if start is None:
                    raise ParseError("unexpected '.'", lineno, i + 1, ("a directive",))
                chunks.append(("".join(buf), start[0], start[1]))
                buf = []
                start = None
            else:
                if start is None and not ch.isspace():
                    start = (lineno, i + 1)
                if start is not None:
                    buf.append(ch)
        if start is not None:
            buf.append("\n")
    if start is not None:
        raise ParseError(
            "directive not terminated by '.'", start[0], start[1], ("'.'",)
        )
    return chunks


def _formula_position(chunk: str, offset: int, line: int, column: int) -> tuple[int, int]:
    """Absolute position of chunk[offset], given the chunk's own position."""
    prefix = chunk[:offset]
    extra = prefix.count("\n")
    if extra == 0:
        return line, column + len(prefix)
    return line + extra, len(prefix) - prefix.rfind("\n")


def _parse_directive_formula(
    body: str,
    placeholders: dict[str, fol.Sort],
    line: int,
    column: int,
) -> core.Formula:
    try:
        return fol.parse_formula(body, placeholders)
    except ParseError as e:
        if e.line == 1:
            position = (line, column + e.column - 1)
        else:
            position = (line + e.line - 1, e.column)
        raise ParseError(e.message, position[0], position[1], e.expected) from None


def parse_spec(text: str) -> SpecificationFile:
    """Parse a specification file.

    Directives: `input: p/1.`, `output: q/2.`, `input: n -> integer.`,
    `assumption: <formula>.`, `spec: <formula>.`,
    `lemma(forward|backward|universal): <formula>.` (bare `lemma:` means
    universal).  Declarations may appear in any order relative to the
    formulas that use them.  Every formula must be closed and may mention
    only declared predicates and placeholders.
    """
    chunks = _directive_chunks(text)

    parsed: list[tuple[str, Direction | None, str, int, int]] = []
    for chunk, line, column in chunks:
        m = _DIRECTIVE.match(chunk)
        if m is None or m.group(1) not in _DIRECTIVE_NAMES:
            raise ParseError(
                "unknown directive",
                line,
                column,
                tuple(f"{n}:" for n in _DIRECTIVE_NAMES),
            )
        name, argument = m.group(1), m.group(2)
        direction: Direction | None = None
        if name == "lemma":
            try:
                direction = Direction(argument) if argument else Direction.UNIVERSAL
            except ValueError:
                raise ParseError(
                    f"unknown lemma direction '{argument}'",
                    line,
                    column,
                    ("forward", "backward", "universal"),
                ) from None
        elif argument is not None:
            raise ParseError(
                f"directive '{name}' takes no argument", line, column, ()
            )
        body_line, body_column = _formula_position(chunk, m.end(), line, column)
        parsed.append((name, direction, chunk[m.end() :].rstrip(), body_line, body_column))

    # first pass: declarations
    inputs: dict[Predicate, None] = {}
    outputs: dict[Predicate, None] = {}
    placeholders: dict[str, fol.Sort] = {}
    for name, _, body, line, column in parsed:
        if name not in ("input", "output"):
            continue
        decl = body.strip()
        pm = _PREDICATE_DECL.match(decl)
        if pm is not None:
            predicate = (pm.group(1), int(pm.group(2)))
            here, there = (inputs, outputs) if name == "input" else (outputs, inputs)
            if predicate in there:
                raise ParseError(
                    f"{format_predicate(predicate)} declared both input and output",
                    line,
                    column,
                    (),
                )
            here.setdefault(predicate)
            continue
        hm = _PLACEHOLDER_DECL.match(decl)
        if hm is not None:
            if name == "output":
                raise ParseError(
                    "placeholders must be declared as inputs", line, column, ()
                )
            constant, sort = hm.group(1), hm.group(2)
            if constant in placeholders:
                raise ParseError(
                    f"placeholder '{constant}' declared twice", line, column, ()
                )
            placeholders[constant] = (
                fol.Sort.INTEGER if sort == "integer" else fol.Sort.GENERAL
            )
            continue
        raise ParseError(
            f"malformed {name} declaration",
            line,
            column,
            ("name/arity", "name -> integer", "name -> general"),
        )

    # second pass: formulas
    declared = set(inputs) | set(outputs)
    assumptions: list[core.Formula] = []
    specs: list[core.Formula] = []
    lemmas: list[tuple[Direction, core.Formula]] = []
    for name, direction, body, line, column in parsed:
        if name in ("input", "output"):
            continue
        f = _parse_directive_formula(body, placeholders, line, column)
        free = core.free_variables(f)
        if free:
            names = ", ".join(v.name for v in free)
            raise ParseError(
                f"{name} formula has free variables: {names}", line, column, ()
            )
        for predicate in core.predicates(f):
            if predicate not in declared:
                raise VocabularyError(
                    f"{name} formula mentions undeclared predicate "
                    f"{format_predicate(predicate)}"
                )
        if name == "assumption":
            assumptions.append(f)
        elif name == "spec":
            specs.append(f)
        else:
            lemmas.append((direction, f))

    return SpecificationFile(
        IoSignature(
            frozenset(inputs), frozenset(outputs), tuple(sorted(placeholders.items()))
        ),
        tuple(assumptions),
        tuple(specs),
        tuple(lemmas),
    )


# ---------------------------------------------------------------------------
# claim assembly


def _with_placeholders(f: core.Formula, sorts: dict[str, fol.Sort]) -> core.Formula:
    """Replace symbolic constants declared as placeholders by placeholder
    terms of the declared sort (program text has no placeholder syntax)."""
    if not sorts:
        return f

    def replace(t: core.FoTerm) -> core.FoTerm:
        match t:
            case core.SymConst(name) if name in sorts:
                return core.Placeholder(name, sorts[name])
        return t

    return core.map_terms(f, replace)


def _defined_predicate(f: core.Formula) -> Predicate | None:
    """The predicate a completed definition defines, or None for constraints."""
    g = f
    while isinstance(g, core.ForAll):
        g = g.body
    match g:
        case core.Iff(core.Atom(name, args), _):
            return (name, len(args))
    return None


@dataclass(frozen=True)
class _SplitCompletion:
    public: tuple[tuple[Predicate, core.Formula], ...]
    private: tuple[tuple[Predicate, core.Formula], ...]
    constraints: tuple[core.Formula, ...]


def _complete_and_split(program: ast.Program, io: IoSignature) -> _SplitCompletion:
    graph = completion.dependency_graph(program)
    theory = translate.tau_star(program)
    completed = completion.complete(theory, io, graph=graph)
    public: list[tuple[Predicate, core.Formula]] = []
    private: list[tuple[Predicate, core.Formula]] = []
    constraints: list[core.Formula] = []
    for f in completed:
        key = _defined_predicate(f)
        if key is None:
            constraints.append(f)
        elif io.is_public(key):
            public.append((key, f))
        else:
            private.append((key, f))
    return _SplitCompletion(tuple(public), tuple(private), tuple(constraints))


def _predicate_names(formulas) -> set[str]:
    names: set[str] = set()
    for f in formulas:
        names.update(name for name, _ in core.predicates(f))
    return names


def _private_renaming(
    privates: tuple[tuple[Predicate, core.Formula], ...],
    suffix: str,
    taken: set[str],
) -> dict[Predicate, str]:
    mapping: dict[Predicate, str] = {}
    for (name, arity), _ in privates:
        fresh = core.fresh_name(f"{name}{suffix}", taken)
        taken.add(fresh)
        mapping[(name, arity)] = fresh
    return mapping


def external_equivalence_claims(
    program: ast.Program, spec: SpecificationFile
) -> ClaimSequence:
    """Proof outline reducing program-vs-specification equivalence to
    classical entailment.

    Axioms: assumptions (universal), completed private definitions renamed
    fresh (universal), the completion's public part (forward), the spec
    formulas (backward).  Conjectures: each spec formula proven forward from
    the completion, and each public definition and constraint proven backward
    from the specs.  User lemmas precede all conjectures, in file order.
    """
    split = _complete_and_split(program, spec.io)
    sorts = spec.io.placeholder_sorts()

    taken = _predicate_names(
        [f for _, f in split.public]
        + [f for _, f in split.private]
        + list(split.constraints)
        + list(spec.assumptions)
        + list(spec.specs)
        + [f for _, f in spec.lemmas]
    )
    mapping = _private_renaming(split.private, "_private", taken)

    def prep(f: core.Formula) -> core.Formula:
        return _with_placeholders(core.rename_predicates(f, mapping), sorts)

    claims: list[Claim] = []
    for i, f in enumerate(spec.assumptions, 1):
        claims.append(Claim(f"assumption({i})", Role.AXIOM, f, Direction.UNIVERSAL))
    for (key, f) in split.private:
        claims.append(
            Claim(
                f"private({format_predicate(key)})",
                Role.AXIOM,
                prep(f),
                Direction.UNIVERSAL,
            )
        )
    for (key, f) in split.public:
        claims.append(
            Claim(
                f"definition({format_predicate(key)})",
                Role.AXIOM,
                prep(f),
                Direction.FORWARD,
            )
        )
    for i, f in enumerate(split.constraints, 1):
        claims.append(Claim(f"constraint({i})", Role.AXIOM, prep(f), Direction.FORWARD))
    for i, f in enumerate(spec.specs, 1):
        claims.append(Claim(f"spec({i})", Role.AXIOM, f, Direction.BACKWARD))
    for i, (direction, f) in enumerate(spec.lemmas, 1):
        claims.append(Claim(f"lemma({i})", Role.LEMMA, f, direction))
    for i, f in enumerate(spec.specs, 1):
        claims.append(Claim(f"forward(spec {i})", Role.CONJECTURE, f, Direction.FORWARD))
    for (key, f) in split.public:
        claims.append(
            Claim(
                f"backward({format_predicate(key)})",
                Role.CONJECTURE,
                prep(f),
                Direction.BACKWARD,
            )
        )
    for i, f in enumerate(split.constraints, 1):
        claims.append(
            Claim(
                f"backward(constraint {i})",
                Role.CONJECTURE,
                prep(f),
                Direction.BACKWARD,
            )
        )
    return ClaimSequence(tuple(claims))


def program_to_program_claims(
    program1: ast.Program,
    program2: ast.Program,
    io: IoSignature,
    guide: SpecificationFile | None = None,
) -> ClaimSequence:
    """Proof outline reducing external equivalence of two programs over a
    shared io signature to classical entailment.

    Forward claims derive program 2's completed public part from program 1's;
    backward claims derive program 1's from program 2's.  Privates of the two
    programs are renamed apart.  An optional user guide contributes
    assumptions and lemmas; its own io declarations are ignored here because
    the signature is passed explicitly.
    """
    guide = guide if guide is not None else EMPTY_SPEC
    if guide.specs:
        raise AnalysisError("spec directives are not allowed in a user guide")

    split1 = _complete_and_split(program1, io)
    split2 = _complete_and_split(program2, io)
    sorts = io.placeholder_sorts()

    taken = _predicate_names(
        [f for _, f in split1.public + split1.private + split2.public + split2.private]
        + list(split1.constraints)
        + list(split2.constraints)
        + list(guide.assumptions)
        + [f for _, f in guide.lemmas]
    )
    mapping1 = _private_renaming(split1.private, "_1", taken)
    mapping2 = _private_renaming(split2.private, "_2", taken)
    shared = set(mapping1.values()) & set(mapping2.values())
    if shared:
        raise AssertionError(f"shared private symbol after renaming: {shared}")

    def prep1(f: core.Formula) -> core.Formula:
        return _with_placeholders(core.rename_predicates(f, mapping1), sorts)

    def prep2(f: core.Formula) -> core.Formula:
        return _with_placeholders(core.rename_predicates(f, mapping2), sorts)

    claims: list[Claim] = []
    for i, f in enumerate(guide.assumptions, 1):
        claims.append(Claim(f"assumption({i})", Role.AXIOM, f, Direction.UNIVERSAL))
    for side, split, prep in (("1", split1, prep1), ("2", split2, prep2)):
        for (key, f) in split.private:
            claims.append(
                Claim(
                    f"private-{side}({format_predicate(key)})",
                    Role.AXIOM,
                    prep(f),
                    Direction.UNIVERSAL,
                )
            )
    for (key, f) in split1.public:
        claims.append(
            Claim(
                f"program-1({format_predicate(key)})",
                Role.AXIOM,
                prep1(f),
                Direction.FORWARD,
            )
        )
    for i, f in enumerate(split1.constraints, 1):
        claims.append(
            Claim(f"program-1(constraint {i})", Role.AXIOM, prep1(f), Direction.FORWARD)
        )
    for (key, f) in split2.public:
        claims.append(
            Claim(
                f"program-2({format_predicate(key)})",
                Role.AXIOM,
                prep2(f),
                Direction.BACKWARD,
            )
        )
    for i, f in enumerate(split2.constraints, 1):
        claims.append(
            Claim(f"program-2(constraint {i})", Role.AXIOM, prep2(f), Direction.BACKWARD)
        )
    for i, (direction, f) in enumerate(guide.lemmas, 1):
        claims.append(Claim(f"lemma({i})", Role.LEMMA, f, direction))
    for (key, f) in split2.public:
        claims.append(
            Claim(
                f"forward({format_predicate(key)})",
                Role.CONJECTURE,
                prep2(f),
                Direction.FORWARD,
            )
        )
    for i, f in enumerate(split2.constraints, 1):
        claims.append(
            Claim(
                f"forward(constraint {i})", Role.CONJECTURE, prep2(f), Direction.FORWARD
            )
        )
    for (key, f) in split1.public:
        claims.append(
            Claim(
                f"backward({format_predicate(key)})",
                Role.CONJECTURE,
                prep1(f),
                Direction.BACKWARD,
            )
        )
    for i, f in enumerate(split1.constraints, 1):
        claims.append(
            Claim(
                f"backward(constraint {i})",
                Role.CONJECTURE,
                prep1(f),
                Direction.BACKWARD,
            )
        )
    return ClaimSequence(tuple(claims))


# ---------------------------------------------------------------------------
# prover orchestration


class Outcome(enum.Enum):
    PROVEN = "proven"
    TIMEOUT = "timeout"
    COUNTERSATISFIABLE = "countersatisfiable"
    PROVER_ERROR = "prover-error"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class ClaimResult:
    name: str
    role: Role
    direction: Direction
    outcome: Outcome
    wall_time: float
    status: str | None = None


@dataclass(frozen=True)
class VerificationReport:
    """Per-claim outcomes in outline order plus the overall verdict."""

    results: tuple[ClaimResult, ...]

    @property
    def verdict(self) -> bool:
        return all(
            r.outcome == Outcome.PROVEN
            for r in self.results
            if r.role == Role.CONJECTURE
        )

    def text(self, show_times: bool = True) -> str:
        lines = []
        for r in self.results:
            line = f"{r.name}: {r.outcome.value}"
            if show_times and r.outcome != Outcome.SKIPPED:
                line += f" ({r.wall_time:.1f} s)"
            lines.append(line)
        lines.append(f"verdict: {'proven' if self.verdict else 'not proven'}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "verdict": "proven" if self.verdict else "not proven",
            "claims": [
                {
                    "name": r.name,
                    "role": r.role.value,
                    "direction": r.direction.value,
                    "outcome": r.outcome.value,
                    "wall_time": round(r.wall_time, 3),
                    "status": r.status,
                }
                for r in self.results
            ],
        }


@dataclass(frozen=True)
class ProverConfig:
    path: str | None = None
    time_limit: int = 60
    cores: int = 1
    save_problems: str | None = None


def resolve_prover(path: str | None = None) -> str:
    """Resolve the prover executable: explicit path, then the environment
    variable, then well-known prover names on PATH."""
    for candidate in (path, os.environ.get(PROVER_ENV_VAR)):
        if candidate:
            resolved = shutil.which(candidate)
            if resolved is None:
                raise ProverNotFoundError(f"prover not found: {candidate}")
            return resolved
    for name in KNOWN_PROVERS:
        resolved = shutil.which(name)
        if resolved is not None:
            return resolved
    raise ProverNotFoundError(
        "no prover found: pass --prover-path, set "
        f"{PROVER_ENV_VAR}, or install one of: " + ", ".join(KNOWN_PROVERS)
    )


def prover_arguments(path: str, time_limit: int, problem_file: str) -> list[str]:
    """Command line for one prover invocation; dialect chosen by executable
    name, defaulting to the `--time_limit` convention."""
    base = Path(path).name.lower()
    if "eprover" in base:
        return [path, "--auto", f"--cpu-limit={time_limit}", problem_file]
    return [path, "--time_limit", str(time_limit), problem_file]


_SZS_PATTERN = re.compile(r"SZS status[ \t]+(\w+)")
_PROVEN_STATUSES = frozenset({"Theorem", "Unsatisfiable", "ContradictoryAxioms"})
_COUNTER_STATUSES = frozenset({"CounterSatisfiable", "Satisfiable"})
_TIMEOUT_STATUSES = frozenset({"Timeout", "ResourceOut"})


def _invoke_prover(
    path: str, problem_file: str, time_limit: int
) -> tuple[Outcome, float, str | None]:
    args = prover_arguments(path, time_limit, problem_file)
    start = time.monotonic()
    try:
        proc = subprocess.run(
            args, capture_output=True, text=True, timeout=time_limit + 10
        )
    except subprocess.TimeoutExpired:
        return Outcome.TIMEOUT, time.monotonic() - start, None
    except OSError:
        return Outcome.PROVER_ERROR, time.monotonic() - start, None
    elapsed = time.monotonic() - start
    match = _SZS_PATTERN.search(proc.stdout) or _SZS_PATTERN.search(proc.stderr)
    if match is None:
        if elapsed >= time_limit:
            return Outcome.TIMEOUT, elapsed, None
        return Outcome.PROVER_ERROR, elapsed, None
    status = match.group(1)
    if status in _PROVEN_STATUSES:
        return Outcome.PROVEN, elapsed, status
    if status in _COUNTER_STATUSES:
        return Outcome.COUNTERSATISFIABLE, elapsed, status
    if status in _TIMEOUT_STATUSES:
        return Outcome.TIMEOUT, elapsed, status
    return Outcome.PROVER_ERROR, elapsed, status


def _file_slug(name: str) -> str:
    out = []
    for c in name:
        out.append(c if c.isalnum() else "_")
    return "".join(out).strip("_") or "claim"


def claim_problem(
    claims: ClaimSequence, claim: Claim, proven: set[str]
) -> tptp.TptpProblem:
    """The prover problem for one claim, given the names of proven lemmas."""
    premises = [
        p
        for p in claims.potential_premises(claim)
        if p.role == Role.AXIOM or p.name in proven
    ]
    return tptp.TptpProblem(
        name=claim.name,
        axioms=tuple((p.name, p.formula) for p in premises),
        conjecture=(claim.name, claim.formula),
        header=(
            f"tool version: {VERSION}",
            f"claim: {claim.name}",
            f"direction: {claim.direction.value}",
        ),
    )


def run(claims: ClaimSequence, config: ProverConfig = ProverConfig()) -> VerificationReport:
    """Prove a claim sequence with an external prover.

    Lemmas and conjectures are dispatched in outline order as their
    dependencies settle; proven lemmas become premises of later compatible
    claims, unproven lemmas mark dependent claims skipped.
    """
    prover = resolve_prover(config.path)
    provable = claims.provable()

    cleanup: str | None = None
    if config.save_problems is not None:
        problem_dir = Path(config.save_problems)
        problem_dir.mkdir(parents=True, exist_ok=True)
    else:
        cleanup = tempfile.mkdtemp(prefix="aspverify-")
        problem_dir = Path(cleanup)

    results: dict[str, ClaimResult] = {}
    try:
        with futures.ThreadPoolExecutor(max_workers=max(1, config.cores)) as pool:
            pending: dict[futures.Future, Claim] = {}
            dispatched: set[str] = set()
            while len(results) < len(provable):
                for position, claim in enumerate(provable, 1):
                    if claim.name in results or claim.name in dispatched:
                        continue
                    dependencies = [
                        p
                        for p in claims.potential_premises(claim)
                        if p.role == Role.LEMMA
                    ]
                    settled = [results.get(d.name) for d in dependencies]
                    if any(
                        r is not None and r.outcome != Outcome.PROVEN for r in settled
                    ):
                        results[claim.name] = ClaimResult(
                            claim.name,
                            claim.role,
                            claim.direction,
                            Outcome.SKIPPED,
                            0.0,
                        )
                        continue
                    if any(r is None for r in settled):
                        continue
                    proven = {
                        d.name
                        for d in dependencies
                        if results[d.name].outcome == Outcome.PROVEN
                    }
                    problem = claim_problem(claims, claim, proven)
                    path = problem_dir / f"{position:02d}_{_file_slug(claim.name)}.p"
                    path.write_text(tptp.emit(problem))
                    future = pool.submit(
                        _invoke_prover, prover, str(path), config.time_limit
                    )
                    pending[future] = claim
                    dispatched.add(claim.name)
                if len(results) >= len(provable):
                    break
                if not pending:
                    raise AspverifyError("claim scheduling made no progress")
                done, _ = futures.wait(pending, return_when=futures.FIRST_COMPLETED)
                for future in done:
                    claim = pending.pop(future)
                    outcome, elapsed, status = future.result()
                    results[claim.name] = ClaimResult(
                        claim.name,
                        claim.role,
                        claim.direction,
                        outcome,
                        elapsed,
                        status,
                    )
    finally:
        if cleanup is not None:
            shutil.rmtree(cleanup, ignore_errors=True)

    return VerificationReport(tuple(results[c.name] for c in provable))
