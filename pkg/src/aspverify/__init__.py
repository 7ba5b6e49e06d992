"""Verification toolchain for answer-set programs.

The pipeline: parse a program (mini-gringo fragment: negation, arithmetic,
intervals, singleton choice rules, conditional literals), translate it to a
two-sorted first-order theory, complete it, reduce equivalence claims to
classical entailment, emit typed first-order problems, and drive an external
theorem prover over them.

This top-level module re-exports the library API.  The HTTP service lives in
`aspverify.service` and the command-line client in `aspverify.cli`; neither
is imported here, so library use never pulls in the web stack.
"""

from ._version import VERSION as __version__
from .claims import Claim, ClaimSequence, Direction, Role
from .completion import (
    EMPTY_IO,
    DependencyGraph,
    IoSignature,
    complete,
    dependency_graph,
    format_predicate,
    has_private_recursion,
    is_tight,
    positive_cycles,
    private_recursion_cycles,
)
from .errors import (
    AnalysisError,
    AspverifyError,
    CompletionShapeError,
    NotTightError,
    ParseError,
    PrivateRecursionError,
    ProverNotFoundError,
    SignatureTooLargeError,
    SortError,
    UnsupportedConstructError,
    VocabularyError,
)
from .ht import (
    HtInterpretation,
    classical_satisfies,
    equilibrium_models,
    gamma,
    ht_satisfies,
    inclusion_axioms,
    stable_models_reduct,
    strong_equivalence_claims,
)
from .simplify import PassList, simplify, simplify_theory
from .syntax import parse_program, parse_rule
from .translate import tau_body, tau_star, tau_star_rule, val_formula
from .tptp import TptpProblem, emit
from .verify import (
    EMPTY_SPEC,
    ClaimResult,
    Outcome,
    ProverConfig,
    SpecificationFile,
    VerificationReport,
    external_equivalence_claims,
    parse_spec,
    program_to_program_claims,
    resolve_prover,
    run,
)

__all__ = [
    "__version__",
    "AnalysisError",
    "AspverifyError",
    "Claim",
    "ClaimResult",
    "ClaimSequence",
    "CompletionShapeError",
    "DependencyGraph",
    "Direction",
    "EMPTY_IO",
    "EMPTY_SPEC",
    "HtInterpretation",
    "IoSignature",
    "NotTightError",
    "Outcome",
    "ParseError",
    "PassList",
    "PrivateRecursionError",
    "ProverConfig",
    "ProverNotFoundError",
    "Role",
    "SignatureTooLargeError",
    "SortError",
    "SpecificationFile",
    "TptpProblem",
    "UnsupportedConstructError",
    "VerificationReport",
    "VocabularyError",
    "classical_satisfies",
    "complete",
    "dependency_graph",
    "emit",
    "equilibrium_models",
    "external_equivalence_claims",
    "format_predicate",
    "gamma",
    "has_private_recursion",
    "ht_satisfies",
    "inclusion_axioms",
    "is_tight",
    "parse_program",
    "parse_rule",
    "parse_spec",
    "positive_cycles",
    "private_recursion_cycles",
    "program_to_program_claims",
    "resolve_prover",
    "run",
    "simplify",
    "simplify_theory",
    "stable_models_reduct",
    "strong_equivalence_claims",
    "tau_body",
    "tau_star",
    "tau_star_rule",
    "val_formula",
]
