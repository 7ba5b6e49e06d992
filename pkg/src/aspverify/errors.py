"""Error types shared across the toolchain.

Exit-code-relevant distinctions: input and analysis problems (parse errors,
sort clashes, non-tight programs, vocabulary violations) map to exit code 2,
a missing prover executable to exit code 3.
"""

from __future__ import annotations


class AspverifyError(Exception):
    """Base class for every error raised by this package."""


class ParseError(AspverifyError):
    """Syntax error in a program, formula, or specification file.

    Carries a 1-based source position and the set of token descriptions that
    would have been accepted at that point.
    """

    def __init__(self, message: str, line: int, column: int, expected: tuple[str, ...] = ()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        detail = f"{message} at {line}:{column}"
        if self.expected:
            detail += " (expected " + ", ".join(self.expected) + ")"
        super().__init__(detail)


class UnsupportedConstructError(ParseError):
    """The input uses a recognized construct outside the supported fragment.

    Raised for aggregates, disjunctive heads, pooling, multi-element choice,
    and function symbols inside terms.
    """


class SortError(AspverifyError):
    """A term was used at an incompatible sort."""


class AnalysisError(AspverifyError):
    """A program cannot be analyzed or completed as requested."""


class NotTightError(AnalysisError):
    """The predicate dependency graph has a positive cycle."""

    def __init__(self, cycles):
        # each cycle is a tuple of "name/arity" strings, first == last
        self.cycles = tuple(tuple(c) for c in cycles)
        lines = ["not tight: positive cycle " + " -> ".join(c) for c in self.cycles]
        super().__init__("; ".join(lines))


class PrivateRecursionError(AnalysisError):
    """A dependency cycle passes through a private predicate."""

    def __init__(self, cycles):
        self.cycles = tuple(tuple(c) for c in cycles)
        lines = ["private recursion detected: cycle " + " -> ".join(c) for c in self.cycles]
        super().__init__("; ".join(lines))


class CompletionShapeError(AspverifyError):
    """The theory is not in the translated implication form completion expects."""


class SignatureTooLargeError(AspverifyError):
    """Exhaustive ground enumeration was asked to search too many atoms."""


class VocabularyError(AspverifyError):
    """A specification or assumption mentions a symbol it may not use."""


class ProverNotFoundError(AspverifyError):
    """No usable prover executable could be resolved."""
