"""Shared fixtures: corpus programs and stub prover executables."""

from __future__ import annotations

import pytest

# the two prime-sieve variants with the same external behavior
PRIME_PROGRAM_1 = (
    "composite(I*J) :- I = 2..n, J = 2..n.\n"
    "prime(I) :- I = 2..n, not composite(I).\n"
)
PRIME_PROGRAM_2 = (
    "comp(X) :- X = I*J, I = 2..n, J = 2..n.\n"
    "prime(I) :- I = 2..n, not comp(I).\n"
)
PRIME_GUIDE = "input: n -> integer.\nassumption: n > 1.\noutput: prime/1.\n"
PRIME_SPEC = (
    "input: n -> integer.\n"
    "assumption: n > 1.\n"
    "output: prime/1.\n"
    "spec: forall X (prime(X) -> 2 <= X and X <= n).\n"
)

# transitive closure: the canonical non-tight program
TRANSITIVE_PROGRAM = (
    "transitive(X,Y) :- edge(X,Y).\n"
    "transitive(X,Z) :- transitive(X,Y), edge(Y,Z).\n"
)

# a constraint with a conditional literal: no vertex may go uncolored
COLORING_CL_RULE = ":- not asg(V, C) : col(C); vtx(V).\n"

# the square-number pair: same outputs, famously hard for provers
SQUARES_PROGRAM_1 = "p(X*X) :- X = 0..n.\n"
SQUARES_PROGRAM_2 = "p(X*X) :- X = -n..n.\n"
SQUARES_GUIDE = "input: n -> integer.\nassumption: n > 0.\noutput: p/1.\n"

# stub prover bodies; the problem file is always the last argument
PROVER_THEOREM = 'echo "% SZS status Theorem"\n'
PROVER_COUNTER = 'echo "% SZS status CounterSatisfiable"\n'
PROVER_TIMEOUT_STATUS = 'echo "% SZS status Timeout"\n'
PROVER_NO_STATUS = 'echo "proving hard...."\necho "segmentation fault"\n'
PROVER_HANG = "sleep 600\n"
# refuses exactly the claims whose header mentions the marker
PROVER_MARKER = """\
last=""
for a in "$@"; do last="$a"; done
if grep -q "MARKER" "$last"; then
  echo "% SZS status CounterSatisfiable"
else
  echo "% SZS status Theorem"
fi
"""


@pytest.fixture
def make_prover(tmp_path):
    """Write an executable shell script acting as a prover and return its path."""

    def make(body: str, name: str = "stubprover") -> str:
        path = tmp_path / name
        path.write_text("#!/bin/sh\n" + body)
        path.chmod(0o755)
        return str(path)

    return make


@pytest.fixture
def no_ambient_prover(monkeypatch):
    """Hide any real prover from PATH and the environment."""
    monkeypatch.setenv("PATH", "/nonexistent")
    monkeypatch.delenv("ASPVERIFY_PROVER", raising=False)
    monkeypatch.delenv("ASPVERIFY_SERVER", raising=False)
