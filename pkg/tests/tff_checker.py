"""A standalone syntax and sort checker for typed first-order problems.

This shares nothing with the emitter under test: its own tokenizer, its own
recursive-descent parser following the standard's binary-connective rules
(associative chains for & and |, parentheses required around mixed
connectives and nested implications), and its own symbol table with strict
sorts.  The integer sort is NOT a subsort here, so an integer-sorted term
sitting directly in a general-sorted position is reported as an error; that
is exactly the class of emitter bug this checker exists to catch.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

_TOKEN = re.compile(
    r"""
      (?P<skip>\s+|%[^\n]*)
    | (?P<dollar>\$[a-z][a-zA-Z0-9_]*)
    | (?P<lower>[a-z][a-zA-Z0-9_]*)
    | (?P<upper>[A-Z][a-zA-Z0-9_]*)
    | (?P<integer>-?\d+)
    | (?P<punct><=>|=>|!=|[()\[\],.:!?~&|=*>])
    """,
    re.VERBOSE,
)

_ARITH_FUNCTIONS = {"$sum": 2, "$difference": 2, "$product": 2, "$uminus": 1}
_ARITH_PREDICATES = {"$less", "$lesseq", "$greater", "$greatereq"}
_ROLES = {"type", "axiom", "conjecture"}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


class TffError(Exception):
    pass


def _tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise TffError(f"offset {pos}: unreadable input {text[pos:pos + 10]!r}")
        if m.lastgroup != "skip":
            out.append(Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    return out


class _Checker:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.errors: list[str] = []
        # functor -> (argument sorts, result sort); result "$o" marks predicates
        self.symbols: dict[str, tuple[tuple[str, ...], str]] = {}
        self.sorts: set[str] = set()
        self.formula_names: set[str] = set()
        self.conjectures = 0

    # token plumbing

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> Token:
        t = self.peek()
        if t is None:
            raise TffError("unexpected end of input")
        self.pos += 1
        return t

    def expect(self, text: str) -> Token:
        t = self.take()
        if t.text != text:
            raise TffError(f"offset {t.position}: expected {text!r}, got {t.text!r}")
        return t

    def at(self, text: str) -> bool:
        t = self.peek()
        return t is not None and t.text == text

    # top level

    def run(self) -> list[str]:
        # first pass: collect type declarations so use may precede declaration
        mark = self.pos
        try:
            self._collect_types()
        except TffError as e:
            return [str(e)]
        self.pos = mark
        try:
            while self.peek() is not None:
                self._item()
        except TffError as e:
            self.errors.append(str(e))
        if self.conjectures != 1:
            self.errors.append(f"expected exactly one conjecture, found {self.conjectures}")
        return self.errors

    def _collect_types(self) -> None:
        while self.peek() is not None:
            self.expect("tff")
            self.expect("(")
            self.take()  # formula name
            self.expect(",")
            role = self.take().text
            self.expect(",")
            if role == "type":
                name = self.take()
                if name.kind not in ("lower", "dollar"):
                    raise TffError(
                        f"offset {name.position}: bad declared symbol {name.text!r}"
                    )
                self.expect(":")
                self._type_expression(name.text)
            else:
                self._skip_to_close()
            self.expect(")")
            self.expect(".")

    def _skip_to_close(self) -> None:
        depth = 0
        while True:
            t = self.peek()
            if t is None:
                raise TffError("unexpected end of input")
            if t.text == "(":
                depth += 1
            elif t.text == ")":
                if depth == 0:
                    return
                depth -= 1
            self.pos += 1

    def _type_expression(self, symbol: str) -> None:
        if self.at("$tType") or self._next_is_ttype():
            self.take()
            self.sorts.add(symbol)
            return
        if self.at("("):
            self.take()
            args = [self._sort_name()]
            while self.at("*"):
                self.take()
                args.append(self._sort_name())
            self.expect(")")
            self.expect(">")
            result = self._result_sort()
            self._declare(symbol, tuple(args), result)
            return
        first = self._result_sort()
        if self.at(">"):
            self.take()
            result = self._result_sort()
            self._declare(symbol, (first,), result)
        else:
            self._declare(symbol, (), first)

    def _next_is_ttype(self) -> bool:
        t = self.peek()
        return t is not None and t.text == "$tType"

    def _sort_name(self) -> str:
        t = self.take()
        if t.text == "$int" or t.text in self.sorts:
            return t.text
        if t.kind == "lower":
            # tolerate forward sort references within the declaration pass
            return t.text
        raise TffError(f"offset {t.position}: not a sort: {t.text!r}")

    def _result_sort(self) -> str:
        t = self.take()
        if t.text in ("$int", "$o") or t.text in self.sorts or t.kind == "lower":
            return t.text
        raise TffError(f"offset {t.position}: not a sort: {t.text!r}")

    def _declare(self, symbol: str, args: tuple[str, ...], result: str) -> None:
        if symbol in self.symbols:
            self.errors.append(f"symbol {symbol!r} declared twice")
        self.symbols[symbol] = (args, result)

    # second pass: full checking

    def _item(self) -> None:
        self.expect("tff")
        self.expect("(")
        name = self.take()
        if name.kind not in ("lower", "integer"):
            self.errors.append(f"offset {name.position}: bad formula name {name.text!r}")
        if name.text in self.formula_names:
            self.errors.append(f"duplicate formula name {name.text!r}")
        self.formula_names.add(name.text)
        self.expect(",")
        role = self.take().text
        if role not in _ROLES:
            self.errors.append(f"unknown role {role!r} in {name.text}")
        self.expect(",")
        if role == "type":
            self.take()
            self.expect(":")
            self._skip_type_expression()
        else:
            if role == "conjecture":
                self.conjectures += 1
            self._formula({})
        self.expect(")")
        self.expect(".")

    def _skip_type_expression(self) -> None:
        self._skip_to_close()

    # formulas; scope maps variable name -> sort

    def _formula(self, scope: dict[str, str]) -> None:
        left_is_unitary = self._unitary(scope)
        t = self.peek()
        if t is None or t.text in (")", ","):
            return
        if t.text in ("&", "|"):
            op = t.text
            while self.at(op):
                self.take()
                self._unitary(scope)
            nxt = self.peek()
            if nxt is not None and nxt.text in ("&", "|", "=>", "<=>"):
                raise TffError(
                    f"offset {nxt.position}: mixed connectives need parentheses"
                )
            return
        if t.text in ("=>", "<=>"):
            if not left_is_unitary:
                raise TffError(
                    f"offset {t.position}: implication over an unparenthesized chain"
                )
            self.take()
            self._unitary(scope)
            nxt = self.peek()
            if nxt is not None and nxt.text in ("&", "|", "=>", "<=>"):
                raise TffError(
                    f"offset {nxt.position}: nested implication needs parentheses"
                )
            return

    def _unitary(self, scope: dict[str, str]) -> bool:
        """Parse one unitary formula; returns True (used for arity of chains)."""
        t = self.peek()
        if t is None:
            raise TffError("unexpected end of input")
        if t.text in ("!", "?"):
            self.take()
            self.expect("[")
            inner = dict(scope)
            while True:
                var = self.take()
                if var.kind != "upper":
                    raise TffError(f"offset {var.position}: bad variable {var.text!r}")
                self.expect(":")
                sort = self._use_sort()
                inner[var.text] = sort
                if self.at(","):
                    self.take()
                    continue
                break
            self.expect("]")
            self.expect(":")
            self._unitary(inner)
            return True
        if t.text == "~":
            self.take()
            self._unitary(scope)
            return True
        if t.text == "(":
            self.take()
            self._formula(scope)
            self.expect(")")
            return True
        self._atomic(scope)
        return True

    def _use_sort(self) -> str:
        t = self.take()
        if t.text == "$int" or t.text in self.sorts:
            return t.text
        raise TffError(f"offset {t.position}: unknown sort {t.text!r}")

    def _atomic(self, scope: dict[str, str]) -> None:
        t = self.peek()
        if t.text in ("$true", "$false"):
            self.take()
            return
        sort, position = self._term(scope)
        nxt = self.peek()
        if nxt is not None and nxt.text in ("=", "!="):
            self.take()
            right, rpos = self._term(scope)
            if sort == "$o" or right == "$o":
                self.errors.append(f"offset {rpos}: equation over formulas")
            elif sort != right:
                self.errors.append(
                    f"offset {rpos}: equation mixes sorts {sort} and {right}"
                )
            return
        if sort != "$o":
            self.errors.append(
                f"offset {position}: term of sort {sort} used as a formula"
            )

    def _term(self, scope: dict[str, str]) -> tuple[str, int]:
        """Parse a term; return (sort, position)."""
        t = self.take()
        if t.kind == "integer":
            return "$int", t.position
        if t.kind == "upper":
            if t.text not in scope:
                self.errors.append(f"offset {t.position}: unbound variable {t.text}")
                return "$int", t.position
            return scope[t.text], t.position
        if t.kind == "dollar":
            if t.text in _ARITH_FUNCTIONS:
                args = self._arguments(scope)
                if len(args) != _ARITH_FUNCTIONS[t.text]:
                    self.errors.append(f"offset {t.position}: bad arity for {t.text}")
                for sort, pos in args:
                    if sort != "$int":
                        self.errors.append(
                            f"offset {pos}: {t.text} argument of sort {sort}"
                        )
                return "$int", t.position
            if t.text in _ARITH_PREDICATES:
                args = self._arguments(scope)
                if len(args) != 2:
                    self.errors.append(f"offset {t.position}: bad arity for {t.text}")
                for sort, pos in args:
                    if sort != "$int":
                        self.errors.append(
                            f"offset {pos}: {t.text} argument of sort {sort}"
                        )
                return "$o", t.position
            self.errors.append(f"offset {t.position}: unknown builtin {t.text}")
            return "$int", t.position
        if t.kind == "lower":
            if t.text not in self.symbols:
                self.errors.append(f"offset {t.position}: undeclared symbol {t.text}")
                if self.at("("):
                    self._arguments(scope)
                return "$int", t.position
            expected, result = self.symbols[t.text]
            if expected:
                args = self._arguments(scope)
                if len(args) != len(expected):
                    self.errors.append(
                        f"offset {t.position}: {t.text} expects {len(expected)} "
                        f"arguments, got {len(args)}"
                    )
                else:
                    for (sort, pos), want in zip(args, expected):
                        if sort != want:
                            self.errors.append(
                                f"offset {pos}: {t.text} argument of sort {sort} "
                                f"where {want} is required"
                            )
            elif self.at("("):
                self.errors.append(f"offset {t.position}: {t.text} takes no arguments")
                self._arguments(scope)
            return result, t.position
        raise TffError(f"offset {t.position}: unexpected token {t.text!r}")

    def _arguments(self, scope: dict[str, str]) -> list[tuple[str, int]]:
        self.expect("(")
        out = [self._term(scope)]
        while self.at(","):
            self.take()
            out.append(self._term(scope))
        self.expect(")")
        return out


def check_problem(text: str) -> list[str]:
    """All syntax and sort errors in a rendered problem; empty means valid."""
    try:
        return _Checker(text).run()
    except TffError as e:
        return [str(e)]


def assert_valid(text: str) -> None:
    errors = check_problem(text)
    assert not errors, "invalid problem:\n" + "\n".join(errors) + "\n\n" + text
