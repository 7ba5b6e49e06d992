"""Parser for the human-readable formula syntax.

Shared by specification files and the formula-level CLI subcommands:

    forall X N$i (p(X) and N > 0 -> q(X, N))

Variables default to the general sort; a `$i` suffix marks the integer sort.
`not`, `and`, `or`, `->`, `<->`, `forall`, `exists` are reserved words.
Identifiers supplied in the placeholder environment parse as placeholder
constants at their declared sort; all other identifiers are symbolic
constants (or predicates, when applied or used at formula level).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ParseError, SortError
from . import core

IDENT = "identifier"
VARIABLE = "variable"
NUMERAL = "numeral"
KEYWORD = "keyword"
TRUE = "'#true'"
FALSE = "'#false'"
INFIMUM = "'#inf'"
SUPREMUM = "'#sup'"
LPAREN = "'('"
RPAREN = "')'"
COMMA = "','"
DOT = "'.'"
ARROW = "'->'"
DARROW = "'<->'"
PLUS = "'+'"
MINUS = "'-'"
TIMES = "'*'"
EQ = "'='"
NEQ = "'!='"
LT = "'<'"
LEQ = "'<='"
GT = "'>'"
GEQ = "'>='"
EOF = "end of input"

_KEYWORDS = {"forall", "exists", "and", "or", "not"}

_SYMBOLS = [
    ("<->", DARROW),
    ("->", ARROW),
    ("!=", NEQ),
    ("<=", LEQ),
    (">=", GEQ),
    ("(", LPAREN),
    (")", RPAREN),
    (",", COMMA),
    (".", DOT),
    ("+", PLUS),
    ("-", MINUS),
    ("*", TIMES),
    ("=", EQ),
    ("<", LT),
    (">", GT),
]

_RELATIONS = {
    EQ: core.Rel.EQ,
    NEQ: core.Rel.NEQ,
    LT: core.Rel.LT,
    LEQ: core.Rel.LEQ,
    GT: core.Rel.GT,
    GEQ: core.Rel.GEQ,
}

_HASH_WORDS = {"#true": TRUE, "#false": FALSE, "#inf": INFIMUM, "#sup": SUPREMUM}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    line = 1
    col = 1
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        if c == "%":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if c == "#":
            j = i + 1
            while j < n and text[j].isalpha():
                j += 1
            word = text[i:j]
            kind = _HASH_WORDS.get(word)
            if kind is None:
                raise ParseError(f"unknown constant '{word}'", line, col)
            tokens.append(Token(kind, word, line, col))
            col += j - i
            i = j
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token(NUMERAL, text[i:j], line, col))
            col += j - i
            i = j
            continue
        if c.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            length = j - i
            if word in _KEYWORDS:
                tokens.append(Token(KEYWORD, word, line, col))
            elif word[0].isupper():
                # a $i suffix is part of the variable token
                if text.startswith("$i", j):
                    j += 2
                    length += 2
                    word += "$i"
                tokens.append(Token(VARIABLE, word, line, col))
            else:
                tokens.append(Token(IDENT, word, line, col))
            col += length
            i = j
            continue
        for sym, kind in _SYMBOLS:
            if text.startswith(sym, i):
                tokens.append(Token(kind, sym, line, col))
                i += len(sym)
                col += len(sym)
                break
        else:
            raise ParseError(f"unexpected character {c!r}", line, col)
    tokens.append(Token(EOF, "", line, col))
    return tokens


def _variable_of(token: Token) -> core.Var:
    if token.text.endswith("$i"):
        return core.Var(token.text[:-2], core.Sort.INTEGER)
    return core.Var(token.text, core.Sort.GENERAL)


class _Parser:
    def __init__(self, tokens: list[Token], placeholders: dict[str, core.Sort]):
        self.tokens = tokens
        self.pos = 0
        self.placeholders = placeholders
        self.bound: dict[str, core.Var] = {}

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, ahead: int = 1) -> Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.current
        if tok.kind != EOF:
            self.pos += 1
        return tok

    def check(self, kind: str, text: str | None = None) -> bool:
        tok = self.current
        return tok.kind == kind and (text is None or tok.text == text)

    def accept(self, kind: str, text: str | None = None) -> Token | None:
        if self.check(kind, text):
            return self.advance()
        return None

    def expect(self, kind: str) -> Token:
        if self.check(kind):
            return self.advance()
        self.fail(expected=(kind,))

    def fail(self, expected: tuple[str, ...] = (), message: str | None = None):
        tok = self.current
        found = tok.text if tok.kind != EOF else "end of input"
        raise ParseError(
            message or f"unexpected {found!r}", tok.line, tok.column, expected
        )

    # -- formulas ----------------------------------------------------------

    def formula(self) -> core.Formula:
        left = self.implication()
        while self.accept(DARROW):
            right = self.implication()
            left = core.Iff(left, right)
        return left

    def implication(self) -> core.Formula:
        left = self.disjunction()
        if self.accept(ARROW):
            return core.Implies(left, self.implication())
        return left

    def disjunction(self) -> core.Formula:
        items = [self.conjunction()]
        while self.accept(KEYWORD, "or"):
            items.append(self.conjunction())
        return items[0] if len(items) == 1 else core.Or(tuple(items))

    def conjunction(self) -> core.Formula:
        items = [self.unary()]
        while self.accept(KEYWORD, "and"):
            items.append(self.unary())
        return items[0] if len(items) == 1 else core.And(tuple(items))

    def unary(self) -> core.Formula:
        if self.accept(KEYWORD, "not"):
            return core.neg(self.unary())
        if self.check(KEYWORD, "forall") or self.check(KEYWORD, "exists"):
            return self.quantified()
        if self.accept(TRUE):
            return core.Truth()
        if self.accept(FALSE):
            return core.Falsity()
        if self.check(LPAREN):
            # either a parenthesized formula or a parenthesized term
            # starting a comparison; try the formula reading first
            saved = self.pos
            saved_bound = dict(self.bound)
            try:
                self.advance()
                inner = self.formula()
                self.expect(RPAREN)
            except ParseError:
                self.pos = saved
                self.bound = saved_bound
                return self.comparison()
            if self.current.kind in _RELATIONS:
                self.pos = saved
                self.bound = saved_bound
                return self.comparison()
            return inner
        if self.check(IDENT):
            name = self.current.text
            if name in self.placeholders:
                return self.comparison()
            if self.peek().kind == LPAREN:
                return self.applied_atom()
            if self.peek().kind in _RELATIONS or self.peek().kind in (
                PLUS,
                MINUS,
                TIMES,
            ):
                return self.comparison()
            self.advance()
            return core.Atom(name)
        return self.comparison()

    def quantified(self) -> core.Formula:
        word = self.advance().text
        variables: list[core.Var] = []
        while self.check(VARIABLE):
            variables.append(_variable_of(self.advance()))
        if not variables:
            self.fail(expected=(VARIABLE,))
        self.expect(LPAREN)
        outer = {}
        for v in variables:
            if v.name in self.bound:
                outer[v.name] = self.bound[v.name]
            self.bound[v.name] = v
        body = self.formula()
        for v in variables:
            if v.name in outer:
                self.bound[v.name] = outer[v.name]
            else:
                del self.bound[v.name]
        self.expect(RPAREN)
        ctor = core.ForAll if word == "forall" else core.Exists
        return ctor(tuple(variables), body)

    def applied_atom(self) -> core.Formula:
        name = self.expect(IDENT).text
        self.expect(LPAREN)
        args = [self.term()]
        while self.accept(COMMA):
            args.append(self.term())
        self.expect(RPAREN)
        return core.Atom(name, tuple(args))

    def comparison(self) -> core.Formula:
        left = self.term()
        if self.current.kind not in _RELATIONS:
            self.fail(expected=tuple(_RELATIONS))
        relation = _RELATIONS[self.advance().kind]
        right = self.term()
        return core.Compare(relation, left, right)

    # -- terms ---------------------------------------------------------

    def term(self) -> core.FoTerm:
        left = self.mult_term()
        while self.current.kind in (PLUS, MINUS):
            tok = self.advance()
            op = core.IntOpKind.PLUS if tok.kind == PLUS else core.IntOpKind.MINUS
            right = self.mult_term()
            left = self._int_op(op, left, right, tok)
        return left

    def mult_term(self) -> core.FoTerm:
        left = self.unary_term()
        while self.check(TIMES):
            tok = self.advance()
            right = self.unary_term()
            left = self._int_op(core.IntOpKind.TIMES, left, right, tok)
        return left

    def unary_term(self) -> core.FoTerm:
        if self.check(MINUS):
            tok = self.advance()
            operand = self.unary_term()
            if isinstance(operand, core.IntConst):
                return core.IntConst(-operand.value)
            return self._int_op(
                core.IntOpKind.MINUS, core.IntConst(0), operand, tok
            )
        return self.primary_term()

    def _int_op(self, op, left, right, tok: Token) -> core.FoTerm:
        try:
            return core.IntOp(op, left, right)
        except SortError as err:
            raise ParseError(str(err), tok.line, tok.column) from None

    def primary_term(self) -> core.FoTerm:
        tok = self.current
        if tok.kind == NUMERAL:
            self.advance()
            return core.IntConst(int(tok.text))
        if tok.kind == VARIABLE:
            self.advance()
            v = _variable_of(tok)
            known = self.bound.get(v.name)
            if known is not None:
                if tok.text.endswith("$i") and known.sort != core.Sort.INTEGER:
                    raise ParseError(
                        f"variable {v.name} is bound at the general sort",
                        tok.line,
                        tok.column,
                    )
                return known
            return v
        if tok.kind == IDENT:
            self.advance()
            sort = self.placeholders.get(tok.text)
            if sort is not None:
                return core.Placeholder(tok.text, sort)
            return core.SymConst(tok.text)
        if tok.kind == INFIMUM:
            self.advance()
            return core.Inf()
        if tok.kind == SUPREMUM:
            self.advance()
            return core.Sup()
        if tok.kind == LPAREN:
            self.advance()
            t = self.term()
            self.expect(RPAREN)
            return t
        self.fail(
            expected=(NUMERAL, VARIABLE, IDENT, INFIMUM, SUPREMUM, LPAREN)
        )


def parse_formula(
    text: str, placeholders: dict[str, core.Sort] | None = None
) -> core.Formula:
    """Parse a single formula; trailing '.' is permitted."""
    parser = _Parser(tokenize(text), placeholders or {})
    f = parser.formula()
    parser.accept(DOT)
    parser.expect(EOF)
    return f


def parse_formulas(
    text: str, placeholders: dict[str, core.Sort] | None = None
) -> list[core.Formula]:
    """Parse a sequence of '.'-terminated formulas."""
    parser = _Parser(tokenize(text), placeholders or {})
    out: list[core.Formula] = []
    while not parser.check(EOF):
        out.append(parser.formula())
        parser.expect(DOT)
    return out
