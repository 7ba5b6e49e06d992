"""Lexer and recursive-descent parser for the input program language.

Files use UTF-8 with `%` line comments.  Body elements are separated by `,`
or `;`; a conditional literal's conditions are introduced by `:` and extend
until `;` or the end of the rule, so an element following a conditional
literal must be separated by `;`.

Deliberately rejected constructs (aggregates, disjunctive heads, pooling,
multi-element choice, function symbols) raise UnsupportedConstructError so
callers can distinguish "outside the fragment" from a plain syntax error.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ParseError, UnsupportedConstructError
from . import ast

# token kinds
IDENT = "identifier"
VARIABLE = "variable"
NUMERAL = "numeral"
NOT = "'not'"
INFIMUM = "'#inf'"
SUPREMUM = "'#sup'"
IF = "':-'"
DOT = "'.'"
INTERVAL = "'..'"
COMMA = "','"
SEMICOLON = "';'"
COLON = "':'"
LPAREN = "'('"
RPAREN = "')'"
LBRACE = "'{'"
RBRACE = "'}'"
PIPE = "'|'"
PLUS = "'+'"
MINUS = "'-'"
TIMES = "'*'"
DIVIDE = "'/'"
MODULO = "'\\'"
EQ = "'='"
NEQ = "'!='"
LT = "'<'"
LEQ = "'<='"
GT = "'>'"
GEQ = "'>='"
EOF = "end of input"

_SYMBOLS = [
    (":-", IF),
    ("..", INTERVAL),
    ("!=", NEQ),
    ("<=", LEQ),
    (">=", GEQ),
    (".", DOT),
    (",", COMMA),
    (";", SEMICOLON),
    (":", COLON),
    ("(", LPAREN),
    (")", RPAREN),
    ("{", LBRACE),
    ("}", RBRACE),
    ("|", PIPE),
    ("+", PLUS),
    ("-", MINUS),
    ("*", TIMES),
    ("/", DIVIDE),
    ("\\", MODULO),
    ("=", EQ),
    ("<", LT),
    (">", GT),
]

_RELATIONS = {
    EQ: ast.Relation.EQ,
    NEQ: ast.Relation.NEQ,
    LT: ast.Relation.LT,
    LEQ: ast.Relation.LEQ,
    GT: ast.Relation.GT,
    GEQ: ast.Relation.GEQ,
}


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
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if word == "#inf":
                tokens.append(Token(INFIMUM, word, line, col))
            elif word == "#sup":
                tokens.append(Token(SUPREMUM, word, line, col))
            else:
                raise UnsupportedConstructError(
                    f"unsupported construct: aggregate or directive '{word}'",
                    line,
                    col,
                )
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
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if word == "not":
                kind = NOT
            elif word[0].islower():
                kind = IDENT
            elif word[0].isupper():
                kind = VARIABLE
            else:
                raise ParseError(f"invalid name '{word}'", line, col)
            tokens.append(Token(kind, word, line, col))
            col += j - i
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


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    # -- token plumbing ----------------------------------------------------

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

    def check(self, kind: str) -> bool:
        return self.current.kind == kind

    def accept(self, kind: str) -> Token | None:
        if self.check(kind):
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

    def unsupported(self, what: str):
        tok = self.current
        raise UnsupportedConstructError(
            f"unsupported construct: {what}", tok.line, tok.column
        )

    # -- grammar -----------------------------------------------------------

    def program(self) -> ast.Program:
        rules = []
        while not self.check(EOF):
            rules.append(self.rule())
        return ast.Program(tuple(rules))

    def rule(self) -> ast.Rule:
        if self.accept(IF):
            body = self.body()
            self.expect(DOT)
            return ast.Rule(ast.FalsityHead(), body)
        head = self.head()
        body = self.body() if self.accept(IF) else ()
        self.expect(DOT)
        return ast.Rule(head, body)

    def head(self) -> ast.Head:
        if self.accept(LBRACE):
            atom = self.atom()
            if self.check(SEMICOLON) or self.check(COMMA):
                self.unsupported("multi-element choice")
            self.expect(RBRACE)
            if not (self.check(IF) or self.check(DOT)):
                self.fail(expected=(IF, DOT))
            return ast.ChoiceHead(atom)
        if self.check(IDENT):
            atom = self.atom()
            if self.check(SEMICOLON) or self.check(PIPE):
                self.unsupported("disjunctive head")
            return ast.BasicHead(atom)
        self.fail(expected=(IDENT, LBRACE, IF))

    def body(self) -> tuple[ast.BodyElement, ...]:
        elements = [self.body_element()]
        while self.accept(COMMA) or self.accept(SEMICOLON):
            elements.append(self.body_element())
        return tuple(elements)

    def body_element(self) -> ast.BodyElement:
        first = self.simple_element()
        if self.accept(COLON):
            conditions = [self.simple_element()]
            while self.check(COMMA):
                self.advance()
                conditions.append(self.simple_element())
            return ast.ConditionalLiteral(first, tuple(conditions))
        return first

    def simple_element(self) -> ast.SimpleElement:
        if self.accept(NOT):
            polarity = ast.Polarity.NEGATED
            if self.accept(NOT):
                polarity = ast.Polarity.DOUBLY_NEGATED
            if not self.check(IDENT):
                self.fail(expected=(IDENT,))
            return ast.Literal(polarity, self.atom())
        if self.check(IDENT) and self.peek().kind == LPAREN:
            return ast.Literal(ast.Polarity.POSITIVE, self.atom())
        if self.check(IDENT) and self.peek().kind not in _RELATIONS and not self._starts_term_op():
            name = self.advance().text
            return ast.Literal(ast.Polarity.POSITIVE, ast.Atom(name))
        lhs = self.term()
        if self.current.kind not in _RELATIONS:
            self.fail(expected=tuple(_RELATIONS))
        relation = _RELATIONS[self.advance().kind]
        rhs = self.term()
        return ast.Comparison(relation, lhs, rhs)

    def _starts_term_op(self) -> bool:
        # "c + 1 = 3" starts with an identifier but is a comparison
        return self.peek().kind in (PLUS, MINUS, TIMES, DIVIDE, MODULO, INTERVAL)

    def atom(self) -> ast.Atom:
        name = self.expect(IDENT).text
        args: tuple[ast.Term, ...] = ()
        if self.accept(LPAREN):
            items = [self.term()]
            while True:
                if self.accept(COMMA):
                    items.append(self.term())
                elif self.check(SEMICOLON):
                    self.unsupported("pooling")
                else:
                    break
            self.expect(RPAREN)
            args = tuple(items)
        return ast.Atom(name, args)

    def term(self) -> ast.Term:
        return self.term_at(1)

    def term_at(self, prec: int) -> ast.Term:
        if prec >= 4:
            return self.unary_term()
        ops = {
            1: (INTERVAL,),
            2: (PLUS, MINUS),
            3: (TIMES, DIVIDE, MODULO),
        }[prec]
        left = self.term_at(prec + 1)
        while self.current.kind in ops:
            kind = self.advance().kind
            op = {
                INTERVAL: ast.BinOpKind.INTERVAL,
                PLUS: ast.BinOpKind.PLUS,
                MINUS: ast.BinOpKind.MINUS,
                TIMES: ast.BinOpKind.TIMES,
                DIVIDE: ast.BinOpKind.DIVIDE,
                MODULO: ast.BinOpKind.MODULO,
            }[kind]
            right = self.term_at(prec + 1)
            left = ast.BinOp(op, left, right)
        return left

    def unary_term(self) -> ast.Term:
        if self.accept(MINUS):
            operand = self.unary_term()
            # fold unary minus on numerals so -3 round-trips as one symbol
            if isinstance(operand, ast.Ground) and isinstance(operand.symbol, ast.Numeral):
                return ast.Ground(ast.Numeral(-operand.symbol.value))
            return ast.Negate(operand)
        return self.primary_term()

    def primary_term(self) -> ast.Term:
        tok = self.current
        if tok.kind == NUMERAL:
            self.advance()
            return ast.Ground(ast.Numeral(int(tok.text)))
        if tok.kind == IDENT:
            if self.peek().kind == LPAREN:
                self.unsupported("function symbols inside terms")
            self.advance()
            return ast.Ground(ast.SymbolicConstant(tok.text))
        if tok.kind == VARIABLE:
            self.advance()
            return ast.Variable(tok.text)
        if tok.kind == INFIMUM:
            self.advance()
            return ast.Ground(ast.Infimum())
        if tok.kind == SUPREMUM:
            self.advance()
            return ast.Ground(ast.Supremum())
        if tok.kind == LPAREN:
            self.advance()
            t = self.term()
            self.expect(RPAREN)
            return t
        self.fail(expected=(NUMERAL, IDENT, VARIABLE, INFIMUM, SUPREMUM, LPAREN))


def parse_program(text: str) -> ast.Program:
    """Parse a program; raises ParseError with line/column on bad input."""
    return _Parser(tokenize(text)).program()


def parse_rule(text: str) -> ast.Rule:
    """Parse exactly one rule; convenience for tests and the service layer."""
    parser = _Parser(tokenize(text))
    rule = parser.rule()
    parser.expect(EOF)
    return rule
