"""
Lexer and recursive-descent parser for propositional formulas.

Grammar, loosest binding first:

    implication := disjunction ( "->" disjunction )*      right-associative
    disjunction := conjunction ( "|" conjunction )*
    conjunction := negation ( "&" negation )*
    negation    := "!"* atom
    atom        := IDENT | NUMBER | "(" implication ")"

Offsets in errors are byte offsets into the UTF-8 encoded text.
Parentheses nest as deep as the interpreter stack allows; beyond that the
input is rejected as a syntax error.
"""

from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from typing import List
import re

from src.errors import FormulaSyntaxError, LiteralRangeError
from src.logic.formula import And, Const, Formula, Implies, Not, Or, Var


class TokenKind(Enum):
    IDENT = "identifier"
    NUMBER = "number"
    NOT = "'!'"
    AND = "'&'"
    OR = "'|'"
    IMPLIES = "'->'"
    LPAREN = "'('"
    RPAREN = "')'"
    EOF = "end of input"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    offset: int


_TOKEN_PATTERN = re.compile(
    r"""
    (?P<space>\s+)
  | (?P<number>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<implies>->)
  | (?P<not>!)
  | (?P<and>&)
  | (?P<or>\|)
  | (?P<lparen>\()
  | (?P<rparen>\))
    """,
    re.VERBOSE,
)

_KIND_BY_GROUP = {
    "number": TokenKind.NUMBER,
    "ident": TokenKind.IDENT,
    "implies": TokenKind.IMPLIES,
    "not": TokenKind.NOT,
    "and": TokenKind.AND,
    "or": TokenKind.OR,
    "lparen": TokenKind.LPAREN,
    "rparen": TokenKind.RPAREN,
}

_ATOM_START = (TokenKind.IDENT, TokenKind.NUMBER, TokenKind.NOT, TokenKind.LPAREN)


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_PATTERN.match(text, pos)
        if match is None:
            raise FormulaSyntaxError(
                f"Unexpected character {text[pos]!r}",
                _byte_offset(text, pos),
                [k.value for k in _ATOM_START],
            )
        group = match.lastgroup
        if group != "space":
            tokens.append(Token(_KIND_BY_GROUP[group], match.group(), _byte_offset(text, pos)))
        pos = match.end()
    tokens.append(Token(TokenKind.EOF, "", _byte_offset(text, len(text))))
    return tokens


class Parser:
    """Recursive-descent parser over a token list."""

    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _advance(self) -> Token:
        token = self.current
        self.pos += 1
        return token

    def _fail(self, *expected: TokenKind) -> FormulaSyntaxError:
        token = self.current
        found = "end of input" if token.kind is TokenKind.EOF else repr(token.text)
        return FormulaSyntaxError(
            f"Unexpected {found}", token.offset, [k.value for k in expected]
        )

    def parse(self) -> Formula:
        try:
            formula = self.implication()
        except RecursionError:
            raise FormulaSyntaxError("Formula nesting too deep", self.current.offset) from None
        if self.current.kind is not TokenKind.EOF:
            raise self._fail(TokenKind.IMPLIES, TokenKind.OR, TokenKind.AND, TokenKind.EOF)
        return formula

    def implication(self) -> Formula:
        operands = [self.disjunction()]
        while self.current.kind is TokenKind.IMPLIES:
            self._advance()
            operands.append(self.disjunction())
        formula = operands.pop()
        while operands:
            formula = Implies(operands.pop(), formula)
        return formula

    def disjunction(self) -> Formula:
        left = self.conjunction()
        while self.current.kind is TokenKind.OR:
            self._advance()
            left = Or(left, self.conjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.negation()
        while self.current.kind is TokenKind.AND:
            self._advance()
            left = And(left, self.negation())
        return left

    def negation(self) -> Formula:
        count = 0
        while self.current.kind is TokenKind.NOT:
            self._advance()
            count += 1
        formula = self.atom()
        for _ in range(count):
            formula = Not(formula)
        return formula

    def atom(self) -> Formula:
        token = self.current
        if token.kind is TokenKind.IDENT:
            self._advance()
            return Var(token.text)
        if token.kind is TokenKind.NUMBER:
            self._advance()
            value = float(token.text)
            if not 0.0 <= value <= 1.0:
                raise LiteralRangeError(token.text, token.offset)
            return Const(value)
        if token.kind is TokenKind.LPAREN:
            self._advance()
            inner = self.implication()
            if self.current.kind is not TokenKind.RPAREN:
                raise self._fail(TokenKind.RPAREN, TokenKind.IMPLIES, TokenKind.OR, TokenKind.AND)
            self._advance()
            return inner
        raise self._fail(*_ATOM_START)


def parse(text: str) -> Formula:
    """Parse formula text; the whole input must be consumed."""
    return Parser(text).parse()
