"""Recursive-descent parser and minimal-parenthesis printer.

Grammar (one statement per ``.``, ``%`` starts a comment)::

    statement := formula "." | formula ":-" formula "." | ":-" formula "."
    formula   := impl
    impl      := disj ("->" impl)?
    disj      := odisj ((";" | "|") odisj)*
    odisj     := conj ("*" conj)*
    conj      := neg (("&" | ",") neg)*
    neg       := ("~" | "not") neg | "(" formula ")" | atom | "#false" | "#true"

``*`` binds tighter than disjunction and looser than conjunction, so
``a ; b * c`` reads as ``a | (b * c)``.  Binary operators other than ``->``
associate to the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List

from .errors import LpodError
from .formula import (
    BOT,
    TOP,
    And,
    Atom,
    Bottom,
    Formula,
    Implies,
    Or,
    OrderedOr,
    Program,
    is_negation,
)


class ParseError(LpodError, ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>%[^\n]*)
  | (?P<ifrom>:-)
  | (?P<arrow>->)
  | (?P<const>\#(?:true|false)\b)
  | (?P<ident>_*[a-z][A-Za-z0-9_]*)
  | (?P<op>[.*;|&,~()])
""",
    re.VERBOSE,
)

_OP_KINDS = {
    ".": "dot",
    "*": "times",
    ";": "or",
    "|": "or",
    "&": "and",
    ",": "and",
    "~": "not",
    "(": "lpar",
    ")": "rpar",
}


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(f"unknown token {text[pos]!r}", line, col)
        kind = m.lastgroup
        lexeme = m.group()
        if kind == "ident":
            tokens.append(Token("not" if lexeme == "not" else "atom", lexeme, line, col))
        elif kind == "const":
            tokens.append(Token(lexeme[1:], lexeme, line, col))
        elif kind == "op":
            tokens.append(Token(_OP_KINDS[lexeme], lexeme, line, col))
        elif kind in ("ifrom", "arrow"):
            tokens.append(Token(kind, lexeme, line, col))
        newlines = lexeme.count("\n")
        if newlines:
            line += newlines
            line_start = pos + lexeme.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def accept(self, kind: str) -> bool:
        if self.tok.kind == kind:
            self.i += 1
            return True
        return False

    def fail(self, message: str):
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        raise ParseError(f"{message}, found {found}", t.line, t.column)

    def program(self) -> Program:
        statements, positions = [], []
        while self.tok.kind != "eof":
            positions.append((self.tok.line, self.tok.column))
            statements.append(self.statement())
        return Program(tuple(statements), frozenset(), tuple(positions))

    def statement(self) -> Formula:
        if self.accept("ifrom"):
            head, body = BOT, self.formula()
        else:
            head = self.formula()
            body = self.formula() if self.accept("ifrom") else None
        if self.tok.kind == "eof":
            self.fail("unterminated statement: expected '.'")
        if not self.accept("dot"):
            self.fail("expected '.'")
        return head if body is None else Implies(body, head)

    def formula(self) -> Formula:
        left = self.disj()
        if self.accept("arrow"):
            return Implies(left, self.formula())
        return left

    def disj(self) -> Formula:
        f = self.odisj()
        while self.accept("or"):
            f = Or(f, self.odisj())
        return f

    def odisj(self) -> Formula:
        f = self.conj()
        while self.accept("times"):
            f = OrderedOr(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.neg()
        while self.accept("and"):
            f = And(f, self.neg())
        return f

    def neg(self) -> Formula:
        t = self.tok
        if self.accept("not"):
            return Implies(self.neg(), BOT)
        if self.accept("lpar"):
            f = self.formula()
            if not self.accept("rpar"):
                self.fail("expected ')'")
            return f
        if self.accept("atom"):
            return Atom(t.text)
        if self.accept("false"):
            return BOT
        if self.accept("true"):
            return TOP
        self.fail("expected a formula")


def parse_theory(text: str) -> Program:
    """Parse a whole theory; raises ``ParseError`` with line/column on failure."""
    return _Parser(text).program()


def parse_formula(text: str) -> Formula:
    """Parse a single formula (no trailing dot)."""
    p = _Parser(text)
    f = p.formula()
    if p.tok.kind != "eof":
        p.fail("unexpected trailing input")
    return f


# precedence levels, loosest first
_IMPL, _DISJ, _ODISJ, _CONJ, _UNARY = range(5)

_BINARY = {
    Or: (_DISJ, " | "),
    OrderedOr: (_ODISJ, " * "),
    And: (_CONJ, " & "),
}


def to_text(f: Formula, level: int = _IMPL) -> str:
    """Print ``f`` with the fewest parentheses that parse back to ``f``."""
    if isinstance(f, Bottom):
        return "#false"
    if isinstance(f, Atom):
        return f.name
    if f == TOP:
        return "#true"
    if is_negation(f):
        return "~" + to_text(f.left, _UNARY)
    if isinstance(f, Implies):
        out = f"{to_text(f.left, _DISJ)} -> {to_text(f.right, _IMPL)}"
        own = _IMPL
    else:
        own, sym = _BINARY[type(f)]
        out = to_text(f.left, own) + sym + to_text(f.right, own + 1)
    return f"({out})" if own < level else out


def statement_text(f: Formula) -> str:
    """Print one statement, using rule notation for top-level implications."""
    if isinstance(f, Implies) and f != TOP:
        head = "" if f.right == BOT else to_text(f.right, _DISJ) + " "
        return f"{head}:- {to_text(f.left, _DISJ)}."
    return to_text(f) + "."


def program_text(p: Program) -> str:
    return "".join(statement_text(s) + "\n" for s in p.statements)
