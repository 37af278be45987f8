"""Propositional formulas over a finite signature.

Only ``Bottom``, ``Atom``, ``And``, ``Or``, ``Implies`` and ``OrderedOr`` are
AST nodes.  Negation and the truth constant are abbreviations built from
implication: ``~F`` is ``F -> #false`` and ``#true`` is ``#false -> #false``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence, Tuple, Union

ATOM_PATTERN = re.compile(r"_*[a-z][A-Za-z0-9_]*\Z")


class Formula:
    """Base class of all formula nodes."""

    __slots__ = ()

    def __str__(self):
        from .parser import to_text

        return to_text(self)


@dataclass(frozen=True, slots=True)
class Bottom(Formula):
    def __repr__(self):
        return "BOT"


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not ATOM_PATTERN.match(self.name):
            raise ValueError(f"invalid atom name {self.name!r}")

    def __repr__(self):
        return self.name


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class OrderedOr(Formula):
    left: Formula
    right: Formula


BOT = Bottom()
TOP = Implies(BOT, BOT)

FormulaSeq = Tuple[Formula, ...]
AtomLike = Union[str, Formula]


def atom(x: AtomLike) -> Formula:
    """Coerce an atom name into an ``Atom``; formulas pass through."""
    return Atom(x) if isinstance(x, str) else x


def neg(f: AtomLike) -> Implies:
    return Implies(atom(f), BOT)


def is_negation(f: Formula) -> bool:
    return isinstance(f, Implies) and f.right == BOT and f != TOP


def implies(body: AtomLike, head: AtomLike) -> Implies:
    return Implies(atom(body), atom(head))


def rule(head: AtomLike, body: AtomLike = TOP) -> Implies:
    """``head <- body`` written in rule order."""
    return Implies(atom(body), atom(head))


def _fold(op, items: Iterable[AtomLike], empty: Formula) -> Formula:
    items = [atom(x) for x in items]
    if not items:
        return empty
    return reduce(op, items)


def conj(items: Iterable[AtomLike]) -> Formula:
    """Left-folded conjunction; the empty conjunction is ``#true``."""
    return _fold(And, items, TOP)


def disj(items: Iterable[AtomLike]) -> Formula:
    """Left-folded disjunction; the empty disjunction is ``#false``."""
    return _fold(Or, items, BOT)


def ofold(items: Iterable[AtomLike]) -> Formula:
    """Left-folded ordered disjunction; the empty one is ``#false``."""
    return _fold(OrderedOr, items, BOT)


def seq(*items: AtomLike) -> FormulaSeq:
    return tuple(atom(x) for x in items)


def desugar(f: Formula) -> Formula:
    """Replace every ``F * G`` by ``F | (~F & G)``, bottom-up."""
    if isinstance(f, (Bottom, Atom)):
        return f
    left, right = desugar(f.left), desugar(f.right)
    if isinstance(f, OrderedOr):
        return Or(left, And(neg(left), right))
    return type(f)(left, right)


def ordered_dedup(items: Sequence[Formula]) -> FormulaSeq:
    """Keep only the leftmost occurrence of each (syntactically) repeated item."""
    seen = set()
    out = []
    for x in items:
        if x not in seen:
            seen.add(x)
            out.append(x)
    return tuple(out)


def atoms_of(f: Formula) -> frozenset:
    """Names of the atoms occurring in ``f``."""
    out = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Atom):
            out.add(g.name)
        elif not isinstance(g, Bottom):
            stack.append(g.left)
            stack.append(g.right)
    return frozenset(out)


def contains_ordered_or(f: Formula) -> bool:
    if isinstance(f, OrderedOr):
        return True
    if isinstance(f, (Bottom, Atom)):
        return False
    return contains_ordered_or(f.left) or contains_ordered_or(f.right)


def flatten(f: Formula, node_type: type) -> list:
    """Operands of a maximal chain of ``node_type`` nodes, left to right."""
    if isinstance(f, node_type):
        return flatten(f.left, node_type) + flatten(f.right, node_type)
    return [f]


@dataclass(frozen=True)
class Program:
    """An ordered theory together with its signature.

    ``signature`` always contains every atom occurring in ``statements``;
    extra atoms may be supplied explicitly.  ``positions`` holds the
    (line, column) where each statement started when the program was parsed.
    """

    statements: Tuple[Formula, ...] = ()
    signature: frozenset = frozenset()
    positions: Tuple[Tuple[int, int], ...] = field(default=(), compare=False)

    def __post_init__(self):
        statements = tuple(self.statements)
        sig = set(self.signature)
        for s in statements:
            sig |= atoms_of(s)
        object.__setattr__(self, "statements", statements)
        object.__setattr__(self, "signature", frozenset(sig))

    @classmethod
    def of(cls, *statements: Formula, signature: Iterable[str] = ()) -> "Program":
        return cls(tuple(statements), frozenset(signature))

    def extend(self, *atoms: str) -> "Program":
        return Program(self.statements, self.signature | set(atoms), self.positions)

    def __iter__(self):
        return iter(self.statements)

    def __len__(self):
        return len(self.statements)
