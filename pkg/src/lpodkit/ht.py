"""Here-and-There satisfaction, model enumeration and strong equivalence."""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Union

from .errors import SignatureTooLarge
from .formula import And, Atom, Bottom, Formula, Implies, Or, OrderedOr, Program

DEFAULT_MAX_ATOMS = 18
MAX_ATOMS_ENV = "LPODKIT_MAX_ATOMS"

TheoryLike = Union[Program, Formula, Iterable[Formula]]


def resolve_max_atoms(max_atoms: Optional[int] = None) -> int:
    if max_atoms is None:
        max_atoms = int(os.environ.get(MAX_ATOMS_ENV, DEFAULT_MAX_ATOMS))
    if max_atoms < 1:
        raise ValueError("atom cap must be at least 1")
    return max_atoms


def check_signature(signature, max_atoms: Optional[int] = None) -> None:
    cap = resolve_max_atoms(max_atoms)
    if len(signature) > cap:
        raise SignatureTooLarge(len(signature), cap)


def as_program(theory: TheoryLike) -> Program:
    if isinstance(theory, Program):
        return theory
    if isinstance(theory, Formula):
        return Program((theory,))
    return Program(tuple(theory))


@dataclass(frozen=True)
class HtInterpretation:
    here: frozenset
    there: frozenset

    def __post_init__(self):
        here, there = frozenset(self.here), frozenset(self.there)
        if not here <= there:
            raise ValueError(f"here {sorted(here)} is not a subset of there {sorted(there)}")
        object.__setattr__(self, "here", here)
        object.__setattr__(self, "there", there)

    @property
    def total(self) -> bool:
        return self.here == self.there

    def __str__(self):
        return f"<{{{', '.join(sorted(self.here))}}}, {{{', '.join(sorted(self.there))}}}>"


def classical_sat(t, f: Formula) -> bool:
    """Two-valued satisfaction; ``*`` is evaluated as plain disjunction."""
    if isinstance(f, Atom):
        return f.name in t
    if isinstance(f, Bottom):
        return False
    if isinstance(f, And):
        return classical_sat(t, f.left) and classical_sat(t, f.right)
    if isinstance(f, (Or, OrderedOr)):
        return classical_sat(t, f.left) or classical_sat(t, f.right)
    if isinstance(f, Implies):
        return not classical_sat(t, f.left) or classical_sat(t, f.right)
    raise TypeError(f"not a formula: {f!r}")


def _ht(h, t, f: Formula) -> bool:
    if isinstance(f, Atom):
        return f.name in h
    if isinstance(f, Bottom):
        return False
    if isinstance(f, And):
        return _ht(h, t, f.left) and _ht(h, t, f.right)
    if isinstance(f, Or):
        return _ht(h, t, f.left) or _ht(h, t, f.right)
    if isinstance(f, Implies):
        if not classical_sat(t, f):
            return False
        return not _ht(h, t, f.left) or _ht(h, t, f.right)
    if isinstance(f, OrderedOr):
        # F | (~F & G); an HT negation only depends on the there-world
        return _ht(h, t, f.left) or (not classical_sat(t, f.left) and _ht(h, t, f.right))
    raise TypeError(f"not a formula: {f!r}")


def ht_sat(i: HtInterpretation, f: Formula) -> bool:
    return _ht(i.here, i.there, f)


def model_key(atoms) -> tuple:
    """Deterministic order on atom sets: by size, then lexicographically."""
    return (len(atoms), sorted(atoms))


def sort_models(models: Iterable) -> List[frozenset]:
    return sorted({frozenset(m) for m in models}, key=model_key)


def subsets(atoms, proper: bool = False) -> Iterator[frozenset]:
    """All subsets of ``atoms`` in ``model_key`` order."""
    atoms = sorted(atoms)
    top = len(atoms) if not proper else len(atoms) - 1
    for k in range(top + 1):
        for combo in combinations(atoms, k):
            yield frozenset(combo)


def _holds(h, t, statements) -> bool:
    return all(_ht(h, t, s) for s in statements)


def _classical_holds(t, statements) -> bool:
    return all(classical_sat(t, s) for s in statements)


def ht_models(theory: TheoryLike, max_atoms: Optional[int] = None) -> List[HtInterpretation]:
    """Every HT model over the signature, sorted by there-world then here-world."""
    p = as_program(theory)
    check_signature(p.signature, max_atoms)
    out = []
    for t in subsets(p.signature):
        # persistence: no here-world can help if T itself is not a model
        if not _classical_holds(t, p.statements):
            continue
        for h in subsets(t):
            if _holds(h, t, p.statements):
                out.append(HtInterpretation(h, t))
    return out


def is_equilibrium_model(theory: TheoryLike, t) -> bool:
    p = as_program(theory)
    t = frozenset(t)
    if not _classical_holds(t, p.statements):
        return False
    return not any(_holds(h, t, p.statements) for h in subsets(t, proper=True))


def equilibrium_models(theory: TheoryLike, max_atoms: Optional[int] = None) -> List[frozenset]:
    p = as_program(theory)
    check_signature(p.signature, max_atoms)
    return [t for t in subsets(p.signature) if is_equilibrium_model(p, t)]


@dataclass(frozen=True)
class Counterexample:
    """``interpretation`` satisfies program ``model_of`` but not ``formula``,
    a statement of the other program."""

    interpretation: HtInterpretation
    formula: Formula
    model_of: int


@dataclass(frozen=True)
class SeVerdict:
    equivalent: bool
    counterexample: Optional[Counterexample] = None

    def __post_init__(self):
        if self.equivalent != (self.counterexample is None):
            raise ValueError("a verdict carries a counterexample iff it is negative")

    def __bool__(self):
        return self.equivalent


def strongly_equivalent(p1: TheoryLike, p2: TheoryLike, max_atoms: Optional[int] = None) -> SeVerdict:
    """Decide strong equivalence by comparing HT models over the union signature."""
    p1, p2 = as_program(p1), as_program(p2)
    signature = p1.signature | p2.signature
    check_signature(signature, max_atoms)
    sides = (p1.statements, p2.statements)
    for t in subsets(signature):
        for h in subsets(t):
            holds = [_holds(h, t, s) for s in sides]
            if holds[0] == holds[1]:
                continue
            good = 0 if holds[0] else 1
            bad = sides[1 - good]
            culprit = next(f for f in bad if not _ht(h, t, f))
            i = HtInterpretation(h, t)
            if not (all(ht_sat(i, f) for f in sides[good]) and not ht_sat(i, culprit)):
                raise AssertionError(f"counterexample {i} failed re-verification")
            return SeVerdict(False, Counterexample(i, culprit, good + 1))
    return SeVerdict(True)
