"""Seeded random programs, formulas and sequences for property checks."""

from __future__ import annotations

import random
from typing import List, Sequence

from .dlpod import DlpodRule, OdnfHead
from .formula import BOT, TOP, And, Atom, Formula, Implies, Or, OrderedOr, neg
from .lpod import LpodRule

ATOMS = ("a", "b", "c", "d")


def _body(rng: random.Random, atoms: Sequence[str]):
    pos, negs = [], []
    for a in atoms:
        roll = rng.random()
        if roll < 0.2:
            pos.append(a)
        elif roll < 0.4:
            negs.append(a)
    return tuple(pos), tuple(negs)


def random_lpod(rng: random.Random, max_rules: int = 4, max_atoms: int = 4, max_head: int = 3) -> List[LpodRule]:
    """Up to ``max_rules`` rules; heads may repeat atoms and may be empty."""
    atoms = ATOMS[:max_atoms] if max_atoms <= len(ATOMS) else [f"p{k}" for k in range(max_atoms)]
    rules = []
    for _ in range(rng.randint(1, max_rules)):
        size = rng.choices(range(max_head + 1), weights=[1] + [3] * max_head)[0]
        head = tuple(rng.choice(atoms) for _ in range(size))
        rules.append(LpodRule(head, *_body(rng, atoms)))
    return rules


def random_formula(rng: random.Random, atoms: Sequence[str] = ATOMS[:3], depth: int = 2) -> Formula:
    if depth == 0 or rng.random() < 0.3:
        roll = rng.random()
        if roll < 0.08:
            return BOT
        if roll < 0.12:
            return TOP
        return Atom(rng.choice(atoms))
    kind = rng.choice((And, Or, Implies, OrderedOr, "neg"))
    if kind == "neg":
        return neg(random_formula(rng, atoms, depth - 1))
    return kind(random_formula(rng, atoms, depth - 1), random_formula(rng, atoms, depth - 1))


def random_sequence(rng: random.Random, max_len: int = 4, max_atoms: int = 4) -> tuple:
    """A sequence of atoms and literals, with repetitions, occasionally a
    compound formula."""
    atoms = ATOMS[:max_atoms]
    out = []
    for _ in range(rng.randint(0, max_len)):
        roll = rng.random()
        if roll < 0.6:
            out.append(Atom(rng.choice(atoms)))
        elif roll < 0.8:
            out.append(neg(rng.choice(atoms)))
        else:
            out.append(random_formula(rng, atoms, 1))
    return tuple(out)


def random_odnf_dlpod(rng: random.Random, max_rules: int = 3, max_atoms: int = 4) -> List[DlpodRule]:
    atoms = ATOMS[:max_atoms]
    rules = []
    for _ in range(rng.randint(1, max_rules)):
        n = rng.choices((0, 1, 2, 3), weights=(1, 3, 4, 2))[0]
        disjuncts = tuple(
            tuple(rng.choice(atoms) for _ in range(rng.randint(1, 3))) for _ in range(n)
        )
        rules.append(DlpodRule(OdnfHead(disjuncts), *_body(rng, atoms)))
    return rules


def random_od_term(rng: random.Random, atoms: Sequence[str] = ATOMS[:3], depth: int = 3) -> Formula:
    if depth == 0 or rng.random() < 0.3:
        return Atom(rng.choice(atoms))
    kind = rng.choice((Or, OrderedOr))
    return kind(random_od_term(rng, atoms, depth - 1), random_od_term(rng, atoms, depth - 1))
