"""Seeded randomized checks of the main results, shared by the CLI and tests."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import List

from .dlpod import as_theory as dlpod_theory, dlpod_answer_sets, dlpod_answer_sets_by_splits
from .formula import Program, ofold
from .generate import random_lpod, random_odnf_dlpod, random_sequence
from .ht import equilibrium_models, strongly_equivalent
from .lpod import answer_sets_equilibrium, answer_sets_reduct, answer_sets_split, signature_of
from .rules import answer_sets
from .translate import conj_form, expand_x, normal_program, restrict, star, third_form

FORMS = {"fold": ofold, "expand": expand_x, "conj": conj_form, "third": third_form}


@dataclass
class RandomReport:
    instances: int
    seed: int
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def check_lpod(p) -> List[str]:
    """Three procedures agree, and so do P* and the normal translation."""
    out = []
    split = answer_sets_split(p)
    if answer_sets_reduct(p) != split:
        out.append("reduct procedure disagrees with split programs")
    if answer_sets_equilibrium(p) != split:
        out.append("equilibrium procedure disagrees with split programs")
    if equilibrium_models(star(p).as_theory().extend(*signature_of(p))) != split:
        out.append("star translation changes the answer sets")
    normal = normal_program(p)
    if restrict(answer_sets(normal, signature_of(p)), signature_of(p)) != split:
        out.append("normal translation changes the answer sets")
    return out


def check_sequence(a) -> List[str]:
    out = []
    for (n1, f1), (n2, f2) in itertools.combinations(FORMS.items(), 2):
        if not strongly_equivalent(Program((f1(a),)), Program((f2(a),))):
            out.append(f"{n1} and {n2} forms differ")
    return out


def check_dlpod(p) -> List[str]:
    out = []
    found = dlpod_answer_sets(p)
    if found != dlpod_answer_sets_by_splits(p):
        out.append("pruned DLPOD search disagrees with the split union")
    if not set(equilibrium_models(dlpod_theory(p))) <= set(found):
        out.append("an equilibrium model is not a DLPOD answer set")
    return out


def random_checks(instances: int, seed: int) -> RandomReport:
    """``instances`` random LPODs, sequences and ODNF DLPODs from one seeded RNG."""
    rng = random.Random(seed)
    report = RandomReport(instances, seed)
    for k in range(instances):
        p = random_lpod(rng)
        a = random_sequence(rng)
        d = random_odnf_dlpod(rng)
        for kind, obj, problems in (
            ("lpod", p, check_lpod(p)),
            ("sequence", a, check_sequence(a)),
            ("dlpod", d, check_dlpod(d)),
        ):
            report.failures += [f"instance {k} ({kind} {_show(obj)}): {msg}" for msg in problems]
    return report


def _show(obj) -> str:
    if isinstance(obj, tuple):
        return "[" + ", ".join(str(x) for x in obj) + "]"
    return " ".join(str(r) for r in obj)
