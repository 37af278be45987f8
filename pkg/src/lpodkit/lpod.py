"""Logic programs with ordered disjunction: split programs, the x-reduct,
satisfaction degrees and the three preference orders."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import EmptyHead, NotAnLpod, NotAnswerSet, NotPositive, Unsatisfied
from .formula import (
    BOT,
    TOP,
    And,
    Atom,
    Formula,
    Implies,
    OrderedOr,
    Program,
    conj,
    flatten,
    is_negation,
    neg,
    ofold,
    ordered_dedup,
)
from .ht import check_signature, equilibrium_models, sort_models, subsets
from .rules import Rule, gl_reduct

NormalRule = Rule


@dataclass(frozen=True)
class LpodRule:
    """``A[1] * ... * A[m] :- B, not B'``; an empty head is a constraint."""

    head: Tuple[str, ...] = ()
    body_pos: Tuple[str, ...] = ()
    body_neg: Tuple[str, ...] = ()

    def __post_init__(self):
        for name in ("head", "body_pos", "body_neg"):
            value = getattr(self, name)
            if isinstance(value, str):
                raise TypeError(f"{name} must be a sequence of atom names")
            object.__setattr__(self, name, tuple(value))

    @property
    def is_constraint(self) -> bool:
        return not self.head

    def normalized(self) -> "LpodRule":
        """Drop repeated head atoms, keeping the leftmost occurrence."""
        return LpodRule(ordered_dedup(self.head), self.body_pos, self.body_neg)

    def atoms(self) -> frozenset:
        return frozenset(self.head + self.body_pos + self.body_neg)

    def body_formula(self) -> Formula:
        return conj([Atom(a) for a in self.body_pos] + [neg(a) for a in self.body_neg])

    def as_formula(self) -> Formula:
        head = ofold(Atom(a) for a in self.head)
        if not self.body_pos and not self.body_neg:
            return head
        return Implies(self.body_formula(), head)

    def body_holds(self, i) -> bool:
        return all(a in i for a in self.body_pos) and not any(a in i for a in self.body_neg)

    def satisfied_by(self, i) -> bool:
        """Classical satisfaction, reading the head as a plain disjunction."""
        return not self.body_holds(i) or any(a in i for a in self.head)

    def __str__(self):
        head = " * ".join(self.head)
        body = ", ".join(list(self.body_pos) + [f"not {a}" for a in self.body_neg])
        if not body:
            return f"{head}." if head else ":- #true."
        return f"{head} :- {body}." if head else f":- {body}."


def _body_literals(body: Formula):
    pos, negs = [], []
    for x in flatten(body, And):
        if x == TOP:
            continue
        if isinstance(x, Atom):
            pos.append(x.name)
        elif is_negation(x) and isinstance(x.left, Atom):
            negs.append(x.left.name)
        else:
            return None
    return tuple(pos), tuple(negs)


def _head_atoms(head: Formula):
    out = []
    for x in flatten(head, OrderedOr):
        if x == BOT:
            continue
        if not isinstance(x, Atom):
            return None
        out.append(x.name)
    return tuple(out)


def lpod_rule_from_formula(f: Formula) -> LpodRule:
    if isinstance(f, Implies) and f != TOP:
        body, head = f.left, f.right
    else:
        body, head = TOP, f
    lits = _body_literals(body)
    atoms = _head_atoms(head)
    if lits is None or atoms is None:
        raise NotAnLpod(f"not an LPOD rule: {f!r}")
    return LpodRule(atoms, *lits)


def lpod_from_program(p: Program) -> List[LpodRule]:
    """Read every statement of ``p`` as an LPOD rule."""
    out = []
    for k, f in enumerate(p.statements):
        try:
            out.append(lpod_rule_from_formula(f))
        except NotAnLpod:
            where = f" at line {p.positions[k][0]}" if k < len(p.positions) else ""
            raise NotAnLpod(f"statement {k + 1}{where} is not an LPOD rule") from None
    return out


def as_theory(p: Sequence[LpodRule]) -> Program:
    return Program(tuple(r.as_formula() for r in p))


def signature_of(p: Iterable[LpodRule]) -> frozenset:
    out = set()
    for r in p:
        out |= r.atoms()
    return frozenset(out)


def option(r: LpodRule, k: int) -> NormalRule:
    """The k-th option ``A[k] :- B, not B', not A[1..k-1]`` (1-based)."""
    if not 1 <= k <= len(r.head):
        raise IndexError(f"option {k} out of range for a head of length {len(r.head)}")
    return Rule.normal(r.head[k - 1], r.body_pos, r.body_neg + r.head[: k - 1])


def _as_split_choices(r: LpodRule) -> List[NormalRule]:
    if r.is_constraint:
        return [Rule.normal(None, r.body_pos, r.body_neg)]
    return [option(r, k) for k in range(1, len(r.head) + 1)]


def split_programs(p: Sequence[LpodRule]) -> Iterator[List[NormalRule]]:
    """Every way of replacing each rule by one of its options.

    Constraints are copied unchanged; programs are produced in lexicographic
    order of the chosen option indices.
    """
    choices = [_as_split_choices(r.normalized()) for r in p]
    for combo in product(*choices):
        yield list(combo)


def reduct(p: Iterable[NormalRule], i) -> List[NormalRule]:
    """Gelfond-Lifschitz reduct of a normal program."""
    return gl_reduct(p, i)


class _Inconsistent:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Inconsistent"

    def __bool__(self):
        return False


Inconsistent = _Inconsistent()


def least_model(p: Iterable[NormalRule]):
    """Least model of a positive normal program, or ``Inconsistent`` when the
    body of a constraint is derived."""
    p = list(p)
    for r in p:
        if not r.is_positive or not r.is_normal:
            raise NotPositive(f"not a positive normal rule: {r}")
    model = set()
    changed = True
    while changed:
        changed = False
        for r in p:
            if r.head_pos and r.head_pos[0] in model:
                continue
            if all(a in model for a in r.body_pos):
                if not r.head_pos:
                    return Inconsistent
                model.add(r.head_pos[0])
                changed = True
    return frozenset(model)


def x_reduct(p: Iterable[LpodRule], i) -> List[NormalRule]:
    out = []
    for r in p:
        if any(a in i for a in r.body_neg):
            continue
        for a in r.head:
            if a in i:
                out.append(Rule.normal(a, r.body_pos))
                # every later index needs this atom false
                break
    return out


def is_normal_answer_set(p: Sequence[NormalRule], i) -> bool:
    return least_model(reduct(p, i)) == frozenset(i)


def answer_sets_split(p: Sequence[LpodRule], max_atoms: Optional[int] = None) -> List[frozenset]:
    """Union of the answer sets of all split programs."""
    p = list(p)
    sig = signature_of(p)
    check_signature(sig, max_atoms)
    candidates = list(subsets(sig))
    found = set()
    for split in split_programs(p):
        found.update(i for i in candidates if i not in found and is_normal_answer_set(split, i))
    return sort_models(found)


def is_answer_set(p: Sequence[LpodRule], i) -> bool:
    """``i`` satisfies ``p`` and is the least model of its x-reduct."""
    i = frozenset(i)
    normalized = [r.normalized() for r in p]
    return all(r.satisfied_by(i) for r in normalized) and least_model(x_reduct(normalized, i)) == i


def answer_sets_reduct(p: Sequence[LpodRule], max_atoms: Optional[int] = None) -> List[frozenset]:
    p = list(p)
    sig = signature_of(p)
    check_signature(sig, max_atoms)
    return [i for i in subsets(sig) if is_answer_set(p, i)]


def answer_sets_equilibrium(p: Sequence[LpodRule], max_atoms: Optional[int] = None) -> List[frozenset]:
    """Equilibrium models of the rules read as HT formulas."""
    return equilibrium_models(as_theory(p), max_atoms)


def degree(i, r: LpodRule) -> int:
    """Satisfaction degree of ``r`` in ``i``: 1 if the body fails, else the
    position of the first head atom in ``i``."""
    if not r.head:
        raise EmptyHead(f"constraint has no satisfaction degree: {r}")
    if not r.body_holds(i):
        return 1
    for j, a in enumerate(r.head, start=1):
        if a in i:
            return j
    raise Unsatisfied(f"{sorted(i)} does not satisfy {r}")


@dataclass(frozen=True)
class DegreeProfile:
    """Degrees keyed by 1-based rule position; constraints are left out."""

    degrees: Dict[int, int] = field(default_factory=dict)

    def rules_at(self, k: int) -> frozenset:
        return frozenset(r for r, d in self.degrees.items() if d == k)

    def count_at(self, k: int) -> int:
        return len(self.rules_at(k))

    def max_degree(self) -> int:
        return max(self.degrees.values(), default=1)

    def as_tuple(self) -> Tuple[int, ...]:
        return tuple(self.degrees[k] for k in sorted(self.degrees))


def degree_profile(i, p: Sequence[LpodRule]) -> DegreeProfile:
    return DegreeProfile({k: degree(i, r) for k, r in enumerate(p, start=1) if r.head})


class Criterion(str, enum.Enum):
    CARDINALITY = "cardinality"
    INCLUSION = "inclusion"
    PARETO = "pareto"

    @classmethod
    def parse(cls, text: str) -> "Criterion":
        text = text.lower()
        for c in cls:
            if text in (c.value, c.value[0]):
                return c
        raise ValueError(f"unknown criterion {text!r}; use c, i or p")


class Preference(str, enum.Enum):
    I_PREFERRED = "i_preferred"
    J_PREFERRED = "j_preferred"
    INCOMPARABLE = "incomparable"
    EQUAL = "equal"


def _cardinality_better(a: DegreeProfile, b: DegreeProfile, top: int) -> bool:
    for k in range(1, top + 1):
        if a.count_at(k) != b.count_at(k):
            return a.count_at(k) > b.count_at(k)
    return False


def _inclusion_better(a: DegreeProfile, b: DegreeProfile, top: int) -> bool:
    for k in range(1, top + 1):
        ak, bk = a.rules_at(k), b.rules_at(k)
        if ak != bk:
            # the first differing level decides: a must strictly contain b
            return ak > bk
    return False


def _pareto_better(a: DegreeProfile, b: DegreeProfile, top: int) -> bool:
    pairs = [(a.degrees[r], b.degrees[r]) for r in a.degrees]
    return any(x < y for x, y in pairs) and not any(x > y for x, y in pairs)


_BETTER = {
    Criterion.CARDINALITY: _cardinality_better,
    Criterion.INCLUSION: _inclusion_better,
    Criterion.PARETO: _pareto_better,
}


def _criterion(c) -> Criterion:
    return c if isinstance(c, Criterion) else Criterion.parse(c)


def compare_profiles(a: DegreeProfile, b: DegreeProfile, criterion) -> Preference:
    criterion = _criterion(criterion)
    better = _BETTER[criterion]
    top = max(a.max_degree(), b.max_degree())
    if better(a, b, top):
        return Preference.I_PREFERRED
    if better(b, a, top):
        return Preference.J_PREFERRED
    if criterion is Criterion.CARDINALITY:
        same = all(a.count_at(k) == b.count_at(k) for k in range(1, top + 1))
    else:
        same = a.degrees == b.degrees
    return Preference.EQUAL if same else Preference.INCOMPARABLE


def prefer(i, j, p: Sequence[LpodRule], criterion) -> Preference:
    """Compare two answer sets of ``p`` under ``criterion``."""
    for s in (i, j):
        if not is_answer_set(p, s):
            raise NotAnswerSet(f"{sorted(s)} is not an answer set")
    normalized = [r.normalized() for r in p]
    return compare_profiles(degree_profile(i, normalized), degree_profile(j, normalized), criterion)


def preferred_answer_sets(
    p: Sequence[LpodRule], criterion, max_atoms: Optional[int] = None
) -> List[frozenset]:
    """Answer sets to which no other answer set is strictly preferred."""
    criterion = _criterion(criterion)
    normalized = [r.normalized() for r in p]
    sets = answer_sets_split(normalized, max_atoms)
    profiles = {s: degree_profile(s, normalized) for s in sets}
    return [
        s
        for s in sets
        if not any(
            compare_profiles(profiles[o], profiles[s], criterion) is Preference.I_PREFERRED
            for o in sets
            if o != s
        )
    ]
