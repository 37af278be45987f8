"""Rules of the form ``A | not A' :- B, not B'`` and their answer sets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import UnsupportedConstruct
from .formula import (
    BOT,
    TOP,
    And,
    Atom,
    Formula,
    Implies,
    Or,
    conj,
    contains_ordered_or,
    disj,
    flatten,
    is_negation,
    neg,
)
from .ht import check_signature, sort_models, subsets

Atoms = Tuple[str, ...]


@dataclass(frozen=True)
class Rule:
    """A (possibly disjunctive) rule with default negation in head and body.

    A rule with ``len(head_pos) <= 1`` and no ``head_neg`` is *normal*; an
    empty head is a constraint.
    """

    head_pos: Atoms = ()
    head_neg: Atoms = ()
    body_pos: Atoms = ()
    body_neg: Atoms = ()

    def __post_init__(self):
        for name in ("head_pos", "head_neg", "body_pos", "body_neg"):
            value = getattr(self, name)
            if isinstance(value, str):
                raise TypeError(f"{name} must be a sequence of atom names")
            object.__setattr__(self, name, tuple(value))

    @classmethod
    def normal(cls, head: Optional[str], body_pos: Sequence[str] = (), body_neg: Sequence[str] = ()) -> "Rule":
        return cls(() if head is None else (head,), (), tuple(body_pos), tuple(body_neg))

    @property
    def head(self) -> Optional[str]:
        """The head atom of a normal rule (``None`` for a constraint)."""
        if not self.is_normal:
            raise ValueError(f"not a normal rule: {self}")
        return self.head_pos[0] if self.head_pos else None

    @property
    def is_normal(self) -> bool:
        return len(self.head_pos) <= 1 and not self.head_neg

    @property
    def is_positive(self) -> bool:
        return not self.head_neg and not self.body_neg

    @property
    def is_constraint(self) -> bool:
        return not self.head_pos and not self.head_neg

    @property
    def has_head_negation(self) -> bool:
        return bool(self.head_neg)

    def atoms(self) -> frozenset:
        return frozenset(self.head_pos + self.head_neg + self.body_pos + self.body_neg)

    def body_formula(self) -> Formula:
        return conj([Atom(a) for a in self.body_pos] + [neg(a) for a in self.body_neg])

    def head_formula(self) -> Formula:
        return disj([Atom(a) for a in self.head_pos] + [neg(a) for a in self.head_neg])

    def as_formula(self) -> Formula:
        if not self.body_pos and not self.body_neg:
            return self.head_formula()
        return Implies(self.body_formula(), self.head_formula())

    def body_holds(self, i) -> bool:
        return all(a in i for a in self.body_pos) and not any(a in i for a in self.body_neg)

    def satisfied_by(self, i) -> bool:
        """Classical satisfaction by the set of true atoms ``i``."""
        if not self.body_holds(i):
            return True
        return any(a in i for a in self.head_pos) or any(a not in i for a in self.head_neg)

    def __str__(self):
        return format_rule(self)


def format_rule(r: Rule) -> str:
    """ASP-Core-2 style text, which the theory parser also reads back."""
    head = " | ".join(list(r.head_pos) + [f"not {a}" for a in r.head_neg])
    body = ", ".join(list(r.body_pos) + [f"not {a}" for a in r.body_neg])
    if not body:
        return f"{head}." if head else ":- #true."
    return f"{head} :- {body}." if head else f":- {body}."


def _literals(f: Formula, connective: type, neutral: Formula, what: str):
    pos, negs = [], []
    for x in flatten(f, connective):
        if x == neutral:
            continue
        if isinstance(x, Atom):
            pos.append(x.name)
        elif is_negation(x) and isinstance(x.left, Atom):
            negs.append(x.left.name)
        elif contains_ordered_or(x):
            raise UnsupportedConstruct(f"residual ordered disjunction in {what}")
        elif isinstance(x, Implies):
            raise UnsupportedConstruct(f"nested implication in {what}")
        else:
            raise UnsupportedConstruct(f"{what} is not a {connective.__name__.lower()} of literals")
    return tuple(pos), tuple(negs)


def body_literals(f: Formula):
    """Positive and negated atoms of a conjunction of literals."""
    return _literals(f, And, TOP, "rule body")


def rule_from_formula(f: Formula) -> Rule:
    """Read a formula of rule shape back into a ``Rule``.

    Raises ``UnsupportedConstruct`` for anything else (ordered disjunction,
    nested implications, non-literal subformulas).
    """
    if isinstance(f, Implies) and f != TOP:
        body, head = f.left, f.right
    else:
        body, head = TOP, f
    if body == BOT:
        raise UnsupportedConstruct("rule body is #false")
    head_pos, head_neg = _literals(head, Or, BOT, "rule head")
    body_pos, body_neg = _literals(body, And, TOP, "rule body")
    return Rule(head_pos, head_neg, body_pos, body_neg)


def rules_from_theory(statements: Iterable[Formula]) -> List[Rule]:
    return [rule_from_formula(f) for f in statements]


def atoms_of_rules(rules: Iterable[Rule]) -> frozenset:
    out = set()
    for r in rules:
        out |= r.atoms()
    return frozenset(out)


def gl_reduct(rules: Iterable[Rule], i) -> List[Rule]:
    """Gelfond-Lifschitz reduct: ``A :- B`` for each rule whose negated head
    atoms are all in ``i`` and whose negated body atoms are all outside ``i``."""
    return [
        Rule(r.head_pos, (), r.body_pos, ())
        for r in rules
        if all(a in i for a in r.head_neg) and not any(a in i for a in r.body_neg)
    ]


def _submasks(mask: int):
    """Proper submasks of ``mask``, largest first."""
    sub = (mask - 1) & mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _masked(rules: Iterable[Rule], index) -> list:
    out = []
    for r in rules:
        hm = bm = 0
        for a in r.head_pos:
            hm |= 1 << index[a]
        for a in r.body_pos:
            bm |= 1 << index[a]
        out.append((hm, bm))
    return out


def _is_model(mask: int, positive: list) -> bool:
    return all((bm & ~mask) or (hm & mask) for hm, bm in positive)


def is_answer_set(rules: Sequence[Rule], i) -> bool:
    """``i`` is a minimal model of the reduct of ``rules`` with respect to ``i``."""
    i = frozenset(i)
    index = {a: k for k, a in enumerate(sorted(i | atoms_of_rules(rules)))}
    mask = sum(1 << index[a] for a in i)
    positive = _masked(gl_reduct(rules, i), index)
    if not _is_model(mask, positive):
        return False
    if mask == 0:
        return True
    return not any(_is_model(sub, positive) for sub in _submasks(mask))


def answer_sets(rules: Sequence[Rule], signature=(), max_atoms: Optional[int] = None) -> List[frozenset]:
    """All answer sets, by enumeration of candidates over the signature."""
    rules = list(rules)
    sig = atoms_of_rules(rules) | frozenset(signature)
    check_signature(sig, max_atoms)
    return sort_models(i for i in subsets(sig) if is_answer_set(rules, i))


def program_text(rules: Iterable[Rule]) -> str:
    return "".join(format_rule(r) + "\n" for r in rules)
