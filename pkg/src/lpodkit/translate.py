"""Equivalent representations of ordered disjunction and program translations.

An ordered disjunction ``A[1] * ... * A[n]`` is strongly equivalent to

* the expansion ``A[1] | (~A[1] & A[2]) | ... | (~A[1] & ... & ~A[n-1] & A[n])``,
* the conjunction of choice implications
  ``A[i] | ~A[i] <- ~A[1] & ... & ~A[i-1]`` plus ``#false <- ~A[1] & ... & ~A[n]``,
* ``(A[1] | ... | A[n])`` conjoined with ``(A[1] | ... | A[i]) | ~A[i]`` for ``i < n``.

The second one, with the rule body pushed into every implication, turns an
LPOD into a disjunctive program with negation in the head (``star``), which
``refine`` and ``eliminate_head_negation`` bring down to a normal program.
"""

from __future__ import annotations

import os
import re
import shlex
import subprocess
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .errors import LpodError, NameCollision, UnsupportedConstruct
from .formula import BOT, Atom, Formula, Implies, Or, Program, conj, disj, neg
from .ht import sort_models
from .lpod import LpodRule, signature_of
from .rules import Rule, atoms_of_rules, body_literals, format_rule, rule_from_formula

AUX_PREFIX = "__od_aux_"
SOLVER_ENV = "LPODKIT_SOLVER"
_MAX_SUFFIX = 10_000


def _negs(items: Sequence[Formula]) -> List[Formula]:
    return [neg(x) for x in items]


def expand_x(a: Sequence[Formula]) -> Formula:
    return disj(conj(_negs(a[:i]) + [a[i]]) for i in range(len(a)))


def _choice(a: Sequence[Formula], i: int) -> Formula:
    head = Or(a[i], neg(a[i]))
    return head if i == 0 else Implies(conj(_negs(a[:i])), head)


def conj_form(a: Sequence[Formula]) -> Formula:
    parts = [_choice(a, i) for i in range(len(a))]
    parts.append(Implies(conj(_negs(a)), BOT))
    return conj(parts)


def third_form(a: Sequence[Formula]) -> Formula:
    # only i <= n-1 conjuncts: an n-th one would repeat (| A) | ~A[n]
    if not a:
        return BOT
    return conj([disj(a)] + [Or(disj(a[: i + 1]), neg(a[i])) for i in range(len(a) - 1)])


def _names(a: Sequence) -> Tuple[str, ...]:
    out = []
    for x in a:
        if isinstance(x, str):
            out.append(x)
        elif isinstance(x, Atom):
            out.append(x.name)
        else:
            raise UnsupportedConstruct(f"rule heads must be atoms, got {x!r}")
    return tuple(out)


def _extend(neg_body: Tuple[str, ...], extra: Sequence[str]) -> Tuple[str, ...]:
    return tuple(dict.fromkeys(neg_body + tuple(extra)))


def choice_rule(a: str, body_pos=(), body_neg=()) -> Rule:
    """``a | not a :- body``."""
    return Rule((a,), (a,), tuple(body_pos), tuple(body_neg))


def is_choice_rule(r: Rule) -> bool:
    return len(r.head_pos) == 1 and r.head_neg == r.head_pos


def _compose(body_pos, body_neg, head: Tuple[str, ...]) -> List[Rule]:
    out = [choice_rule(a, body_pos, _extend(body_neg, head[:i])) for i, a in enumerate(head)]
    out.append(Rule((), (), body_pos, _extend(body_neg, head)))
    return out


def compose_rule(body: Formula, head_seq: Sequence) -> List[Rule]:
    """Push a literal conjunction ``body`` into every implication of
    ``conj_form(head_seq)``."""
    body_pos, body_neg = body_literals(body)
    return _compose(body_pos, body_neg, _names(head_seq))


@dataclass(frozen=True)
class StarProgram:
    """Rules of a translated LPOD, each tagged with its source rule index."""

    rules: Tuple[Rule, ...] = ()
    origin: Tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.rules) != len(self.origin):
            raise ValueError("every rule needs an origin")

    @property
    def choice_rules(self) -> List[Rule]:
        return [r for r in self.rules if is_choice_rule(r)]

    @property
    def constraints(self) -> List[Rule]:
        return [r for r in self.rules if r.is_constraint]

    @property
    def definite_rules(self) -> List[Rule]:
        return [r for r in self.rules if r.head_pos and not r.head_neg]

    def from_source(self, k: int) -> List[Rule]:
        return [r for r, o in zip(self.rules, self.origin) if o == k]

    def as_theory(self) -> Program:
        return Program(tuple(r.as_formula() for r in self.rules))

    def __iter__(self):
        return iter(self.rules)

    def __len__(self):
        return len(self.rules)


def star(p: Sequence[LpodRule]) -> StarProgram:
    rules, origin = [], []
    for k, r in enumerate(p):
        r = r.normalized()
        translated = _compose(r.body_pos, r.body_neg, r.head)
        rules += translated
        origin += [k] * len(translated)
    return StarProgram(tuple(rules), tuple(origin))


def refine(sp: StarProgram) -> StarProgram:
    """Drop each source rule's constraint and turn its last choice rule into
    the definite rule ``A[m] :- body, not A[1..m-1]``."""
    rules, origin = [], []
    for k in dict.fromkeys(sp.origin):
        group = sp.from_source(k)
        choices = [r for r in group if is_choice_rule(r)]
        if choices and any(r.is_constraint for r in group):
            last = choices[-1]
            group = [r for r in group if not r.is_constraint and r is not last]
            group.append(Rule(last.head_pos, (), last.body_pos, last.body_neg))
        rules += group
        origin += [k] * len(group)
    return StarProgram(tuple(rules), tuple(origin))


def aux_name(base: str, taken) -> str:
    """A fresh atom name derived from ``base`` that is not in ``taken``."""
    if base not in taken:
        return base
    for n in range(1, _MAX_SUFFIX):
        candidate = f"{base}_{n}"
        if candidate not in taken:
            return candidate
    raise NameCollision(f"no fresh name available for {base!r}")


def eliminate_head_negation(rules: Union[StarProgram, Iterable[Rule]], signature=()) -> List[Rule]:
    """Rewrite ``F | not p :- G`` as ``F :- G, not aux_p`` plus ``aux_p :- not p``.

    Auxiliary atoms are named ``__od_aux_<p>`` (with a numeric suffix if that
    name is already used) and defined once per negated head atom.
    """
    rules = list(rules)
    taken = set(atoms_of_rules(rules)) | set(signature)
    aux = {}
    out = []
    for r in rules:
        if not r.head_neg:
            out.append(r)
            continue
        names = []
        for p in r.head_neg:
            if p not in aux:
                aux[p] = aux_name(AUX_PREFIX + p, taken)
                taken.add(aux[p])
            names.append(aux[p])
        out.append(Rule(r.head_pos, (), r.body_pos, _extend(r.body_neg, names)))
    out += [Rule.normal(a, (), (p,)) for p, a in aux.items()]
    return out


def restrict(models: Iterable, signature) -> List[frozenset]:
    """Project models onto ``signature`` (dropping auxiliary atoms)."""
    signature = frozenset(signature)
    return sort_models(frozenset(m) & signature for m in models)


DIALECTS = ("lpod", "core2")


def emit_solver_text(rules: Iterable[Union[Rule, Formula]], dialect: str = "core2") -> str:
    """One rule per line.

    ``lpod`` is the input syntax of this package; ``core2`` is ASP-Core-2,
    which has no default negation in rule heads.
    """
    if dialect not in DIALECTS:
        raise ValueError(f"unknown dialect {dialect!r}")
    lines = []
    for r in rules:
        if isinstance(r, Formula):
            r = rule_from_formula(r)
        if dialect == "core2" and r.head_neg:
            raise UnsupportedConstruct(f"default negation in the head is not ASP-Core-2: {format_rule(r)}")
        lines.append(format_rule(r))
    return "".join(line + "\n" for line in lines)


def normal_program(p: Sequence[LpodRule]) -> List[Rule]:
    """LPOD to normal program: star, refine, then head-negation elimination."""
    return eliminate_head_negation(refine(star(p)), signature_of(p))


_SOLVER_ATOMS = re.compile(r"\s*(?:_*[a-z][A-Za-z0-9_]*\s*)*\Z")


def parse_solver_output(text: str) -> List[frozenset]:
    """Answer sets from solver output.

    With clasp-style ``Answer: n`` headers the line after each header is the
    model; otherwise every nonblank line made only of atoms is one model.
    """
    lines = text.splitlines()
    if any(line.startswith("Answer:") for line in lines):
        picked = [lines[k + 1] if k + 1 < len(lines) else "" for k, line in enumerate(lines) if line.startswith("Answer:")]
    else:
        picked = [line for line in lines if line.strip() and _SOLVER_ATOMS.match(line)]
    return [frozenset(line.split()) for line in picked]


def run_solver(text: str, solver: Optional[str] = None, timeout: float = 60.0) -> List[frozenset]:
    """Pipe ``text`` into an external solver and collect its answer sets.

    ``solver`` (or ``$LPODKIT_SOLVER``) is a command line, e.g. ``"clingo 0"``.
    """
    command = solver or os.environ.get(SOLVER_ENV)
    if not command:
        raise LpodError(f"no external solver configured (set {SOLVER_ENV})")
    proc = subprocess.run(shlex.split(command), input=text, capture_output=True, text=True, timeout=timeout)
    # clasp reports SAT/UNSAT/exhausted through exit codes 10, 20 and 30
    if proc.returncode not in (0, 10, 20, 30):
        raise LpodError(f"solver exited with {proc.returncode}: {proc.stderr.strip()}")
    return parse_solver_output(proc.stdout)
