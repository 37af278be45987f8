"""Disjunctive LPODs: heads mixing ``|`` and ``*`` over atoms.

Heads are rewritten into ordered disjunctive normal form (ODNF),
``(*A_1) | ... | (*A_n)``, with::

    F * (G | H)  ~>  (F * G) | (F * H)
    (F | G) * H  ~>  (F * H) | (G * H)
    (F * G) * H  ~>  F * G * H
    F * (G * H)  ~>  F * G * H

The answer sets of a DLPOD are those of its disjunctive split programs.  They
can differ from the equilibrium models of the same rules read as HT formulas;
``divergence_report`` puts both side by side.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from .errors import NotAnLpod
from .formula import (
    BOT,
    TOP,
    Atom,
    Formula,
    Implies,
    Or,
    OrderedOr,
    Program,
    atoms_of,
    conj,
    disj,
    flatten,
    neg,
    ofold,
)
from .ht import check_signature, equilibrium_models, sort_models, strongly_equivalent, subsets
from .rules import Rule, _is_model, _submasks, answer_sets, body_literals, gl_reduct
from .translate import aux_name

OdTerm = Formula


def is_od_term(f: Formula) -> bool:
    if isinstance(f, Atom):
        return True
    if isinstance(f, (Or, OrderedOr)):
        return is_od_term(f.left) and is_od_term(f.right)
    return False


@dataclass(frozen=True)
class OdnfHead:
    """``(*A_1) | ... | (*A_n)``; ``n = 0`` is the empty head of a constraint."""

    disjuncts: Tuple[Tuple[str, ...], ...] = ()

    def __post_init__(self):
        disjuncts = tuple(tuple(d) for d in self.disjuncts)
        if any(not d for d in disjuncts):
            raise ValueError("ODNF disjuncts must be nonempty")
        object.__setattr__(self, "disjuncts", disjuncts)

    def to_formula(self) -> Formula:
        return disj(ofold(Atom(a) for a in d) for d in self.disjuncts)

    def atoms(self) -> frozenset:
        return frozenset(a for d in self.disjuncts for a in d)

    def __str__(self):
        if not self.disjuncts:
            return "#false"
        parts = [" * ".join(d) for d in self.disjuncts]
        if len(parts) == 1:
            return parts[0]
        return " | ".join(f"({p})" if len(d) > 1 else p for p, d in zip(parts, self.disjuncts))


# n-ary working form: an atom name, ("or", [...]) or ("times", [...])


def _nary(f: Formula):
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Or):
        return _node("or", [_nary(f.left), _nary(f.right)])
    if isinstance(f, OrderedOr):
        return _node("times", [_nary(f.left), _nary(f.right)])
    raise NotAnLpod(f"not an ordered disjunctive term: {f!r}")


def _node(kind: str, children: list):
    """Build a node, splicing children of the same kind (associativity)."""
    flat = []
    for c in children:
        if isinstance(c, tuple) and c[0] == kind:
            flat.extend(c[1])
        else:
            flat.append(c)
    return (kind, flat)


def _step(node):
    """One distribution step at the outermost-leftmost redex, or ``None``."""
    if isinstance(node, str):
        return None
    kind, children = node
    if kind == "times":
        for k, c in enumerate(children):
            if isinstance(c, tuple) and c[0] == "or":
                return _node(
                    "or",
                    [_node("times", children[:k] + [d] + children[k + 1 :]) for d in c[1]],
                )
    for k, c in enumerate(children):
        new = _step(c)
        if new is not None:
            return _node(kind, children[:k] + [new] + children[k + 1 :])
    return None


def _disjuncts(node) -> List[Tuple[str, ...]]:
    if isinstance(node, str):
        return [(node,)]
    kind, children = node
    if kind == "times":
        return [tuple(children)]
    out = []
    for c in children:
        out.extend(_disjuncts(c))
    return out


def to_odnf(t: OdTerm) -> OdnfHead:
    """Rewrite an ordered disjunctive term to ODNF; disjuncts come out sorted."""
    if t == BOT:
        return OdnfHead(())
    node = _nary(t)
    while True:
        new = _step(node)
        if new is None:
            break
        node = new
    return OdnfHead(tuple(sorted(_disjuncts(node))))


def is_odnf_term(t: Formula) -> bool:
    if t == BOT:
        return True
    return all(
        all(isinstance(x, Atom) for x in flatten(d, OrderedOr)) for d in flatten(t, Or)
    )


def _head_formula(head) -> Formula:
    return head.to_formula() if isinstance(head, OdnfHead) else head


@dataclass(frozen=True)
class DlpodRule:
    head: Union[Formula, OdnfHead] = BOT
    body_pos: Tuple[str, ...] = ()
    body_neg: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "body_pos", tuple(self.body_pos))
        object.__setattr__(self, "body_neg", tuple(self.body_neg))
        head = _head_formula(self.head)
        if head != BOT and not is_od_term(head):
            raise NotAnLpod(f"not an ordered disjunctive term: {head!r}")

    @property
    def head_formula(self) -> Formula:
        return _head_formula(self.head)

    @property
    def in_odnf(self) -> bool:
        return isinstance(self.head, OdnfHead) or is_odnf_term(self.head)

    def odnf(self) -> "DlpodRule":
        head = self.head if isinstance(self.head, OdnfHead) else to_odnf(self.head)
        return DlpodRule(head, self.body_pos, self.body_neg)

    def atoms(self) -> frozenset:
        return atoms_of(self.head_formula) | frozenset(self.body_pos + self.body_neg)

    def as_formula(self) -> Formula:
        if not self.body_pos and not self.body_neg:
            return self.head_formula
        body = conj([Atom(a) for a in self.body_pos] + [neg(a) for a in self.body_neg])
        return Implies(body, self.head_formula)

    def __str__(self):
        head = "" if self.head_formula == BOT else str(self.head)
        body = ", ".join(list(self.body_pos) + [f"not {a}" for a in self.body_neg])
        if not body:
            return f"{head}." if head else ":- #true."
        return f"{head} :- {body}." if head else f":- {body}."


def dlpod_rule_from_formula(f: Formula) -> DlpodRule:
    if isinstance(f, Implies) and f != TOP:
        body, head = f.left, f.right
    else:
        body, head = TOP, f
    try:
        pos, negs = body_literals(body)
    except ValueError:
        raise NotAnLpod(f"rule body is not a conjunction of literals: {f!r}") from None
    return DlpodRule(head, pos, negs)


def dlpod_from_program(p: Program) -> List[DlpodRule]:
    out = []
    for k, f in enumerate(p.statements):
        try:
            out.append(dlpod_rule_from_formula(f))
        except NotAnLpod:
            where = f" at line {p.positions[k][0]}" if k < len(p.positions) else ""
            raise NotAnLpod(f"statement {k + 1}{where} is not a DLPOD rule") from None
    return out


def signature_of(p: Sequence[DlpodRule]) -> frozenset:
    out = set()
    for r in p:
        out |= r.atoms()
    return frozenset(out)


def as_theory(p: Sequence[DlpodRule]) -> Program:
    return Program(tuple(r.as_formula() for r in p))


def dlpod_options(r: DlpodRule) -> List[Rule]:
    """One disjunctive rule per choice of index ``k_i`` in every disjunct."""
    head = r.odnf().head
    out = []
    for ks in product(*(range(len(d)) for d in head.disjuncts)):
        atoms = tuple(dict.fromkeys(d[k] for d, k in zip(head.disjuncts, ks)))
        skipped = [a for d, k in zip(head.disjuncts, ks) for a in d[:k]]
        body_neg = tuple(dict.fromkeys(r.body_neg + tuple(skipped)))
        out.append(Rule(atoms, (), r.body_pos, body_neg))
    return out


def dlpod_split_programs(p: Sequence[DlpodRule]) -> Iterator[List[Rule]]:
    for combo in product(*(dlpod_options(r) for r in p)):
        yield list(combo)


def disjunctive_answer_sets(rules: Sequence[Rule], signature=(), max_atoms: Optional[int] = None) -> List[frozenset]:
    """Minimal models of the reduct, by enumeration."""
    return answer_sets(rules, signature, max_atoms)


def _masks(rule: Rule, index) -> Tuple[int, int]:
    hm = sum(1 << index[a] for a in rule.head_pos)
    bm = sum(1 << index[a] for a in rule.body_pos)
    return hm, bm


def _split_answer_set(options: List[List[Rule]], i: frozenset, index) -> bool:
    """Is ``i`` an answer set of at least one split program?

    Per rule only the distinct reducts that ``i`` satisfies matter, and a
    deleted option is never needed when a kept one exists: adding a rule that
    ``i`` satisfies cannot make ``i`` lose minimality.
    """
    mask = sum(1 << index[a] for a in i)
    per_rule = []
    for opts in options:
        kept = set()
        deleted = False
        for red in (gl_reduct([o], i) for o in opts):
            if not red:
                deleted = True
                continue
            hm, bm = _masks(red[0], index)
            if (bm & ~mask) or (hm & mask):
                kept.add((hm, bm))
        if kept:
            per_rule.append(sorted(kept))
        elif not deleted:
            return False
    for combo in product(*per_rule):
        if mask == 0 or not any(_is_model(sub, combo) for sub in _submasks(mask)):
            return True
    return False


def dlpod_answer_sets(p: Sequence[DlpodRule], max_atoms: Optional[int] = None) -> List[frozenset]:
    """Union of the answer sets of every split program of the ODNF rewrite."""
    p = [r.odnf() for r in p]
    sig = signature_of(p)
    check_signature(sig, max_atoms)
    index = {a: k for k, a in enumerate(sorted(sig))}
    options = [dlpod_options(r) for r in p]
    return [i for i in subsets(sig) if _split_answer_set(options, i, index)]


def dlpod_answer_sets_by_splits(p: Sequence[DlpodRule], max_atoms: Optional[int] = None) -> List[frozenset]:
    """Same as ``dlpod_answer_sets``, computed split program by split program."""
    sig = signature_of(p)
    check_signature(sig, max_atoms)
    found = set()
    for split in dlpod_split_programs(p):
        found.update(disjunctive_answer_sets(split, sig, max_atoms))
    return sort_models(found)


@dataclass(frozen=True)
class DivergenceReport:
    signature: Tuple[str, ...]
    in_odnf: bool
    odnf_rules: Tuple[DlpodRule, ...]
    dlpod_answer_sets: Tuple[frozenset, ...]
    equilibrium_models: Tuple[frozenset, ...]
    odnf_equilibrium_models: Tuple[frozenset, ...]
    rewrite_preserves_ht: bool

    @property
    def dlpod_only(self) -> List[frozenset]:
        eq = set(self.equilibrium_models)
        return [s for s in self.dlpod_answer_sets if s not in eq]

    @property
    def equilibrium_only(self) -> List[frozenset]:
        ds = set(self.dlpod_answer_sets)
        return [s for s in self.equilibrium_models if s not in ds]

    @property
    def inclusion_holds(self) -> bool:
        """Equilibrium models of the ODNF program are all DLPOD answer sets."""
        return set(self.odnf_equilibrium_models) <= set(self.dlpod_answer_sets)

    @property
    def divergent(self) -> bool:
        return self.dlpod_answer_sets != self.equilibrium_models


def divergence_report(p: Sequence[DlpodRule], max_atoms: Optional[int] = None) -> DivergenceReport:
    p = list(p)
    sig = signature_of(p)
    check_signature(sig, max_atoms)
    odnf = [r.odnf() for r in p]
    original = as_theory(p)
    rewritten = as_theory(odnf)
    eq = equilibrium_models(original, max_atoms)
    in_odnf = all(r.in_odnf for r in p)
    same_meaning = True if in_odnf else strongly_equivalent(original, rewritten, max_atoms).equivalent
    return DivergenceReport(
        signature=tuple(sorted(sig)),
        in_odnf=in_odnf,
        odnf_rules=tuple(odnf),
        dlpod_answer_sets=tuple(dlpod_answer_sets(odnf, max_atoms)),
        equilibrium_models=tuple(eq),
        odnf_equilibrium_models=tuple(eq if in_odnf else equilibrium_models(rewritten, max_atoms)),
        rewrite_preserves_ht=same_meaning,
    )


def _replace(f: Formula, old: Formula, new: Formula) -> Formula:
    if f == old:
        return new
    if isinstance(f, (Or, OrderedOr)):
        return type(f)(_replace(f.left, old, new), _replace(f.right, old, new))
    return f


def aux_define(p: Sequence[DlpodRule], subterm: OdTerm, name: str = "aux") -> Tuple[List[DlpodRule], str]:
    """Name the pure disjunction ``subterm`` by a fresh atom.

    Every occurrence of ``subterm`` in a head becomes the new atom, which is
    defined by ``aux :- d`` for each disjunct ``d`` and ``subterm :- aux``.
    Returns the new program and the name chosen.
    """
    leaves = flatten(subterm, Or)
    if not all(isinstance(x, Atom) for x in leaves):
        raise ValueError(f"not a disjunction of atoms: {subterm!r}")
    aux = aux_name(name, signature_of(p))
    out = [DlpodRule(_replace(r.head_formula, subterm, Atom(aux)), r.body_pos, r.body_neg) for r in p]
    out += [DlpodRule(Atom(aux), (d.name,)) for d in leaves]
    out.append(DlpodRule(subterm, (aux,)))
    return out, aux
