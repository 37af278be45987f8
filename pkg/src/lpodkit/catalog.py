"""Known (non-)equivalences of ordered disjunction, checked in HT."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .formula import Formula, Program
from .ht import Counterexample, equilibrium_models, ht_sat, strongly_equivalent
from .parser import parse_formula, parse_theory


@dataclass(frozen=True)
class Law:
    """``left`` and ``right`` are expected to be strongly equivalent or not.

    When expected models are given, adding the theory ``context`` to each side must produce
    exactly ``left_models`` and ``right_models`` as equilibrium models.
    """

    name: str
    left: str
    right: str
    equivalent: bool
    context: str = ""
    left_models: Tuple[str, ...] = ()
    right_models: Tuple[str, ...] = ()

    def formulas(self) -> Tuple[Formula, Formula]:
        return parse_formula(self.left), parse_formula(self.right)


LAWS: List[Law] = [
    Law("negation: ~(f*g) = ~f & ~g", "~(f * g)", "~f & ~g", True),
    Law("negation: ~(f*g) = ~(f|g)", "~(f * g)", "~(f | g)", True),
    Law("truth constants: f*f = f", "f * f", "f", True),
    Law("truth constants: #false*f = f", "#false * f", "f", True),
    Law("truth constants: f*#false = f", "f * #false", "f", True),
    Law("truth constants: #true*f = #true", "#true * f", "#true", True),
    Law("truth constants: f*#true = f|~f", "f * #true", "f | ~f", True),
    Law("and-distributivity: f&(g*h)", "f & (g * h)", "(f & g) * (f & h)", True),
    Law("and-distributivity: (f*g)&h", "(f * g) & h", "(f & h) * (g & h)", True),
    Law("and-distributivity: f*(g&h)", "f * (g & h)", "(f * g) & (f * h)", True),
    Law("or-distributivity: f*(g|h)", "f * (g | h)", "(f * g) | (f * h)", True),
    Law("associativity", "f * (g * h)", "(f * g) * h", True),
    Law("ordered idempotence: f*g*f = f*g", "f * g * f", "f * g", True),
    Law(
        "ordered idempotence: repeated atoms",
        "a * b * c * a * d * c * a * e * b",
        "a * b * c * d * e",
        True,
    ),
    Law("de morgan: ~(f|g)", "~(f | g)", "~f & ~g", True),
    Law("de morgan: ~(f&g)", "~(f & g)", "~f | ~g", True),
    Law("distributivity: f&(g|h)", "f & (g | h)", "(f & g) | (f & h)", True),
    Law("distributivity: f|(g&h)", "f | (g & h)", "(f | g) & (f | h)", True),
    Law("contradiction: f&~f = #false", "f & ~f", "#false", True),
    Law("nested implication", "f -> (g -> h)", "f & g -> h", True),
    Law(
        "no distributivity: (f&g)*h",
        "(f & g) * h",
        "(f * h) & (g * h)",
        False,
        "",
        ("{h}", "{f,g}"),
        ("{h}", "{f,g}", "{f,h}", "{g,h}"),
    ),
    Law(
        "no distributivity: f|(g*h)",
        "f | (g * h)",
        "(f | g) * (f | h)",
        False,
        "h.",
        ("{h}", "{g,h}"),
        ("{h}", "{f,h}", "{g,h}"),
    ),
    Law(
        "no distributivity: (f*g)|h",
        "(f * g) | h",
        "(f | h) * (g | h)",
        False,
        "g.",
        ("{g}", "{f,g}"),
        ("{g}", "{f,g}", "{g,h}"),
    ),
    Law(
        "no distributivity: (f|g)*h",
        "(f | g) * h",
        "(f * h) | (g * h)",
        False,
        "h.",
        ("{h}", "{f,h}", "{g,h}"),
        ("{h}",),
    ),
    Law(
        "ordered vs plain disjunction",
        "f * g",
        "f | g",
        False,
        "g.",
        ("{g}", "{f,g}"),
        ("{g}",),
    ),
    Law(
        "leftmost repetition is kept",
        "a * b * a",
        "b * a",
        False,
        "a.",
        ("{a}",),
        ("{a}", "{a,b}"),
    ),
]


def parse_model_set(text: str) -> frozenset:
    inner = text.strip().strip("{}").strip()
    return frozenset(x.strip() for x in inner.split(",") if x.strip())


@dataclass
class LawResult:
    law: Law
    equivalent: bool
    passed: bool
    counterexample: Optional[Counterexample] = None
    left_models: List[frozenset] = field(default_factory=list)
    right_models: List[frozenset] = field(default_factory=list)
    detail: str = ""


def check_law(law: Law) -> LawResult:
    left, right = law.formulas()
    verdict = strongly_equivalent(Program((left,)), Program((right,)))
    problems = []
    if verdict.equivalent != law.equivalent:
        problems.append(f"expected {'equivalent' if law.equivalent else 'not equivalent'}")
    cx = verdict.counterexample
    if cx is not None and ht_sat(cx.interpretation, left) == ht_sat(cx.interpretation, right):
        problems.append(f"counterexample {cx.interpretation} does not separate the sides")
    result = LawResult(law, verdict.equivalent, False, cx)
    if law.left_models or law.right_models:
        ctx = parse_theory(law.context).statements
        result.left_models = equilibrium_models(Program((left,) + ctx))
        result.right_models = equilibrium_models(Program((right,) + ctx))
        for side, got, want in (
            ("left", result.left_models, law.left_models),
            ("right", result.right_models, law.right_models),
        ):
            if set(got) != {parse_model_set(s) for s in want}:
                problems.append(f"{side} equilibrium models {[sorted(m) for m in got]}")
    result.passed = not problems
    result.detail = "; ".join(problems)
    return result


@dataclass
class CatalogReport:
    results: List[LawResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[LawResult]:
        return [r for r in self.results if not r.passed]


def property_catalog(laws: Optional[Sequence[Law]] = None) -> CatalogReport:
    """Check every law; failures are reported, never raised."""
    return CatalogReport([check_law(law) for law in (LAWS if laws is None else laws)])
