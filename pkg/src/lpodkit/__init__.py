"""Logic programs with ordered disjunction, read through Here-and-There logic."""

from .errors import (
    EmptyHead,
    LpodError,
    NameCollision,
    NotAnLpod,
    NotAnswerSet,
    NotPositive,
    SignatureTooLarge,
    Unsatisfied,
    UnsupportedConstruct,
)
from .formula import BOT, TOP, And, Atom, Bottom, Formula, Implies, Or, OrderedOr, Program, desugar, neg, ofold
from .ht import HtInterpretation, equilibrium_models, ht_models, ht_sat, strongly_equivalent
from .lpod import (
    Criterion,
    LpodRule,
    answer_sets_equilibrium,
    answer_sets_reduct,
    answer_sets_split,
    degree_profile,
    lpod_from_program,
    preferred_answer_sets,
    split_programs,
    x_reduct,
)
from .parser import ParseError, parse_formula, parse_theory, program_text
from .rules import Rule
from .translate import conj_form, emit_solver_text, expand_x, normal_program, refine, star, third_form
from .dlpod import DlpodRule, OdnfHead, aux_define, divergence_report, dlpod_answer_sets, to_odnf

__version__ = "0.1.0"

__all__ = [
    "EmptyHead",
    "LpodError",
    "NameCollision",
    "NotAnLpod",
    "NotAnswerSet",
    "NotPositive",
    "SignatureTooLarge",
    "Unsatisfied",
    "UnsupportedConstruct",
    "BOT",
    "TOP",
    "And",
    "Atom",
    "Bottom",
    "Formula",
    "Implies",
    "Or",
    "OrderedOr",
    "Program",
    "desugar",
    "neg",
    "ofold",
    "HtInterpretation",
    "equilibrium_models",
    "ht_models",
    "ht_sat",
    "strongly_equivalent",
    "Criterion",
    "LpodRule",
    "answer_sets_equilibrium",
    "answer_sets_reduct",
    "answer_sets_split",
    "degree_profile",
    "lpod_from_program",
    "preferred_answer_sets",
    "split_programs",
    "x_reduct",
    "ParseError",
    "parse_formula",
    "parse_theory",
    "program_text",
    "Rule",
    "conj_form",
    "emit_solver_text",
    "expand_x",
    "normal_program",
    "refine",
    "star",
    "third_form",
    "DlpodRule",
    "OdnfHead",
    "aux_define",
    "divergence_report",
    "dlpod_answer_sets",
    "to_odnf",
]
