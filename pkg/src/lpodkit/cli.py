"""``lpodkit`` command line.

Exit codes: 0 success or equivalent, 1 semantic negative (not equivalent,
property failure), 2 usage or parse error, 3 signature over the atom cap,
4 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Optional

from . import dlpod as dl
from .catalog import property_catalog
from .checks import random_checks
from .errors import LpodError, SignatureTooLarge
from .formula import Atom, Implies, Program
from .ht import check_signature, strongly_equivalent
from .lpod import (
    Criterion,
    answer_sets_equilibrium,
    answer_sets_reduct,
    answer_sets_split,
    degree_profile,
    lpod_from_program,
    preferred_answer_sets,
)
from .parser import ParseError, parse_theory, statement_text
from .translate import (
    DIALECTS,
    conj_form,
    emit_solver_text,
    expand_x,
    normal_program,
    refine,
    restrict,
    run_solver,
    star,
    third_form,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_CAP, EXIT_INTERNAL = 0, 1, 2, 3, 4
FORMS = ("star", "star-refined", "normal", "expand", "third", "conj")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{message}\n{self.format_usage().rstrip()}")


@dataclass
class Outcome:
    report: dict
    text: str
    code: int = EXIT_OK
    fmt: str = "text"


def _atoms(s) -> List[str]:
    return sorted(s)


def _set_text(s) -> str:
    return "{" + ",".join(sorted(s)) + "}"


def _sets_text(sets) -> str:
    return " ".join(_set_text(s) for s in sets) if sets else "(none)"


def _read(path: str) -> Program:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise UsageError(f"cannot read {path}: {e.strerror}") from None
    try:
        return parse_theory(text)
    except ParseError as e:
        raise UsageError(f"{path}:{e.line}:{e.column}: {e.message}") from None


def _report(command: str, signature, results, agreement: bool, **extra) -> dict:
    out = {"command": command, "signature": sorted(signature), "results": results, "agreement": agreement}
    out.update(extra)
    return out


def _entry(s, p, preferred=None) -> dict:
    profile = degree_profile(s, p)
    return {"atoms": _atoms(s), "degrees": {str(k): d for k, d in profile.degrees.items()}, "preferred": preferred}


def cmd_answer_sets(args) -> Outcome:
    prog = _read(args.file)
    p = lpod_from_program(prog)
    check_signature(prog.signature, args.max_atoms)
    procedures = {
        "split": answer_sets_split(p, args.max_atoms),
        "reduct": answer_sets_reduct(p, args.max_atoms),
        "equilibrium": answer_sets_equilibrium(p, args.max_atoms),
    }
    if args.external or args.solver:
        text = emit_solver_text(normal_program(p), "core2")
        procedures["external"] = restrict(run_solver(text, args.solver), prog.signature)
    found = procedures["split"]
    agreement = all(v == found for v in procedures.values())
    report = _report(
        "answer-sets",
        prog.signature,
        [_entry(s, p) for s in found],
        agreement,
        answer_sets={k: [_atoms(s) for s in v] for k, v in procedures.items()},
    )
    width = max(len(k) for k in procedures) + 1
    lines = [f"{(k + ':').ljust(width)} {_sets_text(v)}" for k, v in procedures.items()]
    lines.append(f"agreement: {str(agreement).lower()}")
    return Outcome(report, "\n".join(lines), EXIT_OK if agreement else EXIT_INTERNAL)


def cmd_preferred(args) -> Outcome:
    prog = _read(args.file)
    p = lpod_from_program(prog)
    check_signature(prog.signature, args.max_atoms)
    criterion = Criterion.parse(args.criterion)
    found = answer_sets_split(p, args.max_atoms)
    agreement = answer_sets_equilibrium(p, args.max_atoms) == found
    best = set(preferred_answer_sets(p, criterion, args.max_atoms))
    results = [_entry(s, p, s in best) for s in found]
    report = _report("preferred", prog.signature, results, agreement, criterion=criterion.value)
    lines = []
    for s, r in zip(found, results):
        degrees = ",".join(str(r["degrees"][k]) for k in sorted(r["degrees"], key=int))
        lines.append(f"{_set_text(s)} degrees=({degrees})" + (" preferred" if s in best else ""))
    lines.append(f"criterion: {criterion.value}")
    if not found:
        lines.insert(0, "no answer sets")
    return Outcome(report, "\n".join(lines), EXIT_OK if agreement else EXIT_INTERNAL)


def _head_form(p, build) -> List:
    out = []
    for r in p:
        r = r.normalized()
        head = build(tuple(Atom(a) for a in r.head))
        out.append(head if not (r.body_pos or r.body_neg) else Implies(r.body_formula(), head))
    return out


def cmd_translate(args) -> Outcome:
    prog = _read(args.file)
    p = lpod_from_program(prog)
    dialect = args.dialect or "lpod"
    if args.form in ("star", "star-refined", "normal"):
        sp = star(p)
        rules = {"star": lambda: sp.rules, "star-refined": lambda: refine(sp).rules, "normal": lambda: normal_program(p)}
        text = emit_solver_text(rules[args.form](), dialect)
    else:
        if dialect != "lpod":
            raise UsageError(f"--form {args.form} has no {dialect} rendering; use star, star-refined or normal")
        build = {"expand": expand_x, "third": third_form, "conj": conj_form}[args.form]
        text = "".join(statement_text(f) + "\n" for f in _head_form(p, build))
    lines = text.splitlines()
    report = _report("translate", prog.signature, [], True, form=args.form, dialect=dialect, rules=lines)
    return Outcome(report, text.rstrip("\n"))


def cmd_check_se(args) -> Outcome:
    if args.file2 is None:
        raise UsageError("check-se needs two input files")
    p1, p2 = _read(args.file), _read(args.file2)
    verdict = strongly_equivalent(p1, p2, args.max_atoms)
    extra = {"equivalent": verdict.equivalent, "counterexample": None}
    lines = ["equivalent" if verdict else "not equivalent"]
    cx = verdict.counterexample
    if cx is not None:
        i = cx.interpretation
        extra["counterexample"] = {
            "here": _atoms(i.here),
            "there": _atoms(i.there),
            "model_of": cx.model_of,
            "violates": statement_text(cx.formula),
        }
        lines.append(f"witness: {i} satisfies input {cx.model_of} but not {statement_text(cx.formula)}")
    report = _report("check-se", p1.signature | p2.signature, [], True, **extra)
    return Outcome(report, "\n".join(lines), EXIT_OK if verdict else EXIT_NEGATIVE)


def cmd_dlpod(args) -> Outcome:
    prog = _read(args.file)
    p = dl.dlpod_from_program(prog)
    check_signature(prog.signature, args.max_atoms)
    rep = dl.divergence_report(p, args.max_atoms)
    agreement = rep.inclusion_holds
    eq = set(rep.equilibrium_models)
    results = [
        {"atoms": _atoms(s), "degrees": {}, "preferred": None, "equilibrium": s in eq}
        for s in rep.dlpod_answer_sets
    ]
    report = _report(
        "dlpod",
        prog.signature,
        results,
        agreement,
        in_odnf=rep.in_odnf,
        rewrite_preserves_ht=rep.rewrite_preserves_ht,
        odnf_equilibrium_models=[_atoms(s) for s in rep.odnf_equilibrium_models],
        odnf_rules=[str(r) for r in rep.odnf_rules],
        dlpod_answer_sets=[_atoms(s) for s in rep.dlpod_answer_sets],
        equilibrium_models=[_atoms(s) for s in rep.equilibrium_models],
        dlpod_only=[_atoms(s) for s in rep.dlpod_only],
        equilibrium_only=[_atoms(s) for s in rep.equilibrium_only],
        divergent=rep.divergent,
    )
    lines = [
        f"dlpod answer sets:  {_sets_text(rep.dlpod_answer_sets)}",
        f"equilibrium models: {_sets_text(rep.equilibrium_models)}",
    ]
    if not rep.in_odnf:
        lines.append("odnf rewrite:")
        lines += [f"  {r}" for r in rep.odnf_rules]
    if rep.divergent:
        if rep.dlpod_only:
            lines.append(f"dlpod only:         {_sets_text(rep.dlpod_only)}")
        if rep.equilibrium_only:
            lines.append(f"equilibrium only:   {_sets_text(rep.equilibrium_only)}")
    else:
        lines.append("no divergence")
    return Outcome(report, "\n".join(lines), EXIT_OK if agreement else EXIT_INTERNAL)


def cmd_properties(args) -> Outcome:
    catalog = property_catalog()
    laws = [
        {"name": r.law.name, "expected": r.law.equivalent, "equivalent": r.equivalent, "passed": r.passed, "detail": r.detail}
        for r in catalog.results
    ]
    lines = [f"{'PASS' if r.passed else 'FAIL'} {r.law.name}" + (f": {r.detail}" if r.detail else "") for r in catalog.results]
    rand = random_checks(args.random, args.seed) if args.random else None
    if rand is not None:
        lines.append(f"random: {args.random} instances, seed {args.seed}, {len(rand.failures)} failures")
        lines += [f"FAIL {f}" for f in rand.failures]
    passed = catalog.passed and (rand is None or rand.passed)
    report = _report(
        "properties",
        (),
        [],
        passed,
        laws=laws,
        random={"instances": args.random, "seed": args.seed, "failures": rand.failures if rand else []},
    )
    return Outcome(report, "\n".join(lines), EXIT_OK if passed else EXIT_NEGATIVE)


COMMANDS = {
    "answer-sets": cmd_answer_sets,
    "preferred": cmd_preferred,
    "translate": cmd_translate,
    "check-se": cmd_check_se,
    "dlpod": cmd_dlpod,
    "properties": cmd_properties,
}


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _count(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("must not be negative")
    return n


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="lpodkit", description="Logic programs with ordered disjunction.")
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("file", nargs="?", default="-", help="input program, '-' for stdin")
    ap.add_argument("file2", nargs="?", help="second program (check-se)")
    ap.add_argument("--criterion", choices=["c", "i", "p", "cardinality", "inclusion", "pareto"])
    ap.add_argument("--form", choices=FORMS, default="star")
    ap.add_argument("--dialect", choices=DIALECTS)
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--max-atoms", type=_positive, metavar="N", help="signature cap (default $LPODKIT_MAX_ATOMS or 18)")
    ap.add_argument("--random", type=_count, default=0, metavar="N", help="randomized instances for properties")
    ap.add_argument("--seed", type=int, default=0, metavar="S")
    ap.add_argument("--external", action="store_true", help="also run the solver in $LPODKIT_SOLVER")
    ap.add_argument("--solver", metavar="CMD", help="external solver command line")
    return ap


def _validate(args) -> None:
    if args.command == "preferred" and args.criterion is None:
        raise UsageError("preferred requires --criterion c|i|p")
    if args.command != "preferred" and args.criterion is not None:
        raise UsageError("--criterion is only valid with preferred")
    if args.command != "check-se" and args.file2 is not None:
        raise UsageError(f"{args.command} takes a single input")
    if args.command == "properties" and args.file != "-":
        raise UsageError("properties takes no input file")


def run(argv: Optional[List[str]] = None) -> Outcome:
    """Parse ``argv`` and run the command; errors propagate."""
    args = build_parser().parse_args(argv)
    _validate(args)
    outcome = COMMANDS[args.command](args)
    outcome.fmt = args.format
    return outcome


def render(outcome: Outcome) -> str:
    if outcome.fmt == "json":
        return json.dumps(outcome.report, sort_keys=True, indent=2, ensure_ascii=False)
    return outcome.text


def main(argv: Optional[List[str]] = None) -> int:
    try:
        outcome = run(argv)
    except UsageError as e:
        print(f"lpodkit: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SignatureTooLarge as e:
        print(f"lpodkit: {e}", file=sys.stderr)
        return EXIT_CAP
    except AssertionError as e:
        print(f"lpodkit: internal check failed: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except (LpodError, ValueError) as e:
        print(f"lpodkit: {e}", file=sys.stderr)
        return EXIT_USAGE
    print(render(outcome))
    if outcome.code == EXIT_INTERNAL:
        print("lpodkit: procedures disagree; this is a bug", file=sys.stderr)
    return outcome.code


if __name__ == "__main__":
    sys.exit(main())
