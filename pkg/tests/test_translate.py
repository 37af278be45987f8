import random
import sys

import pytest

from lpodkit.errors import LpodError, NameCollision, UnsupportedConstruct
from lpodkit.formula import BOT, TOP, Atom, Implies, Program, neg, ofold, seq
from lpodkit.generate import random_lpod, random_sequence
from lpodkit.ht import equilibrium_models, strongly_equivalent
from lpodkit.lpod import LpodRule, answer_sets_split, as_theory, signature_of
from lpodkit.parser import parse_formula, parse_theory
from lpodkit.rules import Rule, answer_sets, format_rule
from lpodkit.translate import (
    AUX_PREFIX,
    aux_name,
    choice_rule,
    compose_rule,
    conj_form,
    eliminate_head_negation,
    emit_solver_text,
    expand_x,
    is_choice_rule,
    normal_program,
    parse_solver_output,
    refine,
    restrict,
    run_solver,
    star,
    third_form,
)

R = LpodRule(("a", "b", "c"), ("p",), ("q",))


def se(f, g):
    return strongly_equivalent(Program((f,)), Program((g,))).equivalent


def test_forms_of_a_four_atom_sequence():
    a = seq("a", "b", "c", "d")
    assert str(expand_x(a)) == "a | ~a & b | ~a & ~b & c | ~a & ~b & ~c & d"
    assert str(third_form(a)) == "(a | b | c | d) & (a | ~a) & (a | b | ~b) & (a | b | c | ~c)"
    for form in (expand_x, conj_form, third_form):
        assert se(form(a), ofold(a))


def test_forms_on_random_sequences():
    rng = random.Random(3)
    for _ in range(60):
        a = random_sequence(rng)
        f = ofold(a)
        assert se(expand_x(a), f), a
        assert se(conj_form(a), f), a
        assert se(third_form(a), f), a


def test_forms_of_empty_and_singleton():
    assert expand_x(()) == BOT and third_form(()) == BOT
    assert se(conj_form(()), BOT)
    assert conj_form(()) == Implies(TOP, BOT)
    assert se(conj_form(seq("a")), Atom("a"))


def test_star_of_three_atom_rule():
    sp = star([R])
    assert [format_rule(r) for r in sp] == [
        "a | not a :- p, not q.",
        "b | not b :- p, not q, not a.",
        "c | not c :- p, not q, not a, not b.",
        ":- p, not q, not a, not b, not c.",
    ]
    assert len(sp.choice_rules) == 3 and len(sp.constraints) == 1
    assert strongly_equivalent(sp.as_theory(), as_theory([R]))


def test_refined_star():
    sp = refine(star([R]))
    assert [format_rule(r) for r in sp] == [
        "a | not a :- p, not q.",
        "b | not b :- p, not q, not a.",
        "c :- p, not q, not a, not b.",
    ]
    assert sp.definite_rules == [sp.rules[-1]]
    assert strongly_equivalent(sp.as_theory(), as_theory([R]))


def test_compose_rule_matches_star():
    assert compose_rule(parse_formula("p & ~q"), seq("a", "b", "c")) == list(star([R]).rules)
    with pytest.raises(UnsupportedConstruct):
        compose_rule(parse_formula("p | q"), seq("a"))
    with pytest.raises(UnsupportedConstruct):
        compose_rule(TOP, (neg("a"),))


def test_choice_rules():
    r = choice_rule("a", ("p",))
    assert is_choice_rule(r) and format_rule(r) == "a | not a :- p."
    assert not is_choice_rule(Rule(("a",), ("b",), (), ()))


def test_star_preserves_answer_sets_on_random_programs():
    rng = random.Random(17)
    for _ in range(80):
        p = random_lpod(rng)
        expected = answer_sets_split(p)
        sig = signature_of(p)
        assert equilibrium_models(star(p).as_theory().extend(*sig)) == expected, p
        assert equilibrium_models(refine(star(p)).as_theory().extend(*sig)) == expected, p
        assert restrict(answer_sets(normal_program(p), sig), sig) == expected, p


def test_head_negation_elimination():
    rules = eliminate_head_negation(star([R]))
    text = [format_rule(r) for r in rules]
    assert text[-3:] == [f"{AUX_PREFIX}a :- not a.", f"{AUX_PREFIX}b :- not b.", f"{AUX_PREFIX}c :- not c."]
    assert not any(r.head_neg for r in rules)


def test_aux_names_avoid_collisions():
    assert aux_name("x", set()) == "x"
    assert aux_name("x", {"x", "x_1"}) == "x_2"
    p = [LpodRule(("a", "b")), LpodRule((AUX_PREFIX + "a",), ("c",))]
    text = [format_rule(r) for r in normal_program(p)]
    assert f"{AUX_PREFIX}a_1 :- not a." in text
    with pytest.raises(NameCollision):
        aux_name("x", {"x"} | {f"x_{n}" for n in range(1, 10_000)})


def test_normal_program_of_fact():
    assert emit_solver_text(normal_program([LpodRule(("a",))])) == "a.\n"


def test_emitted_text_parses_back():
    text = emit_solver_text(star([R]).rules, "lpod")
    assert strongly_equivalent(parse_theory(text), as_theory([R]))
    with pytest.raises(UnsupportedConstruct):
        emit_solver_text(star([R]).rules, "core2")
    with pytest.raises(ValueError):
        emit_solver_text([], "prolog")
    assert emit_solver_text([parse_formula("#false")], "core2") == ":- #true.\n"


def test_solver_output_parsing():
    clasp = "clasp version 3\nReading from stdin\nSolving...\nAnswer: 1\nb c\nAnswer: 2\n\nSATISFIABLE\n"
    assert parse_solver_output(clasp) == [{"b", "c"}, set()]
    assert parse_solver_output("a b\n\nc\n") == [{"a", "b"}, {"c"}]


def test_run_solver_with_fake_executable(tmp_path, monkeypatch):
    script = tmp_path / "solver.py"
    script.write_text("import sys\nsys.stdin.read()\nprint('Answer: 1')\nprint('a b')\nsys.exit(10)\n")
    assert run_solver("a. b.\n", f"{sys.executable} {script}") == [{"a", "b"}]
    monkeypatch.setenv("LPODKIT_SOLVER", f"{sys.executable} {script}")
    assert run_solver("a. b.\n") == [{"a", "b"}]
    monkeypatch.delenv("LPODKIT_SOLVER")
    with pytest.raises(LpodError):
        run_solver("a.\n")
    bad = tmp_path / "bad.py"
    bad.write_text("import sys\nsys.exit(1)\n")
    with pytest.raises(LpodError):
        run_solver("a.\n", f"{sys.executable} {bad}")
