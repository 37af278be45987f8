import random

import pytest

import oracles
from lpodkit.errors import EmptyHead, NotAnLpod, NotAnswerSet, NotPositive, Unsatisfied
from lpodkit.generate import random_lpod
from lpodkit.lpod import (
    Criterion,
    Inconsistent,
    LpodRule,
    Preference,
    answer_sets_equilibrium,
    answer_sets_reduct,
    answer_sets_split,
    as_theory,
    degree,
    degree_profile,
    is_answer_set,
    least_model,
    lpod_from_program,
    option,
    prefer,
    preferred_answer_sets,
    split_programs,
    x_reduct,
)
from lpodkit.parser import parse_theory
from lpodkit.rules import Rule, format_rule

RUNNING = [LpodRule(("a", "b"), (), ("c",)), LpodRule(("b", "c"), (), ("d",))]
REDUCT_EXAMPLE = [
    LpodRule(("a", "b"), ("c",), ("d",)),
    LpodRule(("d", "a"), (), ("b",)),
    LpodRule(("d", "e"), (), ("a",)),
]


def triples(p):
    return [(r.head, r.body_pos, r.body_neg) for r in p]


def random_programs(n, seed):
    rng = random.Random(seed)
    return [random_lpod(rng) for _ in range(n)]


def test_reading_from_text():
    p = lpod_from_program(parse_theory("a * b :- not c.\nb * c :- not d.\n"))
    assert p == RUNNING
    assert str(p[0]) == "a * b :- not c."
    with pytest.raises(NotAnLpod, match="line 2"):
        lpod_from_program(parse_theory("a.\na | b.\n"))
    with pytest.raises(NotAnLpod):
        lpod_from_program(parse_theory("a * (b & c)."))


def test_options_are_one_based():
    r = LpodRule(("a", "b", "c"), ("p",), ("q",))
    assert format_rule(option(r, 1)) == "a :- p, not q."
    assert format_rule(option(r, 3)) == "c :- p, not q, not a, not b."
    with pytest.raises(IndexError):
        option(r, 4)
    with pytest.raises(IndexError):
        option(r, 0)


def test_split_programs_of_running_example():
    got = [[format_rule(r) for r in s] for s in split_programs(RUNNING)]
    assert got == [
        ["a :- not c.", "b :- not d."],
        ["a :- not c.", "c :- not d, not b."],
        ["b :- not c, not a.", "b :- not d."],
        ["b :- not c, not a.", "c :- not d, not b."],
    ]


def test_split_keeps_constraints_and_drops_repeats():
    p = [LpodRule(("a", "b", "a")), LpodRule((), ("a",))]
    splits = list(split_programs(p))
    assert len(splits) == 2
    assert all(s[1] == Rule((), (), ("a",), ()) for s in splits)


def test_x_reduct_example():
    i = {"b", "c"}
    assert [format_rule(r) for r in x_reduct(REDUCT_EXAMPLE, i)] == ["b :- c."]
    assert not REDUCT_EXAMPLE[2].satisfied_by(i)
    assert not is_answer_set(REDUCT_EXAMPLE, i)
    # the least model of the empty reduct is not enough either
    assert least_model(x_reduct(REDUCT_EXAMPLE, set())) == frozenset()
    assert not is_answer_set(REDUCT_EXAMPLE, set())


def test_least_model():
    rules = [Rule.normal("a"), Rule.normal("b", ("a",)), Rule.normal("c", ("d",))]
    assert least_model(rules) == {"a", "b"}
    assert least_model(rules + [Rule.normal(None, ("b",))]) is Inconsistent
    with pytest.raises(NotPositive):
        least_model([Rule.normal("a", (), ("b",))])


def test_three_procedures_on_running_example():
    expected = [{"b"}, {"c"}, {"a", "b"}]
    assert answer_sets_split(RUNNING) == expected
    assert answer_sets_reduct(RUNNING) == expected
    assert answer_sets_equilibrium(RUNNING) == expected


def test_procedures_match_oracle_on_random_programs():
    for p in random_programs(150, 11):
        sig = set().union(*(r.atoms() for r in p))
        expected = oracles.lpod_answer_sets(triples(p), sig)
        assert set(answer_sets_split(p)) == expected, p
        assert set(answer_sets_reduct(p)) == expected, p
        assert set(answer_sets_equilibrium(p)) == expected, p


def test_as_theory_uses_ordered_heads():
    assert str(as_theory(RUNNING).statements[0]) == "~c -> a * b"
    assert str(as_theory([LpodRule(("a",))]).statements[0]) == "a"


def test_degrees_match_definition():
    for p in random_programs(80, 5):
        for i in answer_sets_split(p):
            for r in p:
                if r.head:
                    r = r.normalized()
                    assert degree(i, r) == oracles.degree(i, (r.head, r.body_pos, r.body_neg))
    assert degree_profile({"a", "b"}, RUNNING).as_tuple() == (1, 1)
    assert degree_profile({"c"}, RUNNING).as_tuple() == (1, 2)
    assert degree_profile({"b"}, RUNNING).as_tuple() == (2, 1)


def test_degree_errors():
    with pytest.raises(EmptyHead):
        degree(set(), LpodRule((), ("a",)))
    with pytest.raises(Unsatisfied):
        degree(set(), LpodRule(("a", "b")))


def _profile(i, p):
    return {k: oracles.degree(i, (r.normalized().head, r.body_pos, r.body_neg)) for k, r in enumerate(p) if r.head}


def _better(x, y, criterion):
    levels = range(1, max(list(x.values()) + list(y.values()) + [1]) + 1)
    at = lambda d, k: {r for r, v in d.items() if v == k}  # noqa: E731
    if criterion == "p":
        return any(x[r] < y[r] for r in x) and all(x[r] <= y[r] for r in x)
    for k in levels:
        xk, yk = at(x, k), at(y, k)
        if criterion == "c" and len(xk) != len(yk):
            return len(xk) > len(yk)
        if criterion == "i" and xk != yk:
            return xk > yk
    return False


@pytest.mark.parametrize("criterion", ["c", "i", "p"])
def test_preferred_sets_match_oracle(criterion):
    for p in random_programs(120, 23):
        sets = answer_sets_split(p)
        prof = {s: _profile(s, p) for s in sets}
        best = [s for s in sets if not any(_better(prof[o], prof[s], criterion) for o in sets if o != s)]
        assert preferred_answer_sets(p, criterion) == best, p


@pytest.mark.parametrize("criterion", ["c", "i", "p", Criterion.PARETO, "cardinality"])
def test_running_example_prefers_ab(criterion):
    assert preferred_answer_sets(RUNNING, criterion) == [{"a", "b"}]
    assert prefer({"a", "b"}, {"c"}, RUNNING, criterion) is Preference.I_PREFERRED
    assert prefer({"b"}, {"a", "b"}, RUNNING, criterion) is Preference.J_PREFERRED


def test_incomparable_and_equal():
    assert prefer({"b"}, {"c"}, RUNNING, "p") is Preference.INCOMPARABLE
    assert prefer({"b"}, {"c"}, RUNNING, "i") is Preference.INCOMPARABLE
    assert prefer({"b"}, {"c"}, RUNNING, "c") is Preference.EQUAL
    assert prefer({"b"}, {"b"}, RUNNING, "i") is Preference.EQUAL
    with pytest.raises(NotAnswerSet):
        prefer({"a"}, {"b"}, RUNNING, "p")


def test_criterion_parsing():
    assert Criterion.parse("I") is Criterion.INCLUSION
    assert Criterion.parse("pareto") is Criterion.PARETO
    with pytest.raises(ValueError):
        Criterion.parse("x")
