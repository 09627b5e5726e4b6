"""Brute-force reference semantics: fixture values, definition-level
cross-checks against the core predicates, and the standard inclusions."""

from __future__ import annotations

import pytest
from hypothesis import given, settings

from saf import fixtures, oracle
from saf.core import ArgSet, Framework, is_admissible, is_conflict_free, minus_set
from saf.oracle import BoundExceeded

from .strategies import frameworks


def labelled(f, sets):
    return sorted(f.labels(s) for s in sets)


def test_all_admissible_on_three_class_example(three_class):
    f = three_class
    containing_e = {
        f.labels(s) for s in oracle.all_admissible(f) if f.arg("e") in s
    }
    assert containing_e == {
        ("b", "e", "f", "h", "i"),
        ("b", "e", "f", "i"),
        ("b", "e", "h", "i"),
        ("e", "f", "h", "i"),
        ("b", "e", "i"),
        ("e", "f", "i"),
        ("e", "h", "i"),
        ("e", "i"),
    }


def test_all_admissible_empty_framework():
    f = Framework.of("")
    assert oracle.all_admissible(f) == frozenset({f.empty_set()})


@settings(max_examples=150)
@given(frameworks(max_n=6))
def test_all_admissible_cross_check(f):
    admissible = oracle.all_admissible(f)
    for s in admissible:
        assert is_admissible(f, s)
    for mask in range(1 << f.n):
        s = ArgSet(f.n, mask)
        if is_admissible(f, s):
            assert s in admissible


def test_ideal_fixture_values():
    first, second = fixtures.ideal_divergence_pair()
    assert labelled(first, oracle.extensions(first, "ID")) == [("b",)]
    assert labelled(second, oracle.extensions(second, "ID")) == [("b", "e")]


def test_semi_stable_and_eager_fixture_values():
    f4, f5, f6 = fixtures.semi_stable_divergence_triple()
    assert labelled(f4, oracle.extensions(f4, "SST")) == [("a", "c"), ("b",)]
    assert labelled(f5, oracle.extensions(f5, "SST")) == [("b",)]
    assert labelled(f6, oracle.extensions(f6, "SST")) == [("a",), ("b",)]
    assert labelled(f4, oracle.extensions(f4, "EAGER")) == [()]
    assert labelled(f5, oracle.extensions(f5, "EAGER")) == [("b",)]
    assert labelled(f6, oracle.extensions(f6, "EAGER")) == [()]


def test_skeptical_gap_fixture_values(skeptical_gap):
    f = skeptical_gap
    assert labelled(f, oracle.extensions(f, "PR")) == [
        ("a", "d", "f"), ("a", "e"), ("b", "d", "f"), ("b", "e"),
    ]
    assert labelled(f, oracle.extensions(f, "ID")) == [()]


def test_initial_sets_bruteforce_classes(three_class):
    f = three_class
    got = {f.labels(s): kind for s, kind in oracle.initial_sets_bruteforce(f).items()}
    assert got == {
        ("h",): "unattacked",
        ("f",): "unchallenged",
        ("d", "j"): "challenged",
        ("e", "i"): "challenged",
    }


def test_initial_sets_bruteforce_self_loop():
    f = Framework.of("a", [("a", "a")])
    assert oracle.initial_sets_bruteforce(f) == {}


@settings(max_examples=100)
@given(frameworks(max_n=6))
def test_standard_inclusions(f):
    complete = oracle.extensions(f, "CO")
    grounded = next(iter(oracle.extensions(f, "GR")))
    preferred = oracle.extensions(f, "PR")
    stable = oracle.extensions(f, "ST")
    semi_stable = oracle.extensions(f, "SST")
    admissible = oracle.extensions(f, "ADM")

    assert grounded in complete
    assert all(grounded.issubset(c) for c in complete)
    assert preferred == {
        s for s in admissible if not any(o != s and s.issubset(o) for o in admissible)
    }
    assert stable <= semi_stable <= preferred

    ideal = next(iter(oracle.extensions(f, "ID")))
    assert is_admissible(f, ideal)
    assert all(ideal.issubset(p) for p in preferred)

    for s in oracle.extensions(f, "SA"):
        if s:
            assert any(not minus_set(f, ArgSet.of(f.n, [a])) for a in s)

    for s in oracle.extensions(f, "CF"):
        assert is_conflict_free(f, s)


def test_bound_is_enforced():
    f = Framework.of([f"a{i}" for i in range(6)])
    with pytest.raises(BoundExceeded):
        oracle.all_admissible(f, bound=5)
    with pytest.raises(BoundExceeded):
        oracle.extensions(f, "PR", bound=5)
    with pytest.raises(BoundExceeded):
        oracle.initial_sets_bruteforce(f, bound=5)
    assert oracle.all_admissible(f, bound=6)


def test_unknown_semantics():
    with pytest.raises(ValueError):
        oracle.extensions(Framework.of("a"), "XX")
