"""Initial sets: the fixed-point subset procedure, verification,
component-local enumeration, classification, and the structural laws that
tie initial sets to strongly connected components and reducts."""

from __future__ import annotations

import pytest
from hypothesis import given, settings

from saf import oracle
from saf.core import (
    ArgSet,
    ContractError,
    Framework,
    minus_set,
    plus_set,
    project,
    reduct,
    sccs,
)
from saf.initial import (
    InitialClass,
    attacking_initial_set,
    enumerate_initial_sets,
    has_admissible_subset_containing,
    is_initial,
    maximal_admissible_subset,
)

from .strategies import framework_and_set, frameworks, prune_to_conflict_free


def oracle_max_admissible_subset(f, s):
    """Largest admissible subset of s, by enumeration over the oracle's
    admissible family."""
    inside = [t for t in oracle.all_admissible(f) if t.issubset(s)]
    best = max(inside, key=len)
    assert all(t.issubset(best) for t in inside), "unique maximum expected"
    return best


# ---------------------------------------------------------------------------
# maximal_admissible_subset
# ---------------------------------------------------------------------------

def test_mas_fixed_point_examples(three_class):
    f = three_class
    s = f.set_of("b", "e", "f", "h", "i")
    assert maximal_admissible_subset(f, s) == s
    assert maximal_admissible_subset(f, f.empty_set()) == f.empty_set()


def test_mas_requires_conflict_free(three_class):
    f = three_class
    with pytest.raises(ContractError):
        maximal_admissible_subset(f, f.set_of("a"))


@settings(max_examples=150)
@given(framework_and_set())
def test_mas_matches_subset_enumeration(fs):
    f, raw = fs
    s = prune_to_conflict_free(f, raw)
    result, steps = maximal_admissible_subset(f, s, with_steps=True)
    assert result == oracle_max_admissible_subset(f, s)
    assert steps <= len(s)


def test_has_admissible_subset_containing(three_class):
    f = three_class
    assert has_admissible_subset_containing(f, f.set_of("e", "i"), f.arg("e"))
    assert has_admissible_subset_containing(f, f.set_of("h"), f.arg("h"))
    assert not has_admissible_subset_containing(f, f.set_of("e", "b"), f.arg("e"))
    with pytest.raises(ContractError):
        has_admissible_subset_containing(f, f.set_of("e", "i"), f.arg("b"))


@given(framework_and_set())
def test_has_admissible_subset_matches_bruteforce(fs):
    f, raw = fs
    s = prune_to_conflict_free(f, raw)
    admissible_subsets = [t for t in oracle.all_admissible(f) if t.issubset(s)]
    for a in s.indices():
        expected = any(a in t for t in admissible_subsets)
        assert has_admissible_subset_containing(f, s, a) == expected


# ---------------------------------------------------------------------------
# is_initial
# ---------------------------------------------------------------------------

def test_is_initial_examples(three_class):
    f = three_class
    assert is_initial(f, f.set_of("e", "i"))
    assert is_initial(f, f.set_of("d", "j"))
    assert is_initial(f, f.set_of("f"))
    assert is_initial(f, f.set_of("h"))
    assert not is_initial(f, f.set_of("b", "e", "i"))
    assert not is_initial(f, f.empty_set())


@settings(max_examples=150)
@given(frameworks())
def test_is_initial_matches_minimal_nonempty_admissible(f):
    expected = oracle.extensions(f, "IS")
    for mask in range(1 << f.n):
        s = ArgSet(f.n, mask)
        assert is_initial(f, s) == (s in expected)


# ---------------------------------------------------------------------------
# enumeration and classification
# ---------------------------------------------------------------------------

def test_enumerate_three_class_example(three_class):
    f = three_class
    infos = {f.labels(i.arguments): i for i in enumerate_initial_sets(f)}
    assert set(infos) == {("f",), ("h",), ("d", "j"), ("e", "i")}
    assert infos[("h",)].kind is InitialClass.UNATTACKED
    assert infos[("f",)].kind is InitialClass.UNCHALLENGED
    assert infos[("d", "j")].kind is InitialClass.CHALLENGED
    assert infos[("e", "i")].kind is InitialClass.CHALLENGED
    assert [f.labels(c) for c in infos[("d", "j")].conflicts] == [("e", "i")]
    assert [f.labels(c) for c in infos[("e", "i")].conflicts] == [("d", "j")]
    assert not infos[("h",)].conflicts and not infos[("f",)].conflicts


def test_enumerate_cycle_with_mutual_pair(cycle_mutual):
    f = cycle_mutual
    infos = {f.labels(i.arguments): i for i in enumerate_initial_sets(f)}
    assert set(infos) == {("a", "c"), ("b", "d"), ("e",)}
    # {b,d} clashes with both {e} (b<->e) and {a,c} (a->b, b->c), so all
    # three initial sets of the four-cycle are challenged.
    assert {f.labels(c) for c in infos[("b", "d")].conflicts} == {("a", "c"), ("e",)}
    assert {f.labels(c) for c in infos[("a", "c")].conflicts} == {("b", "d")}
    assert {f.labels(c) for c in infos[("e",)].conflicts} == {("b", "d")}
    assert all(i.kind is InitialClass.CHALLENGED for i in infos.values())


def test_enumerate_self_attacker_is_empty():
    f = Framework.of("a", [("a", "a")])
    assert enumerate_initial_sets(f) == ()


@settings(max_examples=200)
@given(frameworks(max_n=6))
def test_enumeration_matches_bruteforce(f):
    got = {i.arguments: i.kind.value for i in enumerate_initial_sets(f)}
    assert got == oracle.initial_sets_bruteforce(f)


@given(frameworks(max_n=6))
def test_classes_partition(f):
    for info in enumerate_initial_sets(f):
        if info.kind is InitialClass.UNATTACKED:
            assert len(info.arguments) == 1
            assert not minus_set(f, info.arguments)
            assert not info.conflicts
        elif info.kind is InitialClass.UNCHALLENGED:
            assert minus_set(f, info.arguments)
            assert not info.conflicts
        else:
            assert info.conflicts


# ---------------------------------------------------------------------------
# structural laws
# ---------------------------------------------------------------------------

@given(frameworks(max_n=6))
def test_initial_sets_live_in_one_component(f):
    comps = sccs(f)
    for info in enumerate_initial_sets(f):
        containing = [c for c in comps if info.arguments.issubset(c)]
        assert len(containing) == 1
        assert comps[info.scc_id] == containing[0]


@settings(max_examples=100)
@given(frameworks(max_n=6))
def test_component_characterisation_biconditional(f):
    """A set is initial iff it is initial in its component's projection and
    is not attacked from outside that component."""
    for comp in sccs(f):
        proj = project(f, comp)
        sub = proj.framework
        for info in enumerate_initial_sets(sub):
            base = proj.to_base(info.arguments, f.n)
            outside_safe = minus_set(f, base).issubset(comp)
            assert is_initial(f, base) == outside_safe
    for info in enumerate_initial_sets(f):
        comp = sccs(f)[info.scc_id]
        proj = project(f, comp)
        assert is_initial(proj.framework, proj.from_base(info.arguments))
        assert minus_set(f, info.arguments).issubset(comp)


@given(frameworks(max_n=6))
def test_conflict_symmetry(f):
    infos = {i.arguments: i for i in enumerate_initial_sets(f)}
    for s, info in infos.items():
        for other in info.conflicts:
            assert s in infos[other].conflicts
        # attack in either direction implies conflict membership both ways
        for other in infos:
            if other != s and plus_set(f, other) & s:
                assert other in info.conflicts


@given(frameworks(max_n=6))
def test_class_component_sizes(f):
    comps = sccs(f)
    for info in enumerate_initial_sets(f):
        comp = comps[info.scc_id]
        if info.kind is InitialClass.UNATTACKED:
            assert len(comp) == 1
        else:
            assert len(comp) > 1
        for other in info.conflicts:
            assert other.issubset(comp)


@settings(max_examples=100)
@given(frameworks(max_n=6))
def test_reduct_propagation(f):
    infos = {i.arguments: i for i in enumerate_initial_sets(f)}
    for s, info in infos.items():
        proj = reduct(f, s)
        sub = proj.framework
        sub_infos = enumerate_initial_sets(sub)
        sub_sets = {proj.to_base(i.arguments, f.n) for i in sub_infos}
        sub_unattacked = {
            proj.to_base(i.arguments, f.n)
            for i in sub_infos
            if i.kind is InitialClass.UNATTACKED
        }
        union = f.empty_set()
        for t in sub_sets:
            union = union | t
        for other, other_info in infos.items():
            if other == s:
                continue
            if other_info.kind is InitialClass.UNATTACKED:
                assert other in sub_unattacked
            if other in info.conflicts:
                assert other not in sub_sets
            else:
                assert other & union


def test_attacking_initial_set(three_class):
    f = three_class
    attacker = attacking_initial_set(f, f.set_of("e", "i"))
    assert attacker == f.set_of("d", "j")
    assert attacking_initial_set(f, f.set_of("f")) is None
    assert attacking_initial_set(f, f.set_of("h")) is None


def test_worker_threads_do_not_change_results(three_class, cycle_mutual):
    from saf.initial import (
        _classified_masks,
        _component_initial_masks,
        _initial_masks,
        set_worker_threads,
    )

    def clear_caches():
        _classified_masks.cache_clear()
        _initial_masks.cache_clear()
        _component_initial_masks.cache_clear()

    for f in (three_class, cycle_mutual):
        plain = enumerate_initial_sets(f)
        clear_caches()
        set_worker_threads(4)
        try:
            threaded = enumerate_initial_sets(f)
        finally:
            set_worker_threads(1)
            clear_caches()
        assert threaded == plain
