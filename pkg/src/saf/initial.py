"""Enumeration, verification and classification of initial sets.

An initial set is a non-empty, subset-minimal admissible set: the atomic
"resolved conflict" of a framework.  This module provides

* the polynomial fixed-point procedure for the greatest admissible subset
  of a conflict-free set,
* the polynomial verification procedure for initial sets built on it,
* component-local enumeration: every initial set lives inside a single
  strongly connected component and is only attacked from within it, so the
  search runs per component over arguments with no outside attackers and
  is finished off by an exact minimality re-check.

All functions also come in mask-level variants taking an ``active`` mask,
which restricts the framework to the induced sub-graph (the reduct view
used by the serialisation layer).
"""

from __future__ import annotations

import concurrent.futures
import enum
from dataclasses import dataclass
from functools import lru_cache

from .core import (
    ArgSet,
    ContractError,
    Framework,
    _is_admissible,
    _is_conflict_free,
    _minus,
    _plus,
    _scc_masks,
    bit_indices,
)


class InitialClass(str, enum.Enum):
    """Three-way classification of an initial set by how it is disputed."""

    UNATTACKED = "unattacked"
    UNCHALLENGED = "unchallenged"
    CHALLENGED = "challenged"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True)
class InitialSetInfo:
    """An initial set with its class, its conflicting initial sets and the
    id of the strongly connected component containing it."""

    arguments: ArgSet
    kind: InitialClass
    conflicts: tuple[ArgSet, ...]
    scc_id: int


_THREADS = 1


def set_worker_threads(threads: int) -> None:
    """Fan per-component enumeration out to ``threads`` workers.

    Results are merged in component-id order and are identical for any
    thread count.
    """
    global _THREADS
    _THREADS = max(1, int(threads))


# ---------------------------------------------------------------------------
# Greatest admissible subset (fixed point of X -> defended(X) & X)
# ---------------------------------------------------------------------------

def _mas(f: Framework, smask: int, active: int) -> tuple[int, int]:
    """Greatest admissible subset of the conflict-free ``smask``.

    Iterates X -> (arguments defended by X) & X, which discards at least one
    argument per round, so it converges within |smask| steps.  Returns the
    fixed point and the number of iterations taken.
    """
    rows = f.attackers_of
    cur = smask
    steps = 0
    while cur:
        plus = _plus(f, cur, active)
        nxt = 0
        m = cur
        while m:
            low = m & -m
            if rows[low.bit_length() - 1] & active & ~plus == 0:
                nxt |= low
            m ^= low
        if nxt == cur:
            break
        cur = nxt
        steps += 1
    return cur, steps


def maximal_admissible_subset(f: Framework, s: ArgSet, *, with_steps: bool = False):
    """The unique largest admissible subset of a conflict-free set ``s``."""
    f._check(s)
    if not _is_conflict_free(f, s.mask, f.full_mask):
        raise ContractError("maximal_admissible_subset requires a conflict-free set")
    fixed, steps = _mas(f, s.mask, f.full_mask)
    result = ArgSet(f.n, fixed)
    return (result, steps) if with_steps else result


def has_admissible_subset_containing(f: Framework, s: ArgSet, a: int) -> bool:
    """Does some admissible subset of the conflict-free ``s`` contain ``a``?"""
    f._check(s)
    if a not in s:
        raise ContractError(f"argument {a} is not a member of the given set")
    if not _is_conflict_free(f, s.mask, f.full_mask):
        raise ContractError("has_admissible_subset_containing requires a conflict-free set")
    fixed, _ = _mas(f, s.mask, f.full_mask)
    return fixed >> a & 1 == 1


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

def _is_initial(f: Framework, smask: int, active: int) -> bool:
    """Non-empty, admissible, and no proper non-empty admissible subset.

    Minimality is decided pair-wise: for members a != b, some admissible
    subset of smask-without-b containing a would witness non-minimality.
    The greatest-admissible-subset fixed point answers all pairs for a given
    b at once, so one fixed point per member suffices.
    """
    if smask == 0:
        return False
    if not _is_admissible(f, smask, active):
        return False
    m = smask
    while m:
        low = m & -m
        without, _ = _mas(f, smask ^ low, active)
        if without:
            return False
        m ^= low
    return True


def is_initial(f: Framework, s: ArgSet) -> bool:
    """Exact polynomial verification that ``s`` is an initial set."""
    f._check(s)
    return _is_initial(f, s.mask, f.full_mask)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _component_candidates(f: Framework, active: int, comp: int) -> int:
    """Members of an initial set inside ``comp`` never have attackers outside
    it, so only arguments whose (restricted) attackers all lie in ``comp``
    can participate."""
    rows = f.attackers_of
    cand = 0
    m = comp
    while m:
        low = m & -m
        if rows[low.bit_length() - 1] & active & ~comp == 0:
            cand |= low
        m ^= low
    return cand


def _closure_search(f: Framework, active: int, cand: int, seed: int) -> list[int]:
    """Depth-first defense closure from ``seed`` within the candidate pool.

    Grows conflict-free sets by branching over the possible defenders of the
    first still-undefended attacker; every minimal admissible set whose
    smallest member is ``seed`` appears among the results (possibly along
    with non-minimal over-approximations, which the caller filters out).
    Additions are restricted to indices above ``seed``, so each minimal set
    is generated from its smallest member only.
    """
    rows_in = f.attackers_of
    rows_out = f.attacked_by
    allowed = cand & ~((1 << (seed + 1)) - 1)
    start = 1 << seed
    if rows_out[seed] & active & start:
        return []
    results: list[int] = []
    seen: set[int] = set()
    stack = [start]
    while stack:
        s = stack.pop()
        if s in seen:
            continue
        seen.add(s)
        plus = _plus(f, s, active)
        undefended = 0
        m = s
        while m:
            low = m & -m
            u = rows_in[low.bit_length() - 1] & active & ~plus
            if u:
                undefended = u & -u
                break
            m ^= low
        if not undefended:
            results.append(s)
            continue
        attacker = undefended.bit_length() - 1
        defenders = rows_in[attacker] & allowed & ~s
        m = defenders
        while m:
            low = m & -m
            d = low.bit_length() - 1
            new = s | low
            new_plus = plus | (rows_out[d] & active)
            if new_plus & new == 0:
                stack.append(new)
            m ^= low
    return results


@lru_cache(maxsize=1 << 16)
def _component_initial_masks(f: Framework, active: int, comp: int) -> tuple[int, ...]:
    """All initial sets of the restriction that live inside component ``comp``."""
    cand = _component_candidates(f, active, comp)
    found: set[int] = set()
    for seed in bit_indices(cand):
        for s in _closure_search(f, active, cand, seed):
            if s not in found and _is_initial(f, s, active):
                found.add(s)
    return tuple(sorted(found, key=_index_key))


def _index_key(mask: int) -> tuple[int, ...]:
    return tuple(bit_indices(mask))


@lru_cache(maxsize=1 << 16)
def _initial_masks(f: Framework, active: int) -> tuple[tuple[int, int], ...]:
    """All initial sets of the restriction as (mask, component id) pairs,
    ordered by component id and member tuple."""
    comps = _scc_masks(f, active)
    if _THREADS > 1 and len(comps) > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=_THREADS) as pool:
            per_comp = list(pool.map(lambda c: _component_initial_masks(f, active, c), comps))
    else:
        per_comp = [_component_initial_masks(f, active, comp) for comp in comps]
    out: list[tuple[int, int]] = []
    for comp_id, masks in enumerate(per_comp):
        out.extend((m, comp_id) for m in masks)
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def _classified_masks(
    f: Framework, active: int
) -> tuple[tuple[int, InitialClass, tuple[int, ...], int], ...]:
    """(mask, class, attacking initial-set masks, component id) per initial set."""
    entries = _initial_masks(f, active)
    plus_of = {m: _plus(f, m, active) for m, _ in entries}
    out = []
    for m, comp_id in entries:
        conflicts = tuple(
            other
            for other, other_comp in entries
            if other != m and other_comp == comp_id and plus_of[other] & m
        )
        if _minus(f, m, active) == 0:
            kind = InitialClass.UNATTACKED
        elif conflicts:
            kind = InitialClass.CHALLENGED
        else:
            kind = InitialClass.UNCHALLENGED
        out.append((m, kind, conflicts, comp_id))
    return tuple(out)


def enumerate_initial_sets(f: Framework) -> tuple[InitialSetInfo, ...]:
    """All initial sets of ``f`` with class, conflicts and component id.

    The classes partition the result: exactly one of unattacked,
    unchallenged or challenged applies to each set.
    """
    return _infos_for(f, f.full_mask)


def classified_restriction(f: Framework, remaining: ArgSet) -> tuple[InitialSetInfo, ...]:
    """Like :func:`enumerate_initial_sets` but on the induced sub-framework
    over ``remaining``, with results reported in base indices."""
    f._check(remaining)
    return _infos_for(f, remaining.mask)


def _infos_for(f: Framework, active: int) -> tuple[InitialSetInfo, ...]:
    n = f.n
    return tuple(
        InitialSetInfo(
            arguments=ArgSet(n, m),
            kind=kind,
            conflicts=tuple(ArgSet(n, c) for c in conflicts),
            scc_id=comp_id,
        )
        for m, kind, conflicts, comp_id in _classified_masks(f, active)
    )


def attacking_initial_set(f: Framework, s: ArgSet) -> ArgSet | None:
    """Some initial set attacking ``s``, or None.

    Conflicting initial sets always share a strongly connected component, so
    the search is restricted to the component containing ``s``.
    """
    f._check(s)
    active = f.full_mask
    comps = _scc_masks(f, active)
    comp = next((c for c in comps if s.mask & ~c == 0), None)
    if comp is None:
        return None
    for m in _component_initial_masks(f, active, comp):
        if m != s.mask and _plus(f, m, active) & s.mask:
            return ArgSet(f.n, m)
    return None
