"""Brute-force reference semantics, kept independent of the engine.

Everything here is re-derived from the attack pair list with quantifier
loops that mirror the textbook definitions; none of the engine's adjacency
views, fixed points or search code is used.  Subset enumeration is
exponential, so every entry point enforces a size bound (default 20
arguments, overridable per call or via the SAF_BOUND environment variable
read by the CLI).
"""

from __future__ import annotations

from functools import lru_cache

from .core import ArgSet, Framework

DEFAULT_BOUND = 20

SEMANTICS = ("CF", "ADM", "CO", "GR", "ST", "PR", "SST", "ID", "SA", "EAGER", "IS")


class BoundExceeded(RuntimeError):
    """The framework is larger than the configured brute-force bound."""


def _check_bound(f: Framework, bound: int | None) -> int:
    limit = DEFAULT_BOUND if bound is None else bound
    if f.n > limit:
        raise BoundExceeded(
            f"framework has {f.n} arguments, exceeding the brute-force bound of {limit}"
        )
    return limit


@lru_cache(maxsize=1 << 13)
def _tables(f: Framework):
    """Per-argument attacker/target tables derived from the pair list."""
    n = f.n
    attackers: list[tuple[int, ...]] = [() for _ in range(n)]
    attacker_mask = [0] * n
    target_mask = [0] * n
    for a, b in f.attacks:
        attackers[b] = attackers[b] + (a,)
        attacker_mask[b] |= 1 << a
        target_mask[a] |= 1 << b
    return tuple(attackers), tuple(attacker_mask), tuple(target_mask)


def _members(mask: int, n: int) -> tuple[int, ...]:
    return tuple(i for i in range(n) if mask >> i & 1)


def _conflict_free(f: Framework, mask: int) -> bool:
    for a, b in f.attacks:
        if mask >> a & 1 and mask >> b & 1:
            return False
    return True


def _defends(f: Framework, mask: int, x: int) -> bool:
    """Every attacker of x is attacked by some member of the set."""
    attackers, attacker_mask, _ = _tables(f)
    for a in attackers[x]:
        if attacker_mask[a] & mask == 0:
            return False
    return True


def _admissible(f: Framework, mask: int) -> bool:
    if not _conflict_free(f, mask):
        return False
    return all(_defends(f, mask, x) for x in _members(mask, f.n))


def _attacks_set(f: Framework, source_mask: int, target_mask: int) -> bool:
    for a, b in f.attacks:
        if source_mask >> a & 1 and target_mask >> b & 1:
            return True
    return False


def _range(f: Framework, mask: int) -> int:
    _, _, target_mask = _tables(f)
    out = mask
    m = mask
    while m:
        low = m & -m
        out |= target_mask[low.bit_length() - 1]
        m ^= low
    return out


@lru_cache(maxsize=1 << 13)
def _admissible_masks(f: Framework) -> tuple[int, ...]:
    n = f.n
    found = []
    for mask in range(1 << n):
        if _admissible(f, mask):
            found.append(mask)
    return tuple(found)


def all_admissible(f: Framework, bound: int | None = None) -> frozenset[ArgSet]:
    """Every admissible set, by subset enumeration."""
    _check_bound(f, bound)
    return frozenset(ArgSet(f.n, m) for m in _admissible_masks(f))


def _complete_masks(f: Framework) -> list[int]:
    return [
        m
        for m in _admissible_masks(f)
        if all(m >> a & 1 for a in range(f.n) if _defends(f, m, a))
    ]


def _grounded_mask(f: Framework) -> int:
    complete = _complete_masks(f)
    minimal = [m for m in complete if not any(o != m and o & ~m == 0 for o in complete)]
    assert len(minimal) == 1, "the grounded extension is unique"
    return minimal[0]


def _preferred_masks(f: Framework) -> list[int]:
    adm = _admissible_masks(f)
    return [m for m in adm if not any(o != m and m & ~o == 0 for o in adm)]


def _semi_stable_masks(f: Framework) -> list[int]:
    adm = _admissible_masks(f)
    ranges = {m: _range(f, m) for m in adm}
    return [
        m
        for m in adm
        if not any(o != m and ranges[m] & ~ranges[o] == 0 and ranges[m] != ranges[o] for o in adm)
    ]


def _largest_admissible_within(f: Framework, allowed: int) -> int:
    inside = [m for m in _admissible_masks(f) if m & ~allowed == 0]
    maximal = [m for m in inside if not any(o != m and m & ~o == 0 for o in inside)]
    assert len(maximal) == 1, "the constrained maximal admissible set is unique"
    return maximal[0]


def _ideal_mask(f: Framework) -> int:
    allowed = f.full_mask
    for m in _preferred_masks(f):
        allowed &= m
    return _largest_admissible_within(f, allowed)


def _eager_mask(f: Framework) -> int:
    allowed = f.full_mask
    for m in _semi_stable_masks(f):
        allowed &= m
    return _largest_admissible_within(f, allowed)


@lru_cache(maxsize=1 << 13)
def _strongly_admissible_masks(f: Framework) -> tuple[int, ...]:
    """Sets where every member is defended by a strongly admissible subset
    not containing it; decided by memoised recursion over subsets."""
    n = f.n
    adm = set(_admissible_masks(f))
    memo: dict[int, bool] = {0: True}

    def is_sa(mask: int) -> bool:
        known = memo.get(mask)
        if known is not None:
            return known
        if mask not in adm:
            memo[mask] = False
            return False
        ok = True
        for a in _members(mask, n):
            rest = mask & ~(1 << a)
            sub = rest
            found = False
            while True:
                if is_sa(sub) and _defends(f, sub, a):
                    found = True
                    break
                if sub == 0:
                    break
                sub = (sub - 1) & rest
            if not found:
                ok = False
                break
        memo[mask] = ok
        return ok

    return tuple(m for m in sorted(adm) if is_sa(m))


def _initial_masks_naive(f: Framework) -> list[int]:
    adm = [m for m in _admissible_masks(f) if m != 0]
    return [m for m in adm if not any(o != m and o & ~m == 0 for o in adm)]


def extensions(f: Framework, sigma: str, bound: int | None = None) -> frozenset[ArgSet]:
    """The extension set of ``f`` under the named semantics.

    ``sigma`` is one of CF, ADM, CO, GR, ST, PR, SST, ID, SA, EAGER, IS.
    GR, ID and EAGER return one-element sets.
    """
    _check_bound(f, bound)
    key = sigma.upper()
    n = f.n
    if key == "CF":
        masks = [m for m in range(1 << n) if _conflict_free(f, m)]
    elif key == "ADM":
        masks = list(_admissible_masks(f))
    elif key == "CO":
        masks = _complete_masks(f)
    elif key == "GR":
        masks = [_grounded_mask(f)]
    elif key == "ST":
        masks = [m for m in _admissible_masks(f) if _range(f, m) == f.full_mask]
    elif key == "PR":
        masks = _preferred_masks(f)
    elif key == "SST":
        masks = _semi_stable_masks(f)
    elif key == "ID":
        masks = [_ideal_mask(f)]
    elif key == "SA":
        masks = list(_strongly_admissible_masks(f))
    elif key == "EAGER":
        masks = [_eager_mask(f)]
    elif key == "IS":
        masks = _initial_masks_naive(f)
    else:
        raise ValueError(f"unknown semantics {sigma!r}")
    return frozenset(ArgSet(n, m) for m in masks)


def initial_sets_bruteforce(f: Framework, bound: int | None = None) -> dict[ArgSet, str]:
    """Minimal non-empty admissible sets with their classes.

    Classification is done by direct attack checks among the minimal sets:
    unattacked when nothing attacks the set at all, challenged when another
    minimal set attacks it, unchallenged otherwise.
    """
    _check_bound(f, bound)
    minimal = _initial_masks_naive(f)
    out: dict[ArgSet, str] = {}
    for m in minimal:
        attacked_at_all = any(m >> b & 1 for _, b in f.attacks)
        by_peer = any(o != m and _attacks_set(f, o, m) for o in minimal)
        if not attacked_at_all:
            kind = "unattacked"
        elif by_peer:
            kind = "challenged"
        else:
            kind = "unchallenged"
        out[ArgSet(f.n, m)] = kind
    return out
