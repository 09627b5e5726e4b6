"""Verification, existence, uniqueness and acceptance queries per
initial-set family.

Each query is answered by an exact procedure.  The unattacked family is a
linear scan; the general family runs full enumeration; the unchallenged
family follows the staged core construction: collect the arguments that sit
in some initial set but are attacked by none, drop the unattacked ones, and
take the greatest admissible subset of what is left.  That core contains
all and only the unchallenged initial sets, and existence, uniqueness,
credulous and skeptical acceptance all read off it with at most one more
fixed point per argument.  The oracle-style membership and attack
subroutines are realised by exact search over the enumerated initial sets,
computed once per query.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import ArgSet, ContractError, Framework, _minus, _plus, _unattacked, bit_indices
from .initial import (
    InitialClass,
    _classified_masks,
    _initial_masks,
    _is_initial,
    _mas,
    attacking_initial_set,
    is_initial,
)


class Task(enum.Enum):
    VER = "VER"
    EXISTS = "EXISTS"
    UNIQUE = "UNIQUE"
    CRED = "CRED"
    SKEPT = "SKEPT"


class Family(enum.Enum):
    """Which initial sets a query ranges over."""

    IS = "IS"
    UNATTACKED = "UA"
    UNCHALLENGED = "UC"
    CHALLENGED = "CH"


_FAMILY_KIND = {
    Family.UNATTACKED: InitialClass.UNATTACKED,
    Family.UNCHALLENGED: InitialClass.UNCHALLENGED,
    Family.CHALLENGED: InitialClass.CHALLENGED,
}


@dataclass(frozen=True)
class TaskQuery:
    """A decision-task instance: what to decide, over which family, about whom."""

    task: Task
    family: Family
    subject_set: ArgSet | None = None
    subject_arg: int | None = None

    def __post_init__(self) -> None:
        if self.task is Task.VER and self.subject_set is None:
            raise ContractError("VER requires a set subject")
        if self.task in (Task.CRED, Task.SKEPT) and self.subject_arg is None:
            raise ContractError(f"{self.task.value} requires an argument subject")
        if self.task in (Task.EXISTS, Task.UNIQUE) and not (
            self.subject_set is None and self.subject_arg is None
        ):
            raise ContractError(f"{self.task.value} takes no subject")


def _family_masks(f: Framework, family: Family) -> list[int]:
    entries = _classified_masks(f, f.full_mask)
    if family is Family.IS:
        return [m for m, *_ in entries]
    wanted = _FAMILY_KIND[family]
    return [m for m, kind, _, _ in entries if kind is wanted]


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

def verify(f: Framework, s: ArgSet, family: Family) -> bool:
    """Is ``s`` an initial set of the given family?"""
    f._check(s)
    if family is Family.IS:
        return is_initial(f, s)
    if family is Family.UNATTACKED:
        return _minus(f, s.mask, f.full_mask) == 0 and is_initial(f, s)
    if not is_initial(f, s):
        return False
    if family is Family.UNCHALLENGED:
        if _minus(f, s.mask, f.full_mask) == 0:
            return False
        return attacking_initial_set(f, s) is None
    return attacking_initial_set(f, s) is not None


# ---------------------------------------------------------------------------
# The unchallenged core M''
# ---------------------------------------------------------------------------

def _unchallenged_core(f: Framework) -> int:
    """The greatest admissible set of arguments that occur in some initial
    set but are attacked by none, unattacked arguments excluded.

    Contains every unchallenged initial set and nothing else's members.
    """
    active = f.full_mask
    entries = _initial_masks(f, active)
    in_initial = 0
    attacked_by_initial = 0
    for m, _ in entries:
        in_initial |= m
        attacked_by_initial |= _plus(f, m, active)
    core = in_initial & ~attacked_by_initial
    core &= ~_unattacked(f, active)
    assert _plus(f, core, active) & core == 0, "the pre-core must be conflict-free"
    fixed, _ = _mas(f, core, active)
    return fixed


# ---------------------------------------------------------------------------
# Existence / uniqueness
# ---------------------------------------------------------------------------

def exists(f: Framework, family: Family) -> bool:
    if family is Family.UNATTACKED:
        return _unattacked(f, f.full_mask) != 0
    if family is Family.UNCHALLENGED:
        return _unchallenged_core(f) != 0
    return bool(_family_masks(f, family))


def unique(f: Framework, family: Family) -> bool:
    if family is Family.UNATTACKED:
        return _unattacked(f, f.full_mask).bit_count() == 1
    if family is Family.CHALLENGED:
        # Challenged initial sets come in mutually attacking pairs, so there
        # is never exactly one.
        return False
    if family is Family.IS:
        return len(_family_masks(f, Family.IS)) == 1
    core = _unchallenged_core(f)
    if core == 0:
        return False
    active = f.full_mask
    survivors = 0
    for a in bit_indices(core):
        without, _ = _mas(f, core & ~(1 << a), active)
        if without == 0:
            survivors |= 1 << a
    if survivors == 0:
        return False
    return _is_initial(f, survivors, active)


# ---------------------------------------------------------------------------
# Acceptance
# ---------------------------------------------------------------------------

def credulous(f: Framework, a: int, family: Family) -> bool:
    """Is ``a`` a member of some initial set of the family?"""
    _check_arg(f, a)
    if family is Family.UNATTACKED:
        return f.attackers_of[a] == 0
    if family is Family.UNCHALLENGED:
        core = _unchallenged_core(f)
        if core >> a & 1 == 0:
            return False
        return any(
            m & ~core == 0 and m >> a & 1 for m, _ in _initial_masks(f, f.full_mask)
        )
    return any(m >> a & 1 for m in _family_masks(f, family))


def skeptical(f: Framework, a: int, family: Family) -> bool:
    """Is ``a`` a member of every initial set of the family?

    Vacuously true when the family is empty.
    """
    _check_arg(f, a)
    if family is Family.UNATTACKED:
        return _unattacked(f, f.full_mask) & ~(1 << a) == 0
    if family is Family.UNCHALLENGED:
        core = _unchallenged_core(f)
        if core == 0:
            return True
        without, _ = _mas(f, core & ~(1 << a), f.full_mask)
        return without == 0
    return all(m >> a & 1 for m in _family_masks(f, family))


def _check_arg(f: Framework, a: int) -> None:
    if not 0 <= a < f.n:
        raise ContractError(f"argument index {a} out of range")


def run(f: Framework, query: TaskQuery) -> bool:
    """Dispatch a query to the matching procedure."""
    if query.task is Task.VER:
        return verify(f, query.subject_set, query.family)
    if query.task is Task.EXISTS:
        return exists(f, query.family)
    if query.task is Task.UNIQUE:
        return unique(f, query.family)
    if query.task is Task.CRED:
        return credulous(f, query.subject_arg, query.family)
    return skeptical(f, query.subject_arg, query.family)
