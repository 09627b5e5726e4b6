"""The serialisation transition system.

An extension is built as a sequence of commitments: pick an initial set of
the current remainder framework, add it to the accumulator, drop it and
everything it attacks, repeat.  A selection rule says which classes of
initial sets may be picked; a termination rule says which states count as
finished.  Six classical semantics arise from specific (selection,
termination) pairs, plus one genuinely new semantics obtained by
exhaustively committing to unattacked and unchallenged initial sets.

States carry all sets in base-framework indices, so a step's selection can
always be reported in the original labels no matter how deep the remainder
has shrunk.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import (
    ArgSet,
    ContractError,
    Framework,
    Projection,
    _is_admissible,
    _plus,
    _unattacked,
    bit_indices,
    is_admissible,
    project,
)
from .initial import (
    InitialClass,
    InitialSetInfo,
    _classified_masks,
    _index_key,
    _initial_masks,
    _is_initial,
    _mas,
)


class Selection(enum.Enum):
    """Which classes of initial sets may be committed to at each step."""

    ALL = "all"
    UNATTACKED_ONLY = "unattacked-only"
    UNATTACKED_OR_UNCHALLENGED = "unattacked-or-unchallenged"


class Termination(enum.Enum):
    """Which states count as completed extensions."""

    ALWAYS = "always"
    NO_UNATTACKED = "no-unattacked"
    EMPTY_FRAMEWORK = "empty-framework"
    NO_INITIAL = "no-initial"
    NO_UNATTACKED_OR_UNCHALLENGED = "no-unattacked-or-unchallenged"


@dataclass(frozen=True)
class SemanticsSpec:
    """A (selection, termination) pair identifying a serialisable semantics."""

    alpha: Selection
    beta: Termination
    name: str | None = None


PRESETS: dict[str, SemanticsSpec] = {
    "admissible": SemanticsSpec(Selection.ALL, Termination.ALWAYS, "admissible"),
    "complete": SemanticsSpec(Selection.ALL, Termination.NO_UNATTACKED, "complete"),
    "grounded": SemanticsSpec(Selection.UNATTACKED_ONLY, Termination.NO_UNATTACKED, "grounded"),
    "stable": SemanticsSpec(Selection.ALL, Termination.EMPTY_FRAMEWORK, "stable"),
    "preferred": SemanticsSpec(Selection.ALL, Termination.NO_INITIAL, "preferred"),
    "strongly-admissible": SemanticsSpec(Selection.UNATTACKED_ONLY, Termination.ALWAYS, "strongly-admissible"),
    # "unchallenged" is our label for the semantics that exhaustively commits
    # to unattacked and unchallenged initial sets; the name is not canonical.
    "unchallenged": SemanticsSpec(
        Selection.UNATTACKED_OR_UNCHALLENGED,
        Termination.NO_UNATTACKED_OR_UNCHALLENGED,
        "unchallenged",
    ),
}

_ALIASES = {
    "ad": "admissible", "adm": "admissible",
    "co": "complete", "com": "complete",
    "gr": "grounded",
    "st": "stable", "stb": "stable",
    "pr": "preferred", "prf": "preferred",
    "sa": "strongly-admissible",
    "uc": "unchallenged",
}


def preset(name: str) -> SemanticsSpec:
    """Resolve a preset by full name or solver-style two-letter code."""
    key = name.lower()
    key = _ALIASES.get(key, key)
    if key not in PRESETS:
        raise ContractError(f"unknown semantics preset {name!r}")
    return PRESETS[key]


class InvalidStep(ContractError):
    """A proposed selection is not an initial set of the current remainder.

    ``reason`` is one of ``empty``, ``outside-reduct``, ``not-admissible``,
    ``not-minimal`` (or ``not-eligible`` when a selection rule is enforced
    on top by the service layer).
    """

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class SerialisationState:
    """A transition-system state: remainder, accumulator and history.

    ``remaining`` holds the arguments of the current remainder framework and
    ``accumulated`` the extension built so far, both in base indices.  The
    invariants ``accumulated & remaining == empty`` and ``accumulated |
    attacked(accumulated) | remaining == all`` hold for every state built
    through :func:`init_state` and :func:`step`.
    """

    base: Framework
    remaining: ArgSet
    accumulated: ArgSet
    history: tuple[tuple[ArgSet, InitialClass], ...] = ()

    def reduct(self) -> Projection:
        """The current remainder as a real (re-densified) framework."""
        return project(self.base, self.remaining)


@dataclass(frozen=True)
class SerialisationSequence:
    """An ordered record of commitments and the extension they build."""

    steps: tuple[tuple[ArgSet, InitialClass], ...]
    extension: ArgSet
    spec: SemanticsSpec

    def __post_init__(self) -> None:
        union = 0
        for s, _ in self.steps:
            if union & s.mask:
                raise ContractError("sequence steps must be pairwise disjoint")
            union |= s.mask
        if union != self.extension.mask:
            raise ContractError("sequence steps must union to the extension")


def init_state(f: Framework) -> SerialisationState:
    """The start state: nothing committed, the whole framework remaining."""
    return SerialisationState(f, f.all_args(), f.empty_set(), ())


def choices(state: SerialisationState, alpha: Selection) -> tuple[InitialSetInfo, ...]:
    """Initial sets of the current remainder that the selection rule allows.

    Classes and conflicts are computed in the remainder; sets are reported
    in base indices.
    """
    f = state.base
    n = f.n
    out = []
    for mask, kind, conflicts, comp_id in _classified_masks(f, state.remaining.mask):
        if _allowed(kind, alpha):
            out.append(
                InitialSetInfo(
                    arguments=ArgSet(n, mask),
                    kind=kind,
                    conflicts=tuple(ArgSet(n, c) for c in conflicts),
                    scc_id=comp_id,
                )
            )
    return tuple(out)


def _allowed(kind: InitialClass, alpha: Selection) -> bool:
    if alpha is Selection.ALL:
        return True
    if alpha is Selection.UNATTACKED_ONLY:
        return kind is InitialClass.UNATTACKED
    return kind in (InitialClass.UNATTACKED, InitialClass.UNCHALLENGED)


def step(state: SerialisationState, selection: ArgSet) -> SerialisationState:
    """Commit to ``selection`` and move to the induced remainder.

    The selection is validated in full (initial set of the current
    remainder) even though well-behaved callers pass a ``choices`` result:
    the HTTP service exposes this operation to untrusted clients.  Class
    filtering by a selection rule is the caller's concern.
    """
    f = state.base
    f._check(selection)
    active = state.remaining.mask
    smask = selection.mask
    if smask == 0:
        raise InvalidStep("empty", "selection is empty; initial sets are non-empty")
    if smask & ~active:
        outside = ", ".join(f.names[i] for i in bit_indices(smask & ~active))
        raise InvalidStep("outside-reduct", f"selection uses arguments not in the current reduct: {outside}")
    if not _is_admissible(f, smask, active):
        raise InvalidStep("not-admissible", "selection is not admissible in the current reduct")
    for b in bit_indices(smask):
        inner, _ = _mas(f, smask & ~(1 << b), active)
        if inner:
            raise InvalidStep("not-minimal", "selection properly contains a non-empty admissible set")
    kind = _kind_of(f, active, smask)
    removed = smask | _plus(f, smask, active)
    return SerialisationState(
        base=f,
        remaining=ArgSet(f.n, active & ~removed),
        accumulated=state.accumulated | selection,
        history=state.history + ((selection, kind),),
    )


def _kind_of(f: Framework, active: int, smask: int) -> InitialClass:
    for mask, kind, _, _ in _classified_masks(f, active):
        if mask == smask:
            return kind
    raise InvalidStep("not-minimal", "selection is not an initial set of the current reduct")


def is_terminal(state: SerialisationState, beta: Termination) -> bool:
    """Does the termination rule accept this state?

    The rule inspects the current remainder (and nominally the accumulated
    set, which none of the built-in rules use).
    """
    return _terminal_masks(state.base, state.remaining.mask, beta)


def _terminal_masks(f: Framework, active: int, beta: Termination) -> bool:
    if beta is Termination.ALWAYS:
        return True
    if beta is Termination.EMPTY_FRAMEWORK:
        return active == 0
    if beta is Termination.NO_UNATTACKED:
        return _unattacked(f, active) == 0
    if beta is Termination.NO_INITIAL:
        return not _initial_masks(f, active)
    return not any(
        kind in (InitialClass.UNATTACKED, InitialClass.UNCHALLENGED)
        for _, kind, _, _ in _classified_masks(f, active)
    )


def enumerate_extensions(
    f: Framework, spec: SemanticsSpec, *, with_witnesses: bool = False
):
    """All extensions of ``f`` under the given semantics.

    Depth-first exploration of the transition system from the start state,
    collecting the accumulated set of every state the termination rule
    accepts.  States are memoised on (remaining, accumulated): distinct
    selection orders reaching the same state are explored once, which is
    what keeps symmetric frameworks from blowing up the path count.

    Returns a frozenset of extensions, or a dict mapping each extension to
    one witness sequence when ``with_witnesses`` is set.
    """
    full = f.full_mask
    witnesses: dict[int, tuple] = {}
    memo: set[tuple[int, int]] = set()
    stack: list[tuple[int, int, tuple]] = [(full, 0, ())]
    while stack:
        active, acc, hist = stack.pop()
        key = (active, acc)
        if key in memo:
            continue
        memo.add(key)
        infos = _classified_masks(f, active)
        if acc not in witnesses and _terminal_masks(f, active, spec.beta):
            witnesses[acc] = hist
        for mask, kind, _, _ in infos:
            if not _allowed(kind, spec.alpha):
                continue
            removed = mask | _plus(f, mask, active)
            new_hist = hist + ((mask, kind),) if with_witnesses else ()
            stack.append((active & ~removed, acc | mask, new_hist))
    n = f.n
    if not with_witnesses:
        return frozenset(ArgSet(n, acc) for acc in witnesses)
    return {
        ArgSet(n, acc): SerialisationSequence(
            steps=tuple((ArgSet(n, m), kind) for m, kind in hist),
            extension=ArgSet(n, acc),
            spec=spec,
        )
        for acc, hist in witnesses.items()
    }


def decompose(f: Framework, extension: ArgSet) -> SerialisationSequence:
    """Canonical decomposition of an admissible set into commitments.

    Decompositions are not unique; for reproducible output we always pick
    the initial set with the lexicographically smallest member tuple among
    those contained in the not-yet-covered part of the extension.
    """
    f._check(extension)
    if not is_admissible(f, extension):
        raise ContractError("decompose requires an admissible set")
    active = f.full_mask
    left = extension.mask
    steps: list[tuple[ArgSet, InitialClass]] = []
    while left:
        candidates = [
            (mask, kind)
            for mask, kind, _, _ in _classified_masks(f, active)
            if mask & ~left == 0
        ]
        mask, kind = min(candidates, key=lambda entry: _index_key(entry[0]))
        steps.append((ArgSet(f.n, mask), kind))
        left &= ~mask
        active &= ~(mask | _plus(f, mask, active))
    return SerialisationSequence(tuple(steps), extension, PRESETS["admissible"])


def replay(f: Framework, selections: list[ArgSet]) -> SerialisationState:
    """Run a sequence of selections through :func:`step` from the start state."""
    state = init_state(f)
    for selection in selections:
        state = step(state, selection)
    return state


def validate_state(state: SerialisationState) -> None:
    """Assert every state invariant; used by the service in test builds."""
    f = state.base
    acc = state.accumulated.mask
    rem = state.remaining.mask
    if acc & rem:
        raise AssertionError("accumulated and remaining overlap")
    if acc | _plus(f, acc, f.full_mask) | rem != f.full_mask:
        raise AssertionError("accumulated, its targets and remaining do not cover the framework")
    if not _is_admissible(f, acc, f.full_mask):
        raise AssertionError("accumulated set is not admissible in the base framework")
    active = f.full_mask
    for selection, _ in state.history:
        if not _is_initial(f, selection.mask, active):
            raise AssertionError("a history selection was not an initial set of its reduct")
        active &= ~(selection.mask | _plus(f, selection.mask, active))
    if active != rem:
        raise AssertionError("history does not reproduce the remaining set")
