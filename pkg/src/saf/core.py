"""Immutable argumentation frameworks and their primitive relations.

Arguments are interned to dense indices when a :class:`Framework` is built,
and every argument set is a fixed-width bitmask (:class:`ArgSet`).  Attack
propagation, conflict checks and defense checks then become word-parallel
integer operations, which keeps subset search affordable even for the
exhaustive test corpora.

Most relations also exist as private mask-level helpers that accept an
``active`` mask.  Restricting every adjacency row to ``active`` is exactly
the induced sub-framework on those arguments, so higher layers can work on
reducts without re-densifying indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class ContractError(ValueError):
    """A caller violated a documented precondition."""


_LABEL_FORBIDDEN = set(" \t\r\n,()")


def bit_indices(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class ArgSet:
    """A set of argument indices tied to one framework arity.

    Set algebra is only defined between sets of equal arity; mixing
    arities raises :class:`ContractError`.
    """

    arity: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.arity < 0:
            raise ContractError("arity must be non-negative")
        if self.mask < 0 or self.mask >> self.arity:
            raise ContractError(f"set members out of range for arity {self.arity}")

    @classmethod
    def of(cls, arity: int, indices: Iterable[int] = ()) -> "ArgSet":
        mask = 0
        for i in indices:
            if not 0 <= i < arity:
                raise ContractError(f"argument index {i} out of range for arity {arity}")
            mask |= 1 << i
        return cls(arity, mask)

    def _same(self, other: "ArgSet") -> None:
        if not isinstance(other, ArgSet):
            raise TypeError(f"expected ArgSet, got {type(other).__name__}")
        if other.arity != self.arity:
            raise ContractError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __or__(self, other: "ArgSet") -> "ArgSet":
        self._same(other)
        return ArgSet(self.arity, self.mask | other.mask)

    def __and__(self, other: "ArgSet") -> "ArgSet":
        self._same(other)
        return ArgSet(self.arity, self.mask & other.mask)

    def __sub__(self, other: "ArgSet") -> "ArgSet":
        self._same(other)
        return ArgSet(self.arity, self.mask & ~other.mask)

    def issubset(self, other: "ArgSet") -> bool:
        self._same(other)
        return self.mask & ~other.mask == 0

    __le__ = issubset

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.arity and self.mask >> index & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return bit_indices(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def add(self, index: int) -> "ArgSet":
        if not 0 <= index < self.arity:
            raise ContractError(f"argument index {index} out of range for arity {self.arity}")
        return ArgSet(self.arity, self.mask | 1 << index)

    def remove(self, index: int) -> "ArgSet":
        if not 0 <= index < self.arity:
            raise ContractError(f"argument index {index} out of range for arity {self.arity}")
        return ArgSet(self.arity, self.mask & ~(1 << index))

    def indices(self) -> tuple[int, ...]:
        return tuple(bit_indices(self.mask))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"ArgSet({self.arity}, {{{', '.join(map(str, self.indices()))}}})"


class Framework:
    """A finite directed attack graph over interned argument indices.

    Immutable after construction; safe to share across threads.  The attack
    relation is stored three ways: as the sorted pair list ``attacks`` and as
    the two adjacency views ``attackers_of`` / ``attacked_by`` (one bitmask
    row per argument), which always describe the identical relation.
    """

    __slots__ = ("names", "attacks", "attackers_of", "attacked_by", "_index", "_hash")

    def __init__(self, names: Sequence[str], attacks: Iterable[tuple[int, int]]):
        names = tuple(names)
        index: dict[str, int] = {}
        for i, label in enumerate(names):
            if not isinstance(label, str) or not label:
                raise ContractError(f"argument label must be a non-empty string, got {label!r}")
            if any(ch in _LABEL_FORBIDDEN for ch in label):
                raise ContractError(f"argument label {label!r} contains whitespace or reserved punctuation")
            if label in index:
                raise ContractError(f"duplicate argument label {label!r}")
            index[label] = i
        n = len(names)
        pairs = tuple(sorted(attacks))
        attackers = [0] * n
        attacked = [0] * n
        last = None
        for pair in pairs:
            a, b = pair
            if not (0 <= a < n and 0 <= b < n):
                raise ContractError(f"attack endpoint out of range: {pair}")
            if pair == last:
                raise ContractError(f"duplicate attack pair {pair}")
            last = pair
            attackers[b] |= 1 << a
            attacked[a] |= 1 << b
        self.names = names
        self.attacks = pairs
        self.attackers_of = tuple(attackers)
        self.attacked_by = tuple(attacked)
        self._index = index
        self._hash = hash((names, pairs))

    @classmethod
    def of(cls, names: Sequence[str], attacks: Iterable[tuple[str | int, str | int]] = ()) -> "Framework":
        """Build a framework from labels and attacks given as labels or indices."""
        names = tuple(names)
        index = {label: i for i, label in enumerate(names)}

        def resolve(end: str | int) -> int:
            if isinstance(end, str):
                if end not in index:
                    raise ContractError(f"unknown argument label {end!r}")
                return index[end]
            return end

        return cls(names, [(resolve(a), resolve(b)) for a, b in attacks])

    # -- identity ----------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Framework)
            and self.names == other.names
            and self.attacks == other.attacks
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Framework(names={self.names!r}, attacks={self.attacks!r})"

    # -- basic accessors ----------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.names)) - 1

    def all_args(self) -> ArgSet:
        return ArgSet(self.n, self.full_mask)

    def empty_set(self) -> ArgSet:
        return ArgSet(self.n, 0)

    def arg(self, label: str) -> int:
        if label not in self._index:
            raise ContractError(f"unknown argument label {label!r}")
        return self._index[label]

    def label(self, index: int) -> str:
        return self.names[index]

    def has_label(self, label: str) -> bool:
        return label in self._index

    def set_of(self, *labels: str) -> ArgSet:
        return ArgSet.of(self.n, (self.arg(lb) for lb in labels))

    def labels(self, s: ArgSet) -> tuple[str, ...]:
        """Labels of ``s``, sorted lexicographically (the emission order)."""
        self._check(s)
        return tuple(sorted(self.names[i] for i in s))

    def attack_labels(self) -> tuple[tuple[str, str], ...]:
        return tuple(sorted((self.names[a], self.names[b]) for a, b in self.attacks))

    def _check(self, s: ArgSet) -> None:
        if s.arity != self.n:
            raise ContractError(f"argument set has arity {s.arity}, framework has {self.n} arguments")


# ---------------------------------------------------------------------------
# Mask-level relations.  ``active`` restricts adjacency to the induced
# sub-framework on those arguments; callers must pass set masks that are
# already subsets of ``active``.
# ---------------------------------------------------------------------------

def _plus(f: Framework, smask: int, active: int) -> int:
    rows = f.attacked_by
    out = 0
    m = smask
    while m:
        low = m & -m
        out |= rows[low.bit_length() - 1]
        m ^= low
    return out & active


def _minus(f: Framework, smask: int, active: int) -> int:
    rows = f.attackers_of
    out = 0
    m = smask
    while m:
        low = m & -m
        out |= rows[low.bit_length() - 1]
        m ^= low
    return out & active


def _is_conflict_free(f: Framework, smask: int, active: int) -> bool:
    return _plus(f, smask, active) & smask == 0


def _characteristic(f: Framework, smask: int, active: int) -> int:
    plus = _plus(f, smask, active)
    rows = f.attackers_of
    out = 0
    m = active
    while m:
        low = m & -m
        if rows[low.bit_length() - 1] & active & ~plus == 0:
            out |= low
        m ^= low
    return out


def _is_admissible(f: Framework, smask: int, active: int) -> bool:
    plus = _plus(f, smask, active)
    if plus & smask:
        return False
    rows = f.attackers_of
    m = smask
    while m:
        low = m & -m
        if rows[low.bit_length() - 1] & active & ~plus:
            return False
        m ^= low
    return True


def _unattacked(f: Framework, active: int) -> int:
    """Arguments of the restriction without any attacker inside it."""
    rows = f.attackers_of
    out = 0
    m = active
    while m:
        low = m & -m
        if rows[low.bit_length() - 1] & active == 0:
            out |= low
        m ^= low
    return out


# ---------------------------------------------------------------------------
# Public relations
# ---------------------------------------------------------------------------

def plus_set(f: Framework, s: ArgSet) -> ArgSet:
    """All arguments attacked by some member of ``s``."""
    f._check(s)
    return ArgSet(f.n, _plus(f, s.mask, f.full_mask))


def minus_set(f: Framework, s: ArgSet) -> ArgSet:
    """All arguments attacking some member of ``s``."""
    f._check(s)
    return ArgSet(f.n, _minus(f, s.mask, f.full_mask))


def is_conflict_free(f: Framework, s: ArgSet) -> bool:
    f._check(s)
    return _is_conflict_free(f, s.mask, f.full_mask)


def defends(f: Framework, s: ArgSet, a: int) -> bool:
    """True iff every attacker of ``a`` is attacked by ``s``."""
    f._check(s)
    if not 0 <= a < f.n:
        raise ContractError(f"argument index {a} out of range")
    plus = _plus(f, s.mask, f.full_mask)
    return f.attackers_of[a] & ~plus == 0


def characteristic(f: Framework, s: ArgSet) -> ArgSet:
    """The set of arguments defended by ``s``."""
    f._check(s)
    return ArgSet(f.n, _characteristic(f, s.mask, f.full_mask))


def is_admissible(f: Framework, s: ArgSet) -> bool:
    """Conflict-free and self-defending."""
    f._check(s)
    return _is_admissible(f, s.mask, f.full_mask)


@dataclass(frozen=True)
class Projection:
    """A projected framework together with the index identification.

    ``kept[new_index] == old_index``; labels are preserved, so arguments can
    always be tracked back to the base framework by label as well.
    """

    framework: Framework
    kept: tuple[int, ...]

    def old_to_new(self) -> dict[int, int]:
        return {old: new for new, old in enumerate(self.kept)}

    def to_base(self, s: ArgSet, base_arity: int) -> ArgSet:
        if s.arity != len(self.kept):
            raise ContractError("set does not belong to the projected framework")
        return ArgSet.of(base_arity, (self.kept[i] for i in s))

    def from_base(self, s: ArgSet) -> ArgSet:
        mapping = self.old_to_new()
        try:
            return ArgSet.of(len(self.kept), (mapping[i] for i in s))
        except KeyError as exc:
            raise ContractError(f"argument index {exc.args[0]} was removed by the projection") from None


def project(f: Framework, x: ArgSet) -> Projection:
    """Restrict ``f`` to the arguments in ``x``, re-densifying indices."""
    f._check(x)
    kept = x.indices()
    old_to_new = {old: new for new, old in enumerate(kept)}
    names = tuple(f.names[i] for i in kept)
    attacks = [
        (old_to_new[a], old_to_new[b])
        for a, b in f.attacks
        if a in old_to_new and b in old_to_new
    ]
    return Projection(Framework(names, attacks), kept)


def reduct(f: Framework, s: ArgSet) -> Projection:
    """The framework left after committing to ``s``: drop ``s`` and everything it attacks.

    Defined for arbitrary ``s``; callers needing admissibility check it
    themselves.
    """
    f._check(s)
    removed = s.mask | _plus(f, s.mask, f.full_mask)
    return project(f, ArgSet(f.n, f.full_mask & ~removed))


@lru_cache(maxsize=1 << 16)
def _scc_masks(f: Framework, active: int) -> tuple[int, ...]:
    """Strongly connected components of the restriction, topologically ordered.

    Iterative Tarjan; components are emitted in reverse topological order and
    reversed at the end, so attacks between distinct components always go
    from a lower component id to a higher one.
    """
    rows = f.attacked_by
    order: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: dict[int, bool] = {}
    comp_stack: list[int] = []
    comps: list[int] = []
    counter = 0
    for root in bit_indices(active):
        if root in order:
            continue
        order[root] = low[root] = counter
        counter += 1
        comp_stack.append(root)
        on_stack[root] = True
        call_stack: list[tuple[int, Iterator[int]]] = [(root, bit_indices(rows[root] & active))]
        while call_stack:
            node, successors = call_stack[-1]
            advanced = False
            for succ in successors:
                if succ not in order:
                    order[succ] = low[succ] = counter
                    counter += 1
                    comp_stack.append(succ)
                    on_stack[succ] = True
                    call_stack.append((succ, bit_indices(rows[succ] & active)))
                    advanced = True
                    break
                if on_stack.get(succ) and order[succ] < low[node]:
                    low[node] = order[succ]
            if advanced:
                continue
            call_stack.pop()
            if call_stack:
                parent = call_stack[-1][0]
                if low[node] < low[parent]:
                    low[parent] = low[node]
            if low[node] == order[node]:
                mask = 0
                while True:
                    w = comp_stack.pop()
                    on_stack[w] = False
                    mask |= 1 << w
                    if w == node:
                        break
                comps.append(mask)
    comps.reverse()
    return tuple(comps)


def sccs(f: Framework) -> tuple[ArgSet, ...]:
    """Partition of the arguments into strongly connected components.

    The tuple index is the component id; ids respect a topological order of
    the condensation.
    """
    return tuple(ArgSet(f.n, m) for m in _scc_masks(f, f.full_mask))
