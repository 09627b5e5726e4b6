"""Ready-made frameworks used throughout the test suite and docs.

Each fixture is named for what it demonstrates: the classification of
initial sets, their behaviour under reducts, or the known counterexamples
showing which semantics cannot be built step by step.
"""

from __future__ import annotations

from .core import Framework


def three_class_example() -> Framework:
    """Ten arguments whose initial sets cover all three classes.

    Initial sets: {f} (unchallenged), {h} (unattacked), {d,j} and {e,i}
    (challenged, mutually conflicting).
    """
    return Framework.of(
        "abcdefghij",
        [
            ("a", "a"), ("a", "f"), ("c", "b"), ("d", "c"), ("d", "i"),
            ("e", "d"), ("f", "a"), ("f", "g"), ("g", "b"), ("g", "f"),
            ("h", "g"), ("i", "c"), ("i", "g"), ("i", "j"), ("j", "e"),
        ],
    )


def cycle_with_mutual_pair() -> Framework:
    """A 4-cycle a->b->c->d->a plus a mutual attack between b and e.

    Initial sets {a,c}, {b,d}, {e}; committing to {e} shrinks {a,c} to the
    smaller initial set {c} of the remaining framework.
    """
    return Framework.of(
        "abcde",
        [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("b", "e"), ("e", "b")],
    )


def ideal_divergence_pair() -> tuple[Framework, Framework]:
    """Two frameworks indistinguishable by classified initial sets.

    Both have the unchallenged initial sets {b} and {e}, no unattacked and
    no challenged ones, and identical remainders after committing to {e};
    yet their ideal extensions differ ({b} versus {b,e}).
    """
    first = Framework.of(
        "abcdef",
        [
            ("a", "a"), ("a", "b"), ("b", "a"), ("b", "c"), ("c", "d"),
            ("d", "e"), ("e", "d"), ("e", "f"), ("f", "e"), ("f", "f"),
        ],
    )
    second = Framework.of(
        "abcdef",
        [
            ("a", "a"), ("a", "b"), ("b", "a"), ("b", "c"), ("c", "d"),
            ("e", "d"), ("e", "f"), ("f", "e"), ("f", "f"),
        ],
    )
    return first, second


def semi_stable_divergence_triple() -> tuple[Framework, Framework, Framework]:
    """Three frameworks with identical classified initial sets ({a} and {b},
    both challenged) but pairwise different semi-stable extensions."""
    first = Framework.of("abc", [("a", "b"), ("b", "a"), ("b", "c")])
    second = Framework.of("abc", [("a", "b"), ("b", "a"), ("b", "c"), ("c", "c")])
    third = Framework.of("abc", [("a", "b"), ("b", "a"), ("c", "c")])
    return first, second, third


def skeptical_gap_example() -> Framework:
    """Six arguments where the ideal extension is empty but exhaustively
    committing to unattacked and unchallenged initial sets yields {d,f}."""
    return Framework.of(
        "abcdef",
        [
            ("a", "b"), ("b", "a"), ("a", "c"), ("b", "c"), ("c", "e"),
            ("d", "e"), ("e", "d"), ("e", "f"), ("f", "e"),
        ],
    )


ALL_FIXTURES = {
    "three_class_example": three_class_example,
    "cycle_with_mutual_pair": cycle_with_mutual_pair,
    "skeptical_gap_example": skeptical_gap_example,
}
