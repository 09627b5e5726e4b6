"""Instance corpora shared by the acceptance suite."""

from __future__ import annotations

import random
from typing import Iterator

from saf.core import Framework

NAMES = tuple("abcdefgh")

RANDOM_SEED = 20240809
RANDOM_COUNT = 500


def exhaustive_frameworks(max_n: int = 4) -> Iterator[Framework]:
    """Every digraph (self-loops included) with up to ``max_n`` arguments."""
    for n in range(max_n + 1):
        pairs = [(a, b) for a in range(n) for b in range(n)]
        names = NAMES[:n]
        for bits in range(1 << len(pairs)):
            attacks = tuple(p for i, p in enumerate(pairs) if bits >> i & 1)
            yield Framework(names, attacks)


def random_frameworks(
    count: int = RANDOM_COUNT, max_n: int = 8, seed: int = RANDOM_SEED
) -> Iterator[Framework]:
    """Random digraphs with uniformly sampled size and edge density."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_n)
        density = rng.random()
        attacks = [
            (a, b) for a in range(n) for b in range(n) if rng.random() < density
        ]
        yield Framework(NAMES[:n], attacks)
