"""Seeded RNG substream helpers for reproducible Monte Carlo runs."""

from __future__ import annotations

from typing import Iterator

import numpy as np


def spawn_streams(
    seed: int, n: int, workers: int = 1
) -> Iterator[tuple[np.random.Generator, int]]:
    """Yield (generator, chunk_size) pairs partitioning n trials over workers.

    With workers == 1 this yields a single generator seeded directly from
    `seed`, so single-worker runs are bit-reproducible. With more workers the
    substreams are spawned deterministically from the same seed.
    """
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    if workers == 1:
        yield np.random.default_rng(seed), n
        return
    base = max(1, n // workers)
    children = np.random.SeedSequence(seed).spawn(workers)
    remaining = n
    for i, child in enumerate(children):
        chunk = remaining if i == workers - 1 else min(base, remaining)
        if chunk <= 0:
            break
        yield np.random.default_rng(child), chunk
        remaining -= chunk
