"""Chunked enumeration of P^n(F_p) by normalized representatives.

The representatives are split into blocks (1:a:*:...:*) for each a, then
(0:1:*:...), (0:0:1:*:...) and so on. Every point is visited exactly once.
"""
from typing import Iterator, List, Tuple

import numpy as np

Prefix = Tuple[int, ...]


def projective_prefixes(p: int, n: int) -> List[Prefix]:
    """Fixed leading coordinates of each enumeration block of P^n(F_p)."""
    if n < 0:
        raise ValueError(f"Projective dimension must be nonnegative, got {n}")
    prefixes: List[Prefix] = [(1, a) for a in range(p)] if n >= 1 else [(1,)]
    prefixes += [(0,) * k + (1,) for k in range(1, n + 1)]
    return prefixes


def block_points(prefix: Prefix, p: int, n: int) -> np.ndarray:
    """All representatives starting with the given prefix, as rows of an int64 array."""
    free = n + 1 - len(prefix)
    if free == 0:
        return np.array([prefix], dtype=np.int64)
    tail = np.indices((p,) * free, dtype=np.int64).reshape(free, -1).T
    head = np.broadcast_to(np.array(prefix, dtype=np.int64), (tail.shape[0], len(prefix)))
    return np.hstack([head, tail])


def enumerate_projective(p: int, n: int) -> Iterator[np.ndarray]:
    """
    Yield blocks of normalized representatives covering P^n(F_p).

    The blocks hold (p^(n+1) - 1) / (p - 1) rows in total.
    """
    for prefix in projective_prefixes(p, n):
        yield block_points(prefix, p, n)


def point_count(p: int, n: int) -> int:
    return (p ** (n + 1) - 1) // (p - 1)
