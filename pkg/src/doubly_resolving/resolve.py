"""Doubly resolving and resolving set predicates.

The fast verifier rests on one identity: ``u, v`` are doubly resolved by some
``x, y`` in ``W`` exactly when ``w -> d(u, w) - d(v, w)`` is not constant on
``W``. Shifting every row of ``d[:, W]`` by its first entry turns that into
"the shifted rows of u and v differ", so a set is doubly resolving iff all
shifted rows are distinct. Two members of ``W`` never collide (each is
resolved by itself and the other), so those pairs need no separate check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .graph import DistanceMatrix


@dataclass(frozen=True)
class FailureWitness:
    u: int
    v: int
    difference: int  # d(u, w) - d(v, w), identical for every w in W


def vertex_set(members: Iterable[int], n: int) -> tuple[int, ...]:
    """Canonical ascending tuple; rejects duplicates and out-of-range indices."""
    ws = sorted(members)
    if len(set(ws)) != len(ws):
        raise ValueError(f"duplicate vertices in {ws}")
    for w in ws:
        if not 0 <= w < n:
            raise ValueError(f"vertex {w} out of range for n={n}")
    return tuple(ws)


def doubly_resolves(dm: DistanceMatrix, u: int, v: int, x: int, y: int) -> bool:
    """True iff d(v,x) - d(u,x) != d(v,y) - d(u,y)."""
    n = dm.n
    for a in (u, v, x, y):
        if not 0 <= a < n:
            raise IndexError(f"vertex {a} out of range for n={n}")
    d = dm.d
    return int(d[v, x] - d[u, x]) != int(d[v, y] - d[u, y])


def _shifted_rows(dm: DistanceMatrix, W: Sequence[int]) -> np.ndarray:
    sub = dm.d[:, list(W)]
    return sub - sub[:, :1]


def check_doubly_resolving(dm: DistanceMatrix, W: Sequence[int]) -> FailureWitness | None:
    """None if ``W`` doubly resolves the graph, else the lexicographically least failing pair."""
    W = vertex_set(W, dm.n)
    if len(W) < 2:
        raise ValueError("a doubly resolving set needs at least two vertices")
    keys = [row.tobytes() for row in _shifted_rows(dm, W)]
    if len(set(keys)) == len(keys):
        return None
    first: dict[bytes, int] = {}
    best = None
    for v, k in enumerate(keys):
        u = first.setdefault(k, v)
        if u != v and (best is None or (u, v) < best):
            best = (u, v)
    u, v = best
    return FailureWitness(u, v, int(dm.d[u, W[0]] - dm.d[v, W[0]]))


def is_doubly_resolving_set(dm: DistanceMatrix, W: Sequence[int]) -> bool:
    return check_doubly_resolving(dm, W) is None


def is_doubly_resolving_literal(dm: DistanceMatrix, W: Sequence[int]) -> bool:
    """Definition-literal check: every pair needs some witnesses x, y in W.

    Quadratic in |W| per pair and deliberately free of the shifted-row
    shortcut; used as an independent oracle.
    """
    if len(W) < 2:
        raise ValueError("a doubly resolving set needs at least two vertices")
    d = dm.rows()
    W = list(W)
    for u, v in combinations(range(len(d)), 2):
        du, dv = d[u], d[v]
        if not any(dv[x] - du[x] != dv[y] - du[y] for x, y in combinations(W, 2)):
            return False
    return True


def metric_representation(dm: DistanceMatrix, v: int, W: Sequence[int]) -> tuple[int, ...]:
    if not W:
        raise ValueError("W must be non-empty")
    return tuple(int(dm.d[v, w]) for w in W)


def is_resolving_set(dm: DistanceMatrix, W: Sequence[int]) -> bool:
    if not W:
        raise ValueError("W must be non-empty")
    reps = {metric_representation(dm, v, W) for v in range(dm.n)}
    return len(reps) == dm.n
