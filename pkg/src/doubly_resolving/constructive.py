"""Explicit doubly resolving sets: diametral complement, tree leaves, unicyclic."""

from __future__ import annotations

from collections import deque
from itertools import combinations

import numpy as np

from .graph import (
    CycleStructure,
    DistanceMatrix,
    Graph,
    GraphError,
    apsp,
    find_cycle,
    is_connected,
    is_tree,
    leaves,
)
from .resolve import check_doubly_resolving


class ConstructionError(GraphError):
    """The requested construction does not apply to this graph."""


def _verified(dm: DistanceMatrix, W: tuple[int, ...]) -> tuple[int, ...]:
    failure = check_doubly_resolving(dm, W)
    if failure is not None:
        raise AssertionError(f"constructed set {W} fails on pair {failure}")
    return W


def diametral_path(g: Graph, dm: DistanceMatrix) -> tuple[int, ...]:
    """A shortest path between the least diametral pair, least-index BFS parents."""
    d = dm.d
    flat = int(np.argmax(d == dm.diam))  # row-major, so the least (u, v) with u < v
    u, v = divmod(flat, dm.n)
    parent = {u: u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in sorted(g.adj[x]):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    walk = [v]
    while walk[-1] != u:
        walk.append(parent[walk[-1]])
    return tuple(reversed(walk))


def construct_diametral(g: Graph, dm: DistanceMatrix | None = None) -> tuple[int, ...]:
    """All vertices except the interior of a diametral shortest path; size n - diam + 1."""
    if g.n < 3:
        raise ConstructionError("diametral construction needs n >= 3")
    if dm is None:
        dm = apsp(g)
    interior = set(diametral_path(g, dm)[1:-1])
    return _verified(dm, tuple(v for v in range(g.n) if v not in interior))


def construct_tree_basis(g: Graph) -> tuple[int, ...]:
    """The leaves of a tree, its unique doubly resolving basis."""
    if g.n < 2 or not is_tree(g):
        raise ConstructionError("graph is not a tree on at least two vertices")
    return leaves(g)


def _cycle_dm(cs: CycleStructure) -> DistanceMatrix:
    m = cs.m
    idx = np.arange(m)
    gap = np.abs(idx[:, None] - idx[None, :])
    d = np.minimum(gap, m - gap).astype(np.int32)
    return DistanceMatrix(d, m // 2)


def cycle_basis_preferring_branch_vertices(
    g: Graph, cs: CycleStructure | None = None
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Doubly basis of the bare cycle using as few degree-2 vertices as possible.

    Returns ``(basis, U)`` with ``U`` the basis members of degree 2 in ``g``.
    Candidates are tried in lexicographic order of graph indices, so ties go
    to the least set.
    """
    if cs is None:
        cs = find_cycle(g)
    if not cs.attachment:
        raise ConstructionError("graph is a bare cycle")
    size = 2 if cs.m % 2 else 3
    dm = _cycle_dm(cs)
    position = {v: i for i, v in enumerate(cs.cycle)}
    best = None
    for basis in combinations(sorted(cs.cycle), size):
        u_set = tuple(v for v in basis if g.degree(v) == 2)
        if best is not None and len(u_set) >= len(best[1]):
            continue
        if check_doubly_resolving(dm, [position[v] for v in basis]) is None:
            best = (basis, u_set)
            if not u_set:
                break
    assert best is not None, "every cycle has a doubly basis of size 2 or 3"
    return best


def construct_unicyclic(g: Graph, dm: DistanceMatrix | None = None) -> tuple[int, ...]:
    """Leaves plus the degree-2 members of a branch-preferring cycle basis."""
    if not is_connected(g) or g.m != g.n:
        raise ConstructionError("graph is not connected unicyclic")
    cs = find_cycle(g)
    if not cs.attachment:
        raise ConstructionError("graph is a bare cycle")
    _, u_set = cycle_basis_preferring_branch_vertices(g, cs)
    W = tuple(sorted(set(leaves(g)) | set(u_set)))
    return _verified(dm if dm is not None else apsp(g), W)
