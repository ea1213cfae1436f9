"""Structural recognition of named families and their known doubly resolving numbers."""

from __future__ import annotations

from dataclasses import dataclass

from . import graph as G
from .graph import Graph, GraphError, find_cycle, is_connected, leaves

KINDS = (
    "path", "cycle", "complete", "complete_bipartite",
    "star", "join_k2_empty", "tree", "unicyclic",
)


@dataclass(frozen=True)
class Family:
    """A recognised family membership.

    ``params`` per kind: path/cycle/complete/star/tree ``(n,)``,
    complete_bipartite ``(r, s)`` with ``r <= s``, join_k2_empty ``(m,)`` for
    K_2 joined with m independent vertices, unicyclic ``(n, cycle_length)``.
    ``leaves`` is filled in for trees and unicyclic graphs.
    """

    kind: str
    params: tuple[int, ...]
    leaves: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family {self.kind!r}")
        p = self.params
        if self.kind == "cycle" and p[0] < 3:
            raise ValueError("cycle needs n >= 3")
        if self.kind == "complete_bipartite" and not 1 <= p[0] <= p[1]:
            raise ValueError("complete bipartite needs 1 <= r <= s")
        if self.kind == "join_k2_empty" and p[0] < 1:
            raise ValueError("join needs m >= 1")

    def __str__(self) -> str:
        return f"{self.kind}({', '.join(map(str, self.params))})"

    def as_dict(self) -> dict:
        out = {"kind": self.kind, "params": list(self.params)}
        if self.leaves is not None:
            out["leaves"] = self.leaves
        return out

    def build(self) -> Graph:
        """A canonical member of the family; only for the rigid kinds."""
        if self.kind in ("tree", "unicyclic"):
            raise GraphError(f"{self.kind} is not determined by its parameters")
        return G.generate(self.kind, *self.params)


def _bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    side = [-1] * g.n
    side[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if side[w] < 0:
                side[w] = 1 - side[u]
                stack.append(w)
            elif side[w] == side[u]:
                return None
    return [v for v in range(g.n) if side[v] == 0], [v for v in range(g.n) if side[v] == 1]


def recognize(g: Graph) -> list[Family]:
    """Every family the graph belongs to, in ``KINDS`` order."""
    if not is_connected(g):
        raise GraphError("graph is disconnected")
    n, m = g.n, g.m
    deg = g.degrees()
    found = []

    if n >= 2 and m == n - 1 and deg.count(1) == 2 and all(d <= 2 for d in deg):
        found.append(Family("path", (n,)))
    if n >= 3 and all(d == 2 for d in deg):
        found.append(Family("cycle", (n,)))
    if all(d == n - 1 for d in deg):
        found.append(Family("complete", (n,)))
    parts = _bipartition(g) if n >= 2 else None
    if parts is not None:
        r, s = sorted(len(p) for p in parts)
        if r >= 1 and m == r * s:
            found.append(Family("complete_bipartite", (r, s)))
            if r == 1:
                found.append(Family("star", (n,)))
    universal = [v for v in range(n) if deg[v] == n - 1]
    if n >= 3 and len(universal) >= 2:
        rest = [v for v in range(n) if v not in universal[:2]]
        if all(deg[v] == 2 for v in rest):
            found.append(Family("join_k2_empty", (n - 2,)))
    if m == n - 1:
        found.append(Family("tree", (n,), leaves=len(leaves(g))))
    if m == n:
        found.append(Family("unicyclic", (n, find_cycle(g).m), leaves=len(leaves(g))))
    return found


def closed_form_psi(fd: Family) -> int | tuple[int, int]:
    """Known value of the doubly resolving number; an interval for unicyclic graphs."""
    kind, p = fd.kind, fd.params
    if kind in ("path", "complete", "star", "tree") and p[0] < 2:
        raise ValueError(f"{kind} on fewer than two vertices has no doubly resolving number")
    if kind == "complete":
        return max(p[0] - 1, 2)
    if kind == "path":
        return 2
    if kind == "cycle":
        return 2 if p[0] % 2 else 3
    if kind == "complete_bipartite":
        r, s = p
        n = r + s
        if n < 3:
            return 2  # K_{1,1} is P_2
        return n - 1 if r <= 2 else n - 2
    if kind == "star":
        return max(p[0] - 1, 2)
    if kind == "join_k2_empty":
        return p[0] + 1
    if kind == "tree":
        if fd.leaves is None:
            raise ValueError("tree descriptor needs its leaf count")
        return fd.leaves
    if kind == "unicyclic":
        if fd.leaves is None:
            raise ValueError("unicyclic descriptor needs its leaf count")
        if fd.leaves == 0:
            raise ValueError("bare cycle; use the cycle closed form")
        slack = 1 if p[1] % 2 else 2
        return (fd.leaves, fd.leaves + slack)
    raise ValueError(f"no closed form for {kind}")


def classify_n_minus_1(g: Graph) -> tuple[bool, Family | None]:
    """Whether the graph is one of K_n, K_{1,n-1}, K_{2,n-2}, K_2 v (n-2)K_1.

    Exactly these graphs have doubly resolving number n - 1. Purely
    structural; no search.
    """
    if g.n < 3:
        raise GraphError("classification needs n >= 3")
    fams = recognize(g)
    for kind in ("complete", "star", "complete_bipartite", "join_k2_empty"):
        for f in fams:
            if f.kind == kind and (kind != "complete_bipartite" or f.params[0] == 2):
                return True, f
    return False, None
