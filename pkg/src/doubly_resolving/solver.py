"""Exact doubly resolving number by bounded, constrained subset enumeration."""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .constructive import construct_diametral, construct_tree_basis, construct_unicyclic
from .graph import (
    DistanceMatrix,
    Graph,
    GraphError,
    TwinPartition,
    apsp,
    is_tree,
    is_unicyclic,
    leaves,
    twin_partition,
)
from .resolve import is_doubly_resolving_literal, is_doubly_resolving_set

DEFAULT_CAP = 16
ORACLE_CAP = 10


class SolverCapError(GraphError):
    def __init__(self, n: int, cap: int):
        self.n, self.cap = n, cap
        super().__init__(f"n={n} exceeds solver cap {cap}")


@dataclass(frozen=True)
class SolveResult:
    psi: int
    witness: tuple[int, ...]
    lower_bound: int
    lower_bound_source: str  # trivial-2 | leaves | twin-classes
    upper_bound: int
    upper_bound_source: str  # n-1 | n-d+1 | constructive
    certificate: str  # "bound" if lower_bound == psi, else "exhaustion"
    examined: int

    def as_dict(self) -> dict:
        return {
            "psi": self.psi,
            "witness": list(self.witness),
            "lower_bound": {"value": self.lower_bound, "source": self.lower_bound_source},
            "upper_bound": {"value": self.upper_bound, "source": self.upper_bound_source},
            "certificate": self.certificate,
            "examined": self.examined,
        }


def default_cap() -> int:
    return int(os.environ.get("DRS_CAP", DEFAULT_CAP))


def forced_vertices(g: Graph) -> tuple[int, ...]:
    """Vertices in every doubly resolving set that the solver forces: the leaves."""
    return leaves(g)


def lower_bound_with_source(g: Graph, tp: TwinPartition | None = None) -> tuple[int, str]:
    if tp is None:
        tp = twin_partition(g)
    leafs = leaves(g)
    in_class = {v for c in tp.classes for v in c.members}
    twin_bound = sum(len(c.members) - 1 for c in tp.classes)
    twin_bound += sum(1 for v in leafs if v not in in_class)
    candidates = [(2, "trivial-2"), (len(leafs), "leaves"), (twin_bound, "twin-classes")]
    best = max(v for v, _ in candidates)
    return next(c for c in candidates if c[0] == best)


def lower_bound(g: Graph, tp: TwinPartition | None = None) -> int:
    return lower_bound_with_source(g, tp)[0]


def upper_bound(g: Graph, dm: DistanceMatrix | None = None) -> tuple[int, tuple[int, ...]]:
    """min(n - 1, n - diam + 1) with a verified set of that size."""
    return _upper_bound(g, dm)[:2]


def _upper_bound(g: Graph, dm: DistanceMatrix | None) -> tuple[int, tuple[int, ...], str]:
    if g.n < 3:
        raise GraphError("upper bound needs n >= 3")
    if dm is None:
        dm = apsp(g)
    if dm.diam == 1:
        # complete graph: any n - 1 vertices work
        W = tuple(range(g.n - 1))
        assert is_doubly_resolving_set(dm, W)
        return g.n - 1, W, "n-1"
    W = construct_diametral(g, dm)
    return len(W), W, "n-d+1"


def _candidates(n: int, k: int, forced: tuple[int, ...], tp: TwinPartition) -> Iterator[tuple[int, ...]]:
    """k-sets containing ``forced`` and omitting at most one vertex per twin class.

    Include-before-exclude over ascending vertices yields lexicographic order.
    """
    forced_set = set(forced)
    class_id = [-1] * n
    for i, c in enumerate(tp.classes):
        for v in c.members:
            class_id[v] = i
    omitted = [False] * len(tp.classes)
    chosen: list[int] = []

    def walk(v: int, slots: int) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            # every remaining vertex is omitted; all must be free and quota-safe
            seen = set()
            for w in range(v, n):
                c = class_id[w]
                if w in forced_set or (c >= 0 and (omitted[c] or c in seen)):
                    return
                if c >= 0:
                    seen.add(c)
            yield tuple(chosen)
            return
        if n - v < slots:
            return
        chosen.append(v)
        yield from walk(v + 1, slots - 1)
        chosen.pop()
        c = class_id[v]
        if v in forced_set or (c >= 0 and omitted[c]):
            return
        if c >= 0:
            omitted[c] = True
        yield from walk(v + 1, slots)
        if c >= 0:
            omitted[c] = False

    yield from walk(0, k)


def _check_input(g: Graph, cap: int, dm: DistanceMatrix | None) -> DistanceMatrix:
    if g.n < 2:
        raise GraphError("doubly resolving number needs n >= 2")
    if g.n > cap:
        raise SolverCapError(g.n, cap)
    return dm if dm is not None else apsp(g)


def psi_exact(g: Graph, cap: int | None = None, dm: DistanceMatrix | None = None) -> SolveResult:
    """Minimum doubly resolving set, searched upward from the best lower bound."""
    dm = _check_input(g, default_cap() if cap is None else cap, dm)
    tp = twin_partition(g)
    forced = forced_vertices(g)
    lb, lb_src = lower_bound_with_source(g, tp)

    if g.n == 2:
        ub, ub_src = 2, "n-1"
    else:
        ub, _, ub_src = _upper_bound(g, dm)
        extra = None
        if is_tree(g):
            extra = construct_tree_basis(g)
        elif is_unicyclic(g) and min(g.degrees()) == 1:
            extra = construct_unicyclic(g, dm)
        if extra is not None and len(extra) < ub:
            ub, ub_src = len(extra), "constructive"

    examined = 0
    for k in range(lb, ub + 1):
        for W in _candidates(g.n, k, forced, tp):
            examined += 1
            if is_doubly_resolving_set(dm, W):
                return SolveResult(
                    psi=k, witness=W,
                    lower_bound=lb, lower_bound_source=lb_src,
                    upper_bound=ub, upper_bound_source=ub_src,
                    certificate="bound" if k == lb else "exhaustion",
                    examined=examined,
                )
    raise AssertionError(f"no doubly resolving set of size <= {ub}; bounds are inconsistent")


def psi_brute_oracle(g: Graph, dm: DistanceMatrix | None = None) -> SolveResult:
    """Every subset by increasing size, definition-literal check, no pruning."""
    dm = _check_input(g, ORACLE_CAP, dm)
    examined = 0
    for k in range(2, g.n + 1):
        for W in combinations(range(g.n), k):
            examined += 1
            if is_doubly_resolving_literal(dm, W):
                return SolveResult(k, W, 2, "trivial-2", g.n, "n", "exhaustion", examined)
    raise AssertionError("the full vertex set always doubly resolves")


def all_minimum_sets(g: Graph, dm: DistanceMatrix | None = None) -> list[tuple[int, ...]]:
    """Every doubly basis, by plain enumeration at the oracle's minimum size."""
    dm = _check_input(g, ORACLE_CAP, dm)
    k = psi_brute_oracle(g, dm).psi
    return [W for W in combinations(range(g.n), k) if is_doubly_resolving_literal(dm, W)]
