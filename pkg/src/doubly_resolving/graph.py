"""Graph representation, file formats, generators and structural queries.

Vertices are dense integers ``0..n-1``. Every object here is immutable, so
graphs and distance matrices can be shared freely between threads.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np


class GraphError(ValueError):
    """Raised for malformed graph input or unmet structural preconditions."""


class GraphParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedGraphError(GraphError):
    def __init__(self, u: int, v: int):
        self.pair = (u, v)
        super().__init__(f"graph is disconnected: no path between {u} and {v}")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length differs from n")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise GraphError(f"self-loop at {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"vertex {u} out of range")
                if v not in self.adj[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, rejecting loops, duplicates and out-of-range ends."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adj]

    def vertices(self) -> range:
        return range(self.n)


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    d: np.ndarray
    diam: int

    @property
    def n(self) -> int:
        return self.d.shape[0]

    def __call__(self, u: int, v: int) -> int:
        return int(self.d[u, v])

    def rows(self) -> list[list[int]]:
        """Plain nested lists; faster than ndarray indexing inside Python loops."""
        return self.d.tolist()


@dataclass(frozen=True)
class CycleStructure:
    cycle: tuple[int, ...]
    attachment: dict[int, frozenset[int]] = field(hash=False)

    @property
    def m(self) -> int:
        return len(self.cycle)


@dataclass(frozen=True)
class TwinClass:
    kind: str  # "open" (equal N(v)) or "closed" (equal N[v])
    members: tuple[int, ...]


@dataclass(frozen=True)
class TwinPartition:
    classes: tuple[TwinClass, ...]

    def class_of(self, v: int) -> TwinClass | None:
        for c in self.classes:
            if v in c.members:
                return c
        return None

    def pairs(self) -> list[tuple[int, int]]:
        return [
            (a, b)
            for c in self.classes
            for i, a in enumerate(c.members)
            for b in c.members[i + 1:]
        ]


# --- file formats ---------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse an edge list or a JSON ``{"n": .., "edges": [[u, v], ..]}`` document."""
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_edge_list(text)


def _parse_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(exc.msg, exc.lineno) from None
    if not isinstance(doc, dict) or "edges" not in doc:
        raise GraphParseError("JSON graph must be an object with 'edges'")
    edges = []
    for e in doc["edges"]:
        if (not isinstance(e, list) or len(e) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in e)):
            raise GraphParseError(f"bad edge {e!r}")
        edges.append((e[0], e[1]))
    top = max((max(e) for e in edges), default=-1) + 1
    n = doc.get("n", top)
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphParseError("'n' must be an integer")
    if n < 1:
        raise GraphParseError("graph needs at least one vertex")
    if top > n:
        raise GraphParseError(f"vertex index {top - 1} out of range for n={n}")
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:
        raise GraphParseError(str(exc)) from None


def _parse_edge_list(text: str) -> Graph:
    n_decl = None
    edges: list[tuple[int, int]] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphParseError(f"bad header {line!r}", lineno)
            if n_decl is not None or edges:
                raise GraphParseError("header 'n' must come first and only once", lineno)
            n_decl = int(parts[1])
            continue
        if len(parts) != 2 or not (parts[0].isdigit() and parts[1].isdigit()):
            raise GraphParseError(f"expected two non-negative integers, got {line!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if n_decl is not None and max(u, v) >= n_decl:
            raise GraphParseError(f"vertex index {max(u, v)} out of range for n={n_decl}", lineno)
        edges.append((u, v))
        lines.append(lineno)

    n = n_decl if n_decl is not None else max((max(e) for e in edges), default=-1) + 1
    if n < 1:
        raise GraphParseError("graph needs at least one vertex")
    seen: set[tuple[int, int]] = set()
    for (u, v), lineno in zip(edges, lines):
        if u == v:
            raise GraphParseError(f"self-loop at {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"duplicate edge {key}", lineno)
        seen.add(key)
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    out = [f"n {g.n}"]
    out += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(out) + "\n"


def to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]})


# --- distances and structure ----------------------------------------------

def bfs(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    return min(bfs(g, 0)) >= 0


def apsp(g: Graph) -> DistanceMatrix:
    rows = []
    for s in range(g.n):
        row = bfs(g, s)
        if min(row) < 0:
            raise DisconnectedGraphError(s, row.index(-1))
        rows.append(row)
    d = np.array(rows, dtype=np.int32)
    d.setflags(write=False)
    return DistanceMatrix(d, int(d.max()))


def leaves(g: Graph) -> tuple[int, ...]:
    return tuple(v for v in range(g.n) if len(g.adj[v]) == 1)


def twin_partition(g: Graph) -> TwinPartition:
    # Adjacent twins share N[v], non-adjacent twins share N(v); each relation is
    # an equivalence and a vertex cannot carry both kinds.
    open_groups: dict[frozenset[int], list[int]] = {}
    closed_groups: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        open_groups.setdefault(g.adj[v], []).append(v)
        closed_groups.setdefault(g.adj[v] | {v}, []).append(v)
    classes = [TwinClass("open", tuple(vs)) for vs in open_groups.values() if len(vs) > 1]
    classes += [TwinClass("closed", tuple(vs)) for vs in closed_groups.values() if len(vs) > 1]
    classes.sort(key=lambda c: c.members)
    return TwinPartition(tuple(classes))


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def is_unicyclic(g: Graph) -> bool:
    return g.m == g.n and is_connected(g)


def find_cycle(g: Graph) -> CycleStructure:
    """The unique cycle of a unicyclic graph plus the trees hanging off it."""
    if not is_connected(g):
        raise GraphError("graph is disconnected")
    if g.m != g.n:
        raise GraphError(f"not unicyclic: {g.m} edges on {g.n} vertices")

    # strip leaves until only the cycle remains
    deg = g.degrees()
    alive = [True] * g.n
    stack = [v for v in range(g.n) if deg[v] == 1]
    while stack:
        v = stack.pop()
        alive[v] = False
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    on_cycle = {v for v in range(g.n) if alive[v]}

    start = min(on_cycle)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = min(w for w in g.adj[cur] if w in on_cycle and w != prev)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
        if len(order) > len(on_cycle):  # pragma: no cover - guarded by m == n
            raise GraphError("cycle walk did not close")

    attachment: dict[int, frozenset[int]] = {}
    for x in order:
        hanging: set[int] = set()
        queue = deque(w for w in g.adj[x] if w not in on_cycle)
        hanging.update(queue)
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in on_cycle and w not in hanging:
                    hanging.add(w)
                    queue.append(w)
        if hanging:
            attachment[x] = frozenset(hanging)
    return CycleStructure(tuple(order), attachment)


# --- generators -----------------------------------------------------------

def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(r: int, s: int) -> Graph:
    """K_{r,s}; the first ``r`` indices form one side."""
    if r < 1 or s < 1:
        raise GraphError("complete bipartite needs r, s >= 1")
    return Graph.from_edges(r + s, [(i, r + j) for i in range(r) for j in range(s)])


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    if n < 2:
        raise GraphError("star needs n >= 2")
    return complete_bipartite(1, n - 1)


def join_k2_empty(m: int) -> Graph:
    """K_2 joined with m independent vertices; vertices 0 and 1 are universal."""
    if m < 1:
        raise GraphError("join needs m >= 1")
    edges = [(0, 1)] + [(x, 2 + j) for x in (0, 1) for j in range(m)]
    return Graph.from_edges(m + 2, edges)


def tree_from_prufer(seq: Iterable[int]) -> Graph:
    """Decode a Prüfer sequence of length n - 2 into a labelled tree on n vertices."""
    seq = list(seq)
    n = len(seq) + 2
    if any(not 0 <= x < n for x in seq):
        raise GraphError("Prüfer entries must lie in 0..n-1")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = degree.index(1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [v for v in range(n) if degree[v] == 1]
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def random_tree(n: int, seed: int | random.Random) -> Graph:
    """Uniform labelled tree via a random Prüfer sequence."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if n < 1:
        raise GraphError("tree needs n >= 1")
    if n <= 2:
        return path(n)
    return tree_from_prufer(rng.randrange(n) for _ in range(n - 2))


def random_unicyclic(n: int, seed: int | random.Random) -> Graph:
    """Random tree plus one random non-edge."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if n < 3:
        raise GraphError("unicyclic graph needs n >= 3")
    t = random_tree(n, rng)
    non_edges = [(u, v) for u in range(n) for v in range(u + 1, n) if v not in t.adj[u]]
    return Graph.from_edges(n, t.edges() + [rng.choice(non_edges)])


def random_connected(n: int, p: float, seed: int | random.Random, max_tries: int = 10_000) -> Graph:
    """Erdős–Rényi G(n, p), resampled until connected."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if n < 1 or not 0.0 <= p <= 1.0:
        raise GraphError("need n >= 1 and 0 <= p <= 1")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for _ in range(max_tries):
        g = Graph.from_edges(n, [e for e in pairs if rng.random() < p])
        if is_connected(g):
            return g
    raise GraphError(f"no connected G({n}, {p}) after {max_tries} draws")


_FIXED = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "join_k2_empty": join_k2_empty,
}


def generate(kind, *params, seed: int = 0, p: float = 0.5) -> Graph:
    """Build a named family member or a seeded random graph.

    ``kind`` is one of path, cycle, complete, complete_bipartite, star,
    join_k2_empty, random_tree, random_unicyclic, random_connected, or a
    family descriptor carrying ``kind`` and ``params``.
    """
    if hasattr(kind, "kind"):
        kind, params = kind.kind, tuple(kind.params) + params
    if kind in _FIXED:
        return _FIXED[kind](*params)
    if kind == "random_tree":
        return random_tree(*params, seed)
    if kind == "random_unicyclic":
        return random_unicyclic(*params, seed)
    if kind == "random_connected":
        return random_connected(*params, p, seed)
    raise GraphError(f"unknown graph kind {kind!r}")
