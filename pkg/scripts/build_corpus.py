"""Write every connected 8-vertex graph, up to isomorphism, as graph6 lines.

Removing a non-cut vertex from a connected graph leaves it connected, so each
connected graph on 8 vertices extends some connected graph on 7 vertices by
one new vertex. Extensions are deduplicated by WL hash plus an exact
isomorphism test within each hash bucket.
"""

import argparse
import sys
from itertools import combinations
from pathlib import Path

import networkx as nx

EXPECTED = 11117  # OEIS A001349, n = 8


def connected_atlas(n):
    return [h for h in nx.graph_atlas_g() if h.number_of_nodes() == n and nx.is_connected(h)]


def extend(graphs, n):
    buckets = {}
    for h in graphs:
        for k in range(1, n):
            for nbrs in combinations(range(n - 1), k):
                g = h.copy()
                g.add_edges_from((n - 1, v) for v in nbrs)
                key = nx.weisfeiler_lehman_graph_hash(g, iterations=3)
                reps = buckets.setdefault(key, [])
                if not any(nx.is_isomorphic(g, r) for r in reps):
                    reps.append(g)
    return [g for reps in buckets.values() for g in reps]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path(__file__).parents[1] / "tests/data/connected_n8.g6")
    args = ap.parse_args(argv)
    graphs = extend(connected_atlas(7), 8)
    lines = sorted(nx.to_graph6_bytes(g, header=False).decode().strip() for g in graphs)
    if len(lines) != EXPECTED:
        sys.exit(f"got {len(lines)} graphs, expected {EXPECTED}")
    args.out.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {args.out}")


if __name__ == "__main__":
    main()
