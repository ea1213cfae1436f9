"""Tabulate psi over all small connected graphs and check which hit psi = n - 1.

Uses the networkx graph atlas (every graph up to 7 vertices); pass --n8 to add
the 8-vertex list written by build_corpus.py.
"""

import argparse
from collections import Counter, defaultdict
from pathlib import Path

import networkx as nx

from doubly_resolving import Graph, classify_n_minus_1, psi_exact


def corpus(with_n8):
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() >= 3 and nx.is_connected(h):
            yield Graph.from_edges(h.number_of_nodes(), h.edges())
    if with_n8:
        path = Path(__file__).parents[1] / "tests/data/connected_n8.g6"
        for line in path.read_text().split():
            h = nx.from_graph6_bytes(line.encode())
            yield Graph.from_edges(8, h.edges())


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n8", action="store_true")
    args = ap.parse_args(argv)

    dist = defaultdict(Counter)
    extremal = defaultdict(list)
    mismatches = 0
    for g in corpus(args.n8):
        psi = psi_exact(g).psi
        dist[g.n][psi] += 1
        hit, fam = classify_n_minus_1(g)
        if hit != (psi == g.n - 1):
            mismatches += 1
        if psi == g.n - 1:
            extremal[g.n].append(str(fam))

    for n in sorted(dist):
        row = "  ".join(f"psi={k}:{v}" for k, v in sorted(dist[n].items()))
        print(f"n={n}  graphs={sum(dist[n].values()):6d}  {row}")
        print(f"      psi=n-1: {sorted(extremal[n])}")
    print(f"classifier mismatches: {mismatches}")


if __name__ == "__main__":
    main()
