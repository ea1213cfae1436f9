"""How far psi sits above the leaf count on random unicyclic graphs."""

import argparse
import random
from collections import Counter

from doubly_resolving import find_cycle, leaves, psi_exact
from doubly_resolving.constructive import construct_unicyclic, cycle_basis_preferring_branch_vertices
from doubly_resolving.graph import random_unicyclic


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    gap = {"odd": Counter(), "even": Counter()}
    construction_excess = Counter()
    u_empty = 0
    done = 0
    while done < args.count:
        g = random_unicyclic(rng.randint(4, args.max_n), rng)
        cs = find_cycle(g)
        if not cs.attachment:
            continue
        done += 1
        l = len(leaves(g))
        psi = psi_exact(g).psi
        gap["odd" if cs.m % 2 else "even"][psi - l] += 1
        construction_excess[len(construct_unicyclic(g)) - psi] += 1
        u_empty += not cycle_basis_preferring_branch_vertices(g, cs)[1]

    for parity, c in gap.items():
        print(f"{parity:>4} cycle: psi - l(G) -> {dict(sorted(c.items()))}")
    print(f"construction size - psi -> {dict(sorted(construction_excess.items()))}")
    print(f"graphs where a branch-vertex cycle basis exists: {u_empty}/{done}")


if __name__ == "__main__":
    main()
