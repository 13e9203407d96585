"""Toy degree/diameter search: best lifts of one-vertex bouquets over Z_n.

A bouquet with ``loops`` loops and ``semis`` semiedges lifts to a circulant
graph of degree ``2·loops + semis``.  For each group order the script
enumerates voltage choices and keeps the lift with the smallest diameter,
then reports the largest order reaching each target diameter.
"""

from __future__ import annotations

import argparse
import itertools

from voltgraph import constructions as cons
from voltgraph import graph as gr
from voltgraph.groups import cyclic


def best_lift(n: int, loops: int, semis: int) -> tuple[float, tuple[int, ...]] | None:
    G = cyclic(n)
    invs = [a for a in G.involutions() if a != 0]
    if semis and len(invs) < semis:
        return None
    spec = [("loop", (0,))] * loops + [("semiedge", (0,))] * semis
    base = gr.build_graph(1, spec)
    best = None
    for volts in itertools.combinations(range(1, n // 2 + 1), loops):
        if any(2 * a == n for a in volts):
            continue  # that loop would lift to parallel links
        for sv in itertools.combinations(invs, semis):
            vg = cons.voltage_graph(base, G, list(volts) + list(sv))
            s = gr.graph_stats(cons.derived(vg).graph)
            if best is None or s.diameter < best[0]:
                best = (s.diameter, tuple(volts) + tuple(sv))
    return best


def main() -> None:
    p = argparse.ArgumentParser()
    p.add_argument("--loops", type=int, default=2)
    p.add_argument("--semis", type=int, default=0)
    p.add_argument("--max-order", type=int, default=24)
    args = p.parse_args()
    degree = 2 * args.loops + args.semis
    record: dict[float, tuple[int, tuple[int, ...]]] = {}
    for n in range(3, args.max_order + 1):
        found = best_lift(n, args.loops, args.semis)
        if found is None:
            continue
        diameter, volts = found
        if diameter not in record or record[diameter][0] < n:
            record[diameter] = (n, volts)
    print(f"degree {degree} circulant lifts of a one-vertex bouquet")
    for diameter in sorted(record):
        n, volts = record[diameter]
        print(f"  diameter {diameter}: order {n} via voltages {volts}")


if __name__ == "__main__":
    main()
