"""Lift the Z5 dumbbell and confirm it is the Petersen graph."""

from __future__ import annotations

from pathlib import Path

from voltgraph import constructions as cons
from voltgraph import graph as gr
from voltgraph.io import export_dot, read_document

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def main() -> None:
    base = read_document(str(FIXTURES / "dumbbell_z5.vg"))
    lift = cons.derived(base)
    stats = gr.graph_stats(lift.graph)
    print(f"vertices {stats.vertices}, edges {stats.edges}, degree {stats.regular_degree}, diameter {stats.diameter}")
    petersen = read_document(str(FIXTURES / "petersen.vg")).graph
    iso = gr.find_isomorphism(lift.graph, petersen)
    print("isomorphic to stored Petersen graph:", iso is not None)
    print("projection is a covering:", gr.is_covering(cons.derived_projection(base, lift)))
    print(export_dot(lift, name="petersen"), end="")


if __name__ == "__main__":
    main()
