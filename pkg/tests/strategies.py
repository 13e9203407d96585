"""Hypothesis strategies for small groups, graphs and voltage assignments."""

from __future__ import annotations

from hypothesis import strategies as st

from voltgraph import graph as gr
from voltgraph.constructions import LabeledGraph, voltage_graph
from voltgraph.groups import cyclic, direct_product

SMALL_GROUPS = [cyclic(1), cyclic(2), cyclic(3), cyclic(4), cyclic(5), cyclic(6),
                direct_product(cyclic(2), cyclic(2)), direct_product(cyclic(2), cyclic(3))]

groups = st.sampled_from(SMALL_GROUPS)


@st.composite
def graphs(draw, max_vertices: int = 4, max_edges: int = 5):
    n = draw(st.integers(1, max_vertices))
    kinds = ["semiedge", "loop"] + (["link"] if n > 1 else [])
    spec = []
    for _ in range(draw(st.integers(0, max_edges))):
        kind = draw(st.sampled_from(kinds))
        if kind == "link":
            u = draw(st.integers(0, n - 1))
            v = draw(st.integers(0, n - 2))
            spec.append((kind, (u, v if v < u else v + 1)))
        else:
            spec.append((kind, (draw(st.integers(0, n - 1)),)))
    return gr.build_graph(n, spec)


@st.composite
def voltage_graphs(draw, group=None, max_vertices: int = 4, max_edges: int = 5):
    G = group if group is not None else draw(groups)
    g = draw(graphs(max_vertices, max_edges))
    invs = G.involutions()
    values = [
        draw(st.sampled_from(invs)) if len(orb) == 1 else draw(st.integers(0, G.order - 1))
        for orb in gr.edges(g)
    ]
    return voltage_graph(g, G, values)


@st.composite
def labeled_graphs(draw, group=None, max_vertices: int = 4, max_edges: int = 5):
    G = group if group is not None else draw(groups)
    g = draw(graphs(max_vertices, max_edges))
    return LabeledGraph(g, G, [draw(st.integers(0, G.order - 1)) for _ in g.vertices()])
