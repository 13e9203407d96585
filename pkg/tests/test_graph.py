from __future__ import annotations

import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from voltgraph import graph as gr
from voltgraph.graph import EdgeKind, Graph, GraphError, GraphMorphism, SizeCapError

from .strategies import graphs


def brute_morphisms(g, h):
    """All (vmap, dmap) pairs satisfying the morphism equations, by exhaustion."""
    out = set()
    for vmap in itertools.product(range(h.vertex_count), repeat=g.vertex_count):
        for dmap in itertools.product(range(h.dart_count), repeat=g.dart_count):
            f = GraphMorphism(g, h, vmap, dmap, check=False)
            if gr.validate_morphism(f) is None:
                out.add((vmap, dmap))
    return out


def brute_isomorphic(g, h):
    if (g.vertex_count, g.dart_count) != (h.vertex_count, h.dart_count):
        return False
    for perm in itertools.permutations(range(h.vertex_count)):
        counts_g = sorted((perm[g.src[d]], perm[g.tgt[d]], g.lam[d] == d) for d in g.darts())
        counts_h = sorted((h.src[e], h.tgt[e], h.lam[e] == e) for e in h.darts())
        if counts_g == counts_h:
            return True
    return False


def test_build_graph_numbering():
    g = gr.build_graph(2, [("link", (0, 1)), ("loop", (1,)), ("semiedge", (0,))])
    assert g.src == (0, 1, 1, 1, 0)
    assert g.tgt == (1, 0, 1, 1, 0)
    assert g.lam == (1, 0, 3, 2, 4)
    assert [gr.classify_edge(g, d) for d in (0, 2, 4)] == [EdgeKind.LINK, EdgeKind.LOOP, EdgeKind.SEMIEDGE]
    assert gr.edges(g) == [(0, 1), (2, 3), (4,)]


@pytest.mark.parametrize(
    "src,tgt,lam,fragment",
    [
        ((0,), (0,), (1,), "totality"),
        ((0, 0, 0), (0, 0, 0), (1, 2, 0), "involution"),
        ((0, 1), (1, 1), (1, 0), "s∘λ≠t"),
    ],
)
def test_validate_graph_messages(src, tgt, lam, fragment):
    g = Graph(2, src, tgt, lam, check=False)
    assert fragment in gr.validate_graph(g)
    with pytest.raises(GraphError):
        Graph(2, src, tgt, lam)


def test_bad_builds():
    with pytest.raises(GraphError):
        gr.build_graph(2, [("link", (0, 0))])
    with pytest.raises(GraphError):
        gr.build_graph(1, [("loop", (3,))])


def test_terminal_is_terminal():
    t = gr.terminal_graph()
    g = gr.build_graph(3, [("link", (0, 1)), ("loop", (2,)), ("semiedge", (1,))])
    assert len(list(gr.enumerate_morphisms(g, t))) == 1
    # a λ-fixed dart can only land on a λ-fixed dart
    loop = gr.build_graph(1, [("loop", (0,))])
    semi = gr.build_graph(1, [("semiedge", (0,))])
    assert len(list(gr.enumerate_morphisms(semi, loop))) == 0


def test_compose_and_inverse():
    c = gr.cycle_graph(4)
    rot = GraphMorphism(c, c, [1, 2, 3, 0], [2, 3, 4, 5, 6, 7, 0, 1])
    assert gr.is_isomorphism(rot)
    assert gr.compose(rot, gr.inverse(rot)) == gr.identity(c)
    four = rot
    for _ in range(3):
        four = gr.compose(four, rot)
    assert four == gr.identity(c)


@given(graphs(max_vertices=3, max_edges=2), graphs(max_vertices=2, max_edges=2))
def test_enumerate_morphisms_matches_brute_force(g, h):
    found = [(f.vmap, f.dmap) for f in gr.enumerate_morphisms(g, h)]
    assert len(found) == len(set(found))
    assert set(found) == brute_morphisms(g, h)


@given(graphs(max_vertices=3, max_edges=3), graphs(max_vertices=3, max_edges=3))
def test_product_sizes_and_legs(g, h):
    pb = gr.product(g, h)
    assert pb.apex.vertex_count == g.vertex_count * h.vertex_count
    assert pb.apex.dart_count == g.dart_count * h.dart_count
    assert gr.validate_morphism(pb.proj_left) is None
    assert gr.validate_morphism(pb.proj_right) is None


@given(graphs(max_vertices=2, max_edges=2), graphs(max_vertices=2, max_edges=2), graphs(max_vertices=2, max_edges=1))
def test_pullback_universal_property(a, b, v):
    # cospan over the terminal graph: mediators into the product are unique
    pb = gr.product(a, b)
    via = {(u.vmap, u.dmap) for u in gr.enumerate_morphisms(v, pb.apex)}
    pairs = [(fa, fb) for fa in gr.enumerate_morphisms(v, a) for fb in gr.enumerate_morphisms(v, b)]
    assert len(via) == len(pairs)
    for fa, fb in pairs:
        m = gr.mediate(pb, fa, fb)
        assert gr.compose(m, pb.proj_left) == fa
        assert gr.compose(m, pb.proj_right) == fb


def test_mediate_rejects_non_commuting_square():
    line = gr.build_graph(2, [("link", (0, 1))])
    pt = gr.build_graph(1, [])
    f1 = GraphMorphism(pt, line, [0], [])
    f2 = GraphMorphism(pt, line, [1], [])
    pb = gr.pullback(f1, f2)
    assert pb.apex.vertex_count == 0
    with pytest.raises(GraphError):
        gr.mediate(pb, gr.identity(pt), gr.identity(pt))


@given(graphs(max_vertices=5, max_edges=6), st.randoms(use_true_random=False))
def test_find_isomorphism_on_relabelled_copies(g, rnd):
    perm = list(range(g.vertex_count))
    rnd.shuffle(perm)
    dperm = list(range(g.dart_count))
    rnd.shuffle(dperm)
    inv = {d: i for i, d in enumerate(dperm)}
    h = Graph(
        g.vertex_count,
        [perm[g.src[dperm[i]]] for i in range(g.dart_count)],
        [perm[g.tgt[dperm[i]]] for i in range(g.dart_count)],
        [inv[g.lam[dperm[i]]] for i in range(g.dart_count)],
    )
    f = gr.find_isomorphism(g, h)
    assert f is not None and gr.is_isomorphism(f)


@given(graphs(max_vertices=4, max_edges=4), graphs(max_vertices=4, max_edges=4))
def test_find_isomorphism_matches_brute_force(g, h):
    f = gr.find_isomorphism(g, h)
    assert (f is not None) == brute_isomorphic(g, h)
    if f is not None:
        assert gr.is_isomorphism(f)


def test_isomorphism_distinguishes_semiedge_from_loop_half():
    a = gr.build_graph(1, [("semiedge", (0,)), ("semiedge", (0,))])
    b = gr.build_graph(1, [("loop", (0,))])
    assert gr.find_isomorphism(a, b) is None


def test_isomorphism_cap():
    big = gr.cycle_graph(65)
    with pytest.raises(SizeCapError):
        gr.find_isomorphism(big, big)


def test_cycle_not_iso_to_two_triangles():
    c6 = gr.cycle_graph(6)
    two = gr.build_graph(6, [("link", (i, j)) for i, j in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]])
    assert gr.find_isomorphism(c6, two) is None


def test_fibration_examples():
    c6, c3 = gr.cycle_graph(6), gr.cycle_graph(3)
    wrap = GraphMorphism(c6, c3, [i % 3 for i in range(6)], [d % 6 for d in range(12)])
    assert gr.is_fibration(wrap) and gr.is_covering(wrap)
    assert gr.is_fibration_by_pullback(wrap)
    # folding a link onto a semiedge is a 2-fold covering
    line = gr.build_graph(2, [("link", (0, 1))])
    semi = gr.build_graph(1, [("semiedge", (0,))])
    fold = GraphMorphism(line, semi, [0, 0], [0, 0])
    assert gr.is_covering(fold)
    # a path onto a single link misses neighbours at the ends
    path = gr.build_graph(3, [("link", (0, 1)), ("link", (1, 2))])
    onto = GraphMorphism(path, line, [0, 1, 0], [0, 1, 1, 0])
    assert not gr.is_fibration(onto)
    assert not gr.is_fibration_by_pullback(onto)


@given(graphs(max_vertices=3, max_edges=3), graphs(max_vertices=2, max_edges=3))
def test_fibration_tests_agree(g, h):
    for f in itertools.islice(gr.enumerate_morphisms(g, h), 20):
        assert gr.is_fibration(f) == gr.is_fibration_by_pullback(f)


def test_fibration_rejects_invalid_morphism():
    c = gr.cycle_graph(3)
    with pytest.raises(GraphError):
        gr.is_fibration(GraphMorphism(c, c, [0, 0, 0], [0] * 6, check=False))


def test_stats_counts_and_diameter():
    g = gr.build_graph(3, [("link", (0, 1)), ("loop", (2,)), ("semiedge", (0,))])
    s = gr.graph_stats(g)
    assert (s.vertices, s.darts, s.edges) == (3, 5, 3)
    assert (s.semiedges, s.loops, s.links) == (1, 1, 1)
    assert s.degrees == (2, 1, 2)
    assert s.components == 2 and s.diameter == math.inf
    c = gr.graph_stats(gr.cycle_graph(7))
    assert c.regular_degree == 2 and c.diameter == 3
