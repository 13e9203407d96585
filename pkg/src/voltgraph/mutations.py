"""Deliberate defects used to prove the law suite can fail.

Data mutations rewrite a voltage graph after it was validated; code
mutations patch one library function for the duration of a ``with`` block.
"""

from __future__ import annotations

from contextlib import contextmanager
from typing import Callable, Iterator
from unittest import mock

from . import constructions as cons
from . import graph as gr
from . import groups as grp
from .constructions import VoltageGraph, VoltMorphism
from .graph import Graph, GraphMorphism
from .groups import GroupHom

__all__ = ["MUTATIONS", "DATA_MUTATIONS", "CODE_MUTATIONS", "mutation_context", "apply_data_mutation"]


def flip_voltage(vg: VoltageGraph) -> VoltageGraph:
    """Multiply one non-semiedge voltage by element 1, leaving its reverse alone."""
    G, g = vg.group, vg.graph
    if G.order < 2 or g.dart_count == 0:
        return vg
    # prefer a loop or link dart: its partner keeps the old inverse
    d = min(g.darts(), key=lambda d: (g.lam[d] == d, d))
    alpha = list(vg.alpha)
    alpha[d] = G.mul(alpha[d], 1)
    return VoltageGraph(g, G, alpha, check=False)


def break_lambda(vg: VoltageGraph) -> VoltageGraph:
    """Make the first non-fixed dart λ-fixed, so λ stops being an involution."""
    g = vg.graph
    for d in g.darts():
        if g.lam[d] != d:
            lam = list(g.lam)
            lam[d] = d
            broken = Graph(g.vertex_count, g.src, g.tgt, lam, vertex_names=g.vertex_names, check=False)
            return VoltageGraph(broken, vg.group, vg.alpha, check=False)
    return vg


_original_enumerate_homs = grp.enumerate_homs
_original_counit = cons.counit


def _non_hom_enumerate(g1, g2, *args, **kwargs):
    out = []
    for h in _original_enumerate_homs(g1, g2, *args, **kwargs):
        images = list(h.images)
        if g1.order > 1 and g2.order > 1:
            images[1] = g2.mul(images[1], 1)
        out.append(GroupHom(g1, g2, images, check=False))
    return out


def _wrong_pullback_pairs(f1, f2):
    # dart filter compares against the reverse of the right-hand dart
    vpairs = [
        (v1, v2)
        for v1, w in enumerate(f1.vmap)
        for v2, w2 in enumerate(f2.vmap)
        if w == w2
    ]
    lam = f2.codomain.lam
    dpairs = [
        (d1, d2)
        for d1, e in enumerate(f1.dmap)
        for d2, e2 in enumerate(f2.dmap)
        if e == lam[e2]
    ]
    return vpairs, dpairs


def _dropped_counit(vg: VoltageGraph) -> VoltMorphism:
    eps = _original_counit(vg)
    f = eps.f
    dropped = GraphMorphism(f.domain, f.codomain, f.vmap, (0,) * len(f.dmap), check=False)
    return VoltMorphism(eps.domain, eps.codomain, dropped, eps.h, check=False)


DATA_MUTATIONS: dict[str, Callable[[VoltageGraph], VoltageGraph]] = {
    "flipped_voltage": flip_voltage,
    "broken_lambda": break_lambda,
}

CODE_MUTATIONS: dict[str, tuple[object, str, Callable]] = {
    "non_hom": (grp, "enumerate_homs", _non_hom_enumerate),
    "wrong_pullback_filter": (gr, "_pullback_pairs", _wrong_pullback_pairs),
    "dropped_counit_component": (cons, "counit", _dropped_counit),
}

MUTATIONS = tuple(DATA_MUTATIONS) + tuple(CODE_MUTATIONS)


def apply_data_mutation(name: str | None, vg: VoltageGraph) -> VoltageGraph:
    if name in DATA_MUTATIONS:
        return DATA_MUTATIONS[name](vg)
    return vg


@contextmanager
def mutation_context(name: str | None) -> Iterator[None]:
    if name is not None and name not in MUTATIONS:
        raise ValueError(f"unknown mutation {name!r}; choose from {', '.join(MUTATIONS)}")
    if name in CODE_MUTATIONS:
        target, attr, replacement = CODE_MUTATIONS[name]
        with mock.patch.object(target, attr, replacement):
            yield
    else:
        yield
