"""Labelled graphs, voltage graphs and the functors between them.

``L`` turns vertex labels into quotient voltages ``β(s)⁻¹β(t)``; ``R`` pulls
the quotient map ``q: K̊(Γ) → ℓ(Γ)`` back along a voltage.  The derived
graph is also built directly so the two routes can be compared.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass
from typing import Sequence

from . import graph as gr
from .graph import Graph, GraphMorphism, PullbackResult
from .groups import (
    CapExceeded,
    FiniteGroup,
    GroupHom,
    compose_homs,
    direct_product,
    enumerate_homs,
    identity_hom,
    validate_hom,
)

__all__ = [
    "ConstructionError",
    "LabeledGraph",
    "VoltageGraph",
    "LabMorphism",
    "VoltMorphism",
    "EnumerationCaps",
    "voltage_graph",
    "k_ring",
    "k_on_hom",
    "ell",
    "ell_on_hom",
    "q",
    "voltage_morphism",
    "labeling_morphism",
    "functor_L",
    "functor_L_on_morphism",
    "r_pullback",
    "functor_R",
    "functor_R_on_morphism",
    "derived",
    "derived_projection",
    "counit",
    "universal_factorization",
    "iso_j",
    "iso_j_inverse",
    "volt_product",
    "lab_product",
    "k_ring_product_iso",
    "ell_product_iso",
    "validate_volt_morphism",
    "validate_lab_morphism",
    "identity_volt",
    "identity_lab",
    "compose_volt",
    "compose_lab",
    "enumerate_volt_morphisms",
    "enumerate_lab_morphisms",
]


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    group: FiniteGroup
    beta: tuple[int, ...]
    check: InitVar[bool] = True

    def __post_init__(self, check: bool) -> None:
        object.__setattr__(self, "beta", tuple(self.beta))
        if check:
            if len(self.beta) != self.graph.vertex_count:
                raise ConstructionError("labelling is not total on the vertices")
            for v, x in enumerate(self.beta):
                if not (isinstance(x, int) and 0 <= x < self.group.order):
                    raise ConstructionError(f"label of vertex {v} is not in {self.group.name}")


@dataclass(frozen=True)
class VoltageGraph:
    """Graph with dart voltages satisfying ``α(λ(d)) = α(d)⁻¹``."""

    graph: Graph
    group: FiniteGroup
    alpha: tuple[int, ...]
    check: InitVar[bool] = True

    def __post_init__(self, check: bool) -> None:
        object.__setattr__(self, "alpha", tuple(self.alpha))
        if check:
            problem = _voltage_problem(self)
            if problem:
                raise ConstructionError(problem)


def _voltage_problem(vg: VoltageGraph) -> str | None:
    g, G = vg.graph, vg.group
    if len(vg.alpha) != g.dart_count:
        return "voltage is not total on the darts"
    for d, a in enumerate(vg.alpha):
        if not (isinstance(a, int) and 0 <= a < G.order):
            return f"voltage of dart {d} is not in {G.name}"
    for d in g.darts():
        a = vg.alpha[d]
        if vg.alpha[g.lam[d]] != G.inv(a):
            if g.lam[d] == d:
                return (
                    f"semiedge dart {d}: voltage {G.format_element(a)} is not an involution "
                    f"in {G.name}"
                )
            return f"dart {d}: α(λ(d)) is not α(d)⁻¹"
    return None


def voltage_graph(graph: Graph, group: FiniteGroup, edge_voltages: Sequence[int]) -> VoltageGraph:
    """Assign one voltage per edge (in ``edges`` order) to its least dart.

    The reverse dart receives the inverse automatically.
    """
    orbits = gr.edges(graph)
    if len(edge_voltages) != len(orbits):
        raise ConstructionError(f"expected {len(orbits)} edge voltages, got {len(edge_voltages)}")
    alpha = [0] * graph.dart_count
    for orb, a in zip(orbits, edge_voltages):
        group.check_element(a)
        alpha[orb[0]] = a
        if len(orb) == 2:
            alpha[orb[1]] = group.inv(a)
        elif group.mul(a, a) != 0:
            raise ConstructionError(
                f"semiedge dart {orb[0]}: voltage {group.format_element(a)} is not an "
                f"involution in {group.name}"
            )
    return VoltageGraph(graph, group, alpha)


# --------------------------------------------------------------------------
# K̊, ℓ and q


def _element_names(G: FiniteGroup) -> list[str]:
    return [G.format_element(x) for x in G.elements()]


def k_ring(G: FiniteGroup) -> Graph:
    """Complete graph with semiedges on the elements; dart ``(x1, x2)`` is ``x1·n + x2``."""
    n = G.order
    src = [x1 for x1 in range(n) for _ in range(n)]
    tgt = [x2 for _ in range(n) for x2 in range(n)]
    lam = [x2 * n + x1 for x1 in range(n) for x2 in range(n)]
    return Graph(n, src, tgt, lam, vertex_names=_element_names(G))


def k_on_hom(h: GroupHom, check: bool = True) -> GraphMorphism:
    if check:
        _require_hom(h)
    n, m = h.source.order, h.target.order
    dmap = [h.images[x1] * m + h.images[x2] for x1 in range(n) for x2 in range(n)]
    return GraphMorphism(k_ring(h.source), k_ring(h.target), h.images, dmap, check=check)


def ell(G: FiniteGroup) -> Graph:
    """One vertex, one dart per element, ``λ(a) = a⁻¹``."""
    n = G.order
    return Graph(1, [0] * n, [0] * n, [G.inv(a) for a in range(n)], vertex_names=["*"])


def ell_on_hom(h: GroupHom, check: bool = True) -> GraphMorphism:
    if check:
        _require_hom(h)
    return GraphMorphism(ell(h.source), ell(h.target), (0,), h.images, check=check)


def q(G: FiniteGroup) -> GraphMorphism:
    """``q_Γ: K̊(Γ) → ℓ(Γ)``, ``(u, v) ↦ u⁻¹v``."""
    n = G.order
    dmap = [G.mul(G.inv(u), v) for u in range(n) for v in range(n)]
    return GraphMorphism(k_ring(G), ell(G), (0,) * n, dmap)


def _require_hom(h: GroupHom) -> None:
    problem = validate_hom(h)
    if problem:
        raise ConstructionError(f"not a group hom: {problem}")


def voltage_morphism(vg: VoltageGraph) -> GraphMorphism:
    """The voltage seen as a graph morphism ``G → ℓ(Γ)``."""
    return GraphMorphism(
        vg.graph, ell(vg.group), (0,) * vg.graph.vertex_count, vg.alpha, check=False
    )


def labeling_morphism(lg: LabeledGraph) -> GraphMorphism:
    """The labelling seen as a graph morphism ``G → K̊(Γ)``."""
    g, n = lg.graph, lg.group.order
    dmap = [lg.beta[g.src[d]] * n + lg.beta[g.tgt[d]] for d in g.darts()]
    return GraphMorphism(g, k_ring(lg.group), lg.beta, dmap, check=False)


# --------------------------------------------------------------------------
# morphisms of Volt and Lab


@dataclass(frozen=True)
class VoltMorphism:
    domain: VoltageGraph
    codomain: VoltageGraph
    f: GraphMorphism
    h: GroupHom
    check: InitVar[bool] = True

    def __post_init__(self, check: bool) -> None:
        if check:
            problem = validate_volt_morphism(self)
            if problem:
                raise ConstructionError(problem)

    def key(self) -> tuple:
        return (self.f.vmap, self.f.dmap, self.h.images)


@dataclass(frozen=True)
class LabMorphism:
    domain: LabeledGraph
    codomain: LabeledGraph
    f: GraphMorphism
    h: GroupHom
    check: InitVar[bool] = True

    def __post_init__(self, check: bool) -> None:
        if check:
            problem = validate_lab_morphism(self)
            if problem:
                raise ConstructionError(problem)

    def key(self) -> tuple:
        return (self.f.vmap, self.f.dmap, self.h.images)


def _common_checks(m, dom_graph, cod_graph, dom_group, cod_group) -> str | None:
    if m.f.domain != dom_graph or m.f.codomain != cod_graph:
        return "graph morphism does not match the domain/codomain graphs"
    if m.h.source != dom_group or m.h.target != cod_group:
        return "group hom does not match the domain/codomain groups"
    problem = gr.validate_morphism(m.f)
    if problem:
        return f"graph morphism: {problem}"
    problem = validate_hom(m.h)
    if problem:
        return f"group hom: {problem}"
    return None


def validate_volt_morphism(m: VoltMorphism) -> str | None:
    a, b = m.domain, m.codomain
    problem = _common_checks(m, a.graph, b.graph, a.group, b.group)
    if problem:
        return problem
    for d in a.graph.darts():
        if m.h.images[a.alpha[d]] != b.alpha[m.f.dmap[d]]:
            return f"voltage condition fails at dart {d}"
    return None


def validate_lab_morphism(m: LabMorphism) -> str | None:
    a, b = m.domain, m.codomain
    problem = _common_checks(m, a.graph, b.graph, a.group, b.group)
    if problem:
        return problem
    for v in a.graph.vertices():
        if m.h.images[a.beta[v]] != b.beta[m.f.vmap[v]]:
            return f"label condition fails at vertex {v}"
    return None


def identity_volt(vg: VoltageGraph) -> VoltMorphism:
    return VoltMorphism(vg, vg, gr.identity(vg.graph), identity_hom(vg.group))


def identity_lab(lg: LabeledGraph) -> LabMorphism:
    return LabMorphism(lg, lg, gr.identity(lg.graph), identity_hom(lg.group))


def compose_volt(m1: VoltMorphism, m2: VoltMorphism) -> VoltMorphism:
    """``m2 ∘ m1``."""
    if m1.codomain != m2.domain:
        raise ConstructionError("voltage morphisms are not composable")
    return VoltMorphism(
        m1.domain, m2.codomain, gr.compose(m1.f, m2.f), compose_homs(m1.h, m2.h), check=False
    )


def compose_lab(m1: LabMorphism, m2: LabMorphism) -> LabMorphism:
    """``m2 ∘ m1``."""
    if m1.codomain != m2.domain:
        raise ConstructionError("labelled morphisms are not composable")
    return LabMorphism(
        m1.domain, m2.codomain, gr.compose(m1.f, m2.f), compose_homs(m1.h, m2.h), check=False
    )


# --------------------------------------------------------------------------
# the functors


def functor_L(lg: LabeledGraph) -> VoltageGraph:
    G, g, beta = lg.group, lg.graph, lg.beta
    alpha = [G.mul(G.inv(beta[g.src[d]]), beta[g.tgt[d]]) for d in g.darts()]
    return VoltageGraph(g, G, alpha)


def functor_L_on_morphism(m: LabMorphism) -> VoltMorphism:
    problem = validate_lab_morphism(m)
    if problem:
        raise ConstructionError(f"invalid labelled morphism: {problem}")
    return VoltMorphism(functor_L(m.domain), functor_L(m.codomain), m.f, m.h)


def r_pullback(vg: VoltageGraph) -> PullbackResult:
    """``G ×_{ℓ(Γ)} K̊(Γ)`` with ``G`` on the left and ``K̊(Γ)`` on the right.

    Apex vertex ``(v, x)`` has id ``v·|Γ| + x``; apex dart ``(d, (x1, x2))``
    has id ``d·|Γ| + x1``.  Vertices are renamed ``name@x``.
    """
    pb = gr.pullback(voltage_morphism(vg), q(vg.group))
    G, g = vg.group, vg.graph
    names = [f"{g.vertex_name(v)}@{G.format_element(x)}" for v, x in pb.vertex_index]
    apex = pb.apex.with_names(names)
    left = GraphMorphism(apex, pb.proj_left.codomain, pb.proj_left.vmap, pb.proj_left.dmap, check=False)
    right = GraphMorphism(apex, pb.proj_right.codomain, pb.proj_right.vmap, pb.proj_right.dmap, check=False)
    return PullbackResult(apex, left, right, pb.vertex_index, pb.dart_index, pb.vertex_id, pb.dart_id)


def functor_R(vg: VoltageGraph) -> LabeledGraph:
    """``(G ×_{ℓ(Γ)} K̊(Γ), Γ, q*(α))``: vertex ``(v, x)`` is labelled ``x``."""
    pb = r_pullback(vg)
    return LabeledGraph(pb.apex, vg.group, pb.proj_right.vmap)


def r_projection(vg: VoltageGraph) -> GraphMorphism:
    """``α*(q_Γ)``, the leg of ``R(vg)`` back onto the base graph."""
    return r_pullback(vg).proj_left


def functor_R_on_morphism(m: VoltMorphism) -> LabMorphism:
    """``R(f, h) = (u, h)`` with ``u(v, x) = (f(v), h(x))`` and
    ``u(d, (x1, x2)) = (f(d), (h(x1), h(x2)))``.

    The explicit formula is cross-checked against the morphism induced by the
    universal property of the codomain pullback.
    """
    problem = validate_volt_morphism(m)
    if problem:
        raise ConstructionError(f"invalid voltage morphism: {problem}")
    src_pb, tgt_pb = r_pullback(m.domain), r_pullback(m.codomain)
    h, f = m.h, m.f
    n, n2 = m.domain.group.order, m.codomain.group.order
    vmap = [tgt_pb.vertex_id[(f.vmap[v], h.images[x])] for v, x in src_pb.vertex_index]
    dmap = []
    for d, k in src_pb.dart_index:
        x1, x2 = divmod(k, n)
        dmap.append(tgt_pb.dart_id[(f.dmap[d], h.images[x1] * n2 + h.images[x2])])
    u = GraphMorphism(src_pb.apex, tgt_pb.apex, vmap, dmap)
    mediated = gr.mediate(
        tgt_pb,
        gr.compose(src_pb.proj_left, f),
        gr.compose(src_pb.proj_right, k_on_hom(h)),
    )
    if mediated != u:
        raise ConstructionError("explicit R(f, h) disagrees with the pullback mediator")
    return LabMorphism(functor_R(m.domain), functor_R(m.codomain), u, h)


def derived(vg: VoltageGraph) -> VoltageGraph:
    """The derived voltage graph, built straight from the vertex/dart formulas.

    ``(d, x)`` runs from ``(s(d), x)`` to ``(t(d), x·α(d))``, its reverse is
    ``(λ(d), x·α(d))`` and it carries voltage ``α(d)``.  Ids are
    ``v·|Γ| + x`` and ``d·|Γ| + x``.
    """
    g, G, alpha = vg.graph, vg.group, vg.alpha
    n = G.order
    src, tgt, lam, volt = [], [], [], []
    for d in g.darts():
        a = alpha[d]
        for x in range(n):
            xa = G.mul(x, a)
            src.append(g.src[d] * n + x)
            tgt.append(g.tgt[d] * n + xa)
            lam.append(g.lam[d] * n + xa)
            volt.append(a)
    names = [f"{g.vertex_name(v)}@{G.format_element(x)}" for v in g.vertices() for x in range(n)]
    lift = Graph(g.vertex_count * n, src, tgt, lam, vertex_names=names)
    return VoltageGraph(lift, G, volt)


def derived_projection(vg: VoltageGraph, lift: VoltageGraph | None = None) -> GraphMorphism:
    """``p: G^α → G``, ``(v, x) ↦ v`` and ``(d, x) ↦ d``."""
    if lift is None:
        lift = derived(vg)
    n = vg.group.order
    return GraphMorphism(
        lift.graph,
        vg.graph,
        [i // n for i in lift.graph.vertices()],
        [i // n for i in lift.graph.darts()],
    )


def counit(vg: VoltageGraph) -> VoltMorphism:
    """``ε: LR(vg) → vg``, the pullback projection paired with the identity hom."""
    pb = r_pullback(vg)
    lr = functor_L(LabeledGraph(pb.apex, vg.group, pb.proj_right.vmap))
    return VoltMorphism(lr, vg, pb.proj_left, identity_hom(vg.group))


def universal_factorization(lg: LabeledGraph, vg: VoltageGraph, m: VoltMorphism) -> LabMorphism:
    """The unique ``(u, h): lg → R(vg)`` with ``ε ∘ L(u, h) = m``.

    ``u(v') = (f(v'), h(β(v')))`` and ``u(d') = (f(d'), (h(β(s d')), h(β(t d'))))``;
    the result is checked against the generic pullback mediator.
    """
    if m.domain != functor_L(lg) or m.codomain != vg:
        raise ConstructionError("morphism does not go from L(lg) to vg")
    problem = validate_volt_morphism(m)
    if problem:
        raise ConstructionError(f"invalid voltage morphism: {problem}")
    pb = r_pullback(vg)
    f, h, beta, g = m.f, m.h, lg.beta, lg.graph
    n = vg.group.order
    vmap = [pb.vertex_id[(f.vmap[v], h.images[beta[v]])] for v in g.vertices()]
    dmap = [
        pb.dart_id[(f.dmap[d], h.images[beta[g.src[d]]] * n + h.images[beta[g.tgt[d]]])]
        for d in g.darts()
    ]
    u = GraphMorphism(g, pb.apex, vmap, dmap)
    mediated = gr.mediate(pb, f, gr.compose(labeling_morphism(lg), k_on_hom(h)))
    if mediated != u:
        raise ConstructionError("explicit factorization disagrees with the pullback mediator")
    return LabMorphism(lg, functor_R(vg), u, h)


def iso_j(vg: VoltageGraph) -> VoltMorphism:
    """``j: LR(vg) → derived(vg)``; ``(v, x) ↦ (v, x)``, ``(d, (x1, x2)) ↦ (d, x1)``."""
    pb = r_pullback(vg)
    lr = functor_L(LabeledGraph(pb.apex, vg.group, pb.proj_right.vmap))
    lift = derived(vg)
    n = vg.group.order
    vmap = [v * n + x for v, x in pb.vertex_index]
    dmap = [d * n + k // n for d, k in pb.dart_index]
    return VoltMorphism(lr, lift, GraphMorphism(lr.graph, lift.graph, vmap, dmap), identity_hom(vg.group))


def iso_j_inverse(vg: VoltageGraph) -> VoltMorphism:
    """``(d, x) ↦ (d, (x, x·α(d)))``."""
    pb = r_pullback(vg)
    lr = functor_L(LabeledGraph(pb.apex, vg.group, pb.proj_right.vmap))
    lift = derived(vg)
    G = vg.group
    n = G.order
    vmap = [pb.vertex_id[divmod(i, n)] for i in lift.graph.vertices()]
    dmap = []
    for i in lift.graph.darts():
        d, x = divmod(i, n)
        dmap.append(pb.dart_id[(d, x * n + G.mul(x, vg.alpha[d]))])
    return VoltMorphism(lift, lr, GraphMorphism(lift.graph, lr.graph, vmap, dmap), identity_hom(G))


# --------------------------------------------------------------------------
# products


def volt_product(v1: VoltageGraph, v2: VoltageGraph) -> VoltageGraph:
    """Product in Volt: graph product, direct product group, paired voltages."""
    pb = gr.product(v1.graph, v2.graph)
    G = direct_product(v1.group, v2.group)
    m = v2.group.order
    alpha = [v1.alpha[d1] * m + v2.alpha[d2] for d1, d2 in pb.dart_index]
    return VoltageGraph(pb.apex, G, alpha)


def lab_product(l1: LabeledGraph, l2: LabeledGraph) -> LabeledGraph:
    pb = gr.product(l1.graph, l2.graph)
    G = direct_product(l1.group, l2.group)
    m = l2.group.order
    beta = [l1.beta[a] * m + l2.beta[b] for a, b in pb.vertex_index]
    return LabeledGraph(pb.apex, G, beta)


def k_ring_product_iso(G1: FiniteGroup, G2: FiniteGroup) -> GraphMorphism:
    """Pair reindexing ``K̊(Γ1 × Γ2) → K̊(Γ1) × K̊(Γ2)``."""
    G = direct_product(G1, G2)
    pb = gr.product(k_ring(G1), k_ring(G2))
    n1, n2, n = G1.order, G2.order, G.order
    vmap = [pb.vertex_id[divmod(x, n2)] for x in range(n)]
    dmap = []
    for x1 in range(n):
        a1, b1 = divmod(x1, n2)
        for x2 in range(n):
            a2, b2 = divmod(x2, n2)
            dmap.append(pb.dart_id[(a1 * n1 + a2, b1 * n2 + b2)])
    return GraphMorphism(k_ring(G), pb.apex, vmap, dmap)


def ell_product_iso(G1: FiniteGroup, G2: FiniteGroup) -> GraphMorphism:
    """Pair reindexing ``ℓ(Γ1 × Γ2) → ℓ(Γ1) × ℓ(Γ2)``."""
    G = direct_product(G1, G2)
    pb = gr.product(ell(G1), ell(G2))
    n2 = G2.order
    dmap = [pb.dart_id[divmod(x, n2)] for x in range(G.order)]
    return GraphMorphism(ell(G), pb.apex, (pb.vertex_id[(0, 0)],), dmap)


# --------------------------------------------------------------------------
# exhaustive hom-set enumeration


@dataclass(frozen=True)
class EnumerationCaps:
    """Size limits for the exhaustive morphism searches.

    The domain graph and both groups are capped; the codomain graph only by
    ``max_codomain_vertices`` since ``R`` multiplies sizes by ``|Γ|``.
    """

    max_vertices: int = 4
    max_darts: int = 8
    max_group_order: int = 4
    max_codomain_vertices: int = 64

    def check(self, g: Graph, h: Graph, G1: FiniteGroup, G2: FiniteGroup) -> None:
        if g.vertex_count > self.max_vertices or g.dart_count > self.max_darts:
            raise CapExceeded(
                f"domain graph has {g.vertex_count} vertices / {g.dart_count} darts; "
                f"cap is {self.max_vertices} / {self.max_darts}"
            )
        if max(G1.order, G2.order) > self.max_group_order:
            raise CapExceeded(
                f"group orders {G1.order}, {G2.order} exceed cap {self.max_group_order}"
            )
        if h.vertex_count > self.max_codomain_vertices:
            raise CapExceeded(
                f"codomain graph has {h.vertex_count} vertices; cap is {self.max_codomain_vertices}"
            )


DEFAULT_CAPS = EnumerationCaps()


def enumerate_volt_morphisms(
    a: VoltageGraph, b: VoltageGraph, caps: EnumerationCaps = DEFAULT_CAPS
) -> list[VoltMorphism]:
    caps.check(a.graph, b.graph, a.group, b.group)
    out = []
    for h in enumerate_homs(a.group, b.group):
        images = h.images

        def dart_ok(d: int, e: int) -> bool:
            return images[a.alpha[d]] == b.alpha[e]

        for f in gr.enumerate_morphisms(a.graph, b.graph, dart_ok=dart_ok):
            out.append(VoltMorphism(a, b, f, h, check=False))
    return out


def enumerate_lab_morphisms(
    a: LabeledGraph, b: LabeledGraph, caps: EnumerationCaps = DEFAULT_CAPS
) -> list[LabMorphism]:
    caps.check(a.graph, b.graph, a.group, b.group)
    out = []
    for h in enumerate_homs(a.group, b.group):
        images = h.images

        def vertex_ok(v: int, w: int) -> bool:
            return images[a.beta[v]] == b.beta[w]

        for f in gr.enumerate_morphisms(a.graph, b.graph, vertex_ok=vertex_ok):
            out.append(LabMorphism(a, b, f, h, check=False))
    return out

