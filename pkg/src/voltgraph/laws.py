"""Executable law catalogue.

Every check walks a deterministic stream of small instances, stops at the
first failure and records a counterexample that :func:`replay` can re-run
from its serialized documents.  Random instances come from
``random.Random`` (Mersenne Twister MT19937) seeded with an integer, so a
seed means the same instances on every platform.
"""

from __future__ import annotations

import itertools
import json
import random
import time
import zlib
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from . import constructions as cons
from . import graph as gr
from . import groups as grp
from .constructions import (
    DEFAULT_CAPS,
    EnumerationCaps,
    LabeledGraph,
    VoltageGraph,
)
from .graph import EdgeKind, Graph
from .groups import FiniteGroup, GroupHom, group_from_name
from .io import parse, parse_group, serialize, serialize_group
from .mutations import apply_data_mutation, mutation_context

__all__ = [
    "DEFAULT_PALETTE",
    "InstanceGenerator",
    "LawReport",
    "LawConfig",
    "LawFailure",
    "LawContext",
    "gen_graph",
    "gen_voltage_graph",
    "gen_labeled_graph",
    "edge_kind_sweep",
    "single_edge_voltage_graphs",
    "check_pullback_universality",
    "check_naturality_q",
    "check_counit_universal",
    "check_hom_set_bijection",
    "check_derived_iso",
    "check_product_laws",
    "check_covering",
    "run_all",
    "replay",
]

DEFAULT_PALETTE = ("Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "Z2xZ3")


def palette(names: Iterable[str]) -> tuple[FiniteGroup, ...]:
    return tuple(group_from_name(n) for n in names)


# --------------------------------------------------------------------------
# instance generation


@dataclass
class InstanceGenerator:
    """Seeded source of random small graphs.

    ``edge_kind_weights`` weighs (semiedge, loop, link).  Links are only
    drawn when the graph has two or more vertices.
    """

    seed: int = 0
    max_vertices: int = 4
    max_edges: int = 5
    edge_kind_weights: tuple[float, float, float] = (1.0, 1.0, 1.0)
    groups: Sequence[FiniteGroup] = field(default_factory=lambda: palette(DEFAULT_PALETTE))
    rng: random.Random = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if not self.groups:
            raise ValueError("group palette is empty")
        self.rng = random.Random(self.seed)

    def pick_group(self) -> FiniteGroup:
        return self.groups[self.rng.randrange(len(self.groups))]


def gen_graph(gen: InstanceGenerator) -> Graph:
    rng = gen.rng
    n = rng.randint(1, gen.max_vertices)
    k = rng.randint(0, gen.max_edges)
    kinds = [EdgeKind.SEMIEDGE, EdgeKind.LOOP, EdgeKind.LINK]
    weights = list(gen.edge_kind_weights)
    if n < 2:
        weights[2] = 0.0
    spec = []
    for _ in range(k):
        if sum(weights) <= 0:
            break
        kind = rng.choices(kinds, weights)[0]
        if kind is EdgeKind.LINK:
            spec.append((kind, tuple(rng.sample(range(n), 2))))
        else:
            spec.append((kind, (rng.randrange(n),)))
    return gr.build_graph(n, spec, vertex_names=[f"v{i}" for i in range(n)])


def _random_voltages(rng: random.Random, g: Graph, G: FiniteGroup) -> list[int]:
    involutions = G.involutions()
    out = []
    for orb in gr.edges(g):
        if len(orb) == 1:
            out.append(involutions[rng.randrange(len(involutions))])
        else:
            out.append(rng.randrange(G.order))
    return out


def gen_voltage_graph(gen: InstanceGenerator, group: FiniteGroup | None = None) -> VoltageGraph:
    G = group if group is not None else gen.pick_group()
    g = gen_graph(gen)
    return cons.voltage_graph(g, G, _random_voltages(gen.rng, g, G))


def gen_labeled_graph(gen: InstanceGenerator, group: FiniteGroup | None = None) -> LabeledGraph:
    G = group if group is not None else gen.pick_group()
    g = gen_graph(gen)
    return LabeledGraph(g, G, [gen.rng.randrange(G.order) for _ in g.vertices()])


def edge_kind_sweep(
    groups: Sequence[FiniteGroup],
    max_vertices: int = 4,
    max_edges: int = 5,
    placements: int = 2,
    seed: int = 0,
) -> Iterator[VoltageGraph]:
    """Every mix of (vertex count, #semiedges, #loops, #links) within the bounds.

    Each mix is realised ``placements`` times per group with seeded random
    endpoints and voltages.
    """
    rng = random.Random(seed)
    for n in range(1, max_vertices + 1):
        for total in range(max_edges + 1):
            for semi in range(total + 1):
                for loops in range(total - semi + 1):
                    links = total - semi - loops
                    if links and n < 2:
                        continue
                    for G in groups:
                        for _ in range(placements):
                            spec = [(EdgeKind.SEMIEDGE, (rng.randrange(n),)) for _ in range(semi)]
                            spec += [(EdgeKind.LOOP, (rng.randrange(n),)) for _ in range(loops)]
                            spec += [(EdgeKind.LINK, tuple(rng.sample(range(n), 2))) for _ in range(links)]
                            g = gr.build_graph(n, spec, vertex_names=[f"v{i}" for i in range(n)])
                            yield cons.voltage_graph(g, G, _random_voltages(rng, g, G))


def single_edge_voltage_graphs(groups: Sequence[FiniteGroup]) -> list[VoltageGraph]:
    """Every one-edge voltage graph (semiedge, loop or link) with every admissible voltage."""
    out = []
    for G in groups:
        for kind, n, ends in (
            (EdgeKind.SEMIEDGE, 1, (0,)),
            (EdgeKind.LOOP, 1, (0,)),
            (EdgeKind.LINK, 2, (0, 1)),
        ):
            g = gr.build_graph(n, [(kind, ends)], vertex_names=[f"v{i}" for i in range(n)])
            values = G.involutions() if kind is EdgeKind.SEMIEDGE else list(G.elements())
            out += [cons.voltage_graph(g, G, [a]) for a in values]
    return out


# --------------------------------------------------------------------------
# reports


@dataclass
class LawReport:
    law: str
    seed: int
    instance: dict
    verdict: str
    counterexample: dict | None
    millis: int

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def record(self, timing: bool = True) -> dict:
        return {
            "law": self.law,
            "seed": self.seed,
            "instance": self.instance,
            "verdict": self.verdict,
            "counterexample": self.counterexample,
            "millis": self.millis if timing else 0,
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.record(timing), ensure_ascii=False)

    def to_text(self) -> str:
        info = ", ".join(f"{k}={v}" for k, v in self.instance.items() if k != "groups")
        line = f"{self.verdict.upper():4}  {self.law:24} {info} ({self.millis} ms)"
        if self.counterexample:
            line += f"\n      counterexample: {self.counterexample['message']}"
        return line


class LawFailure(Exception):
    pass


@dataclass(frozen=True)
class LawContext:
    mutation: str | None = None
    caps: EnumerationCaps = DEFAULT_CAPS

    def prepare(self, vg: VoltageGraph) -> VoltageGraph:
        return apply_data_mutation(self.mutation, vg)


@dataclass
class _Case:
    payload: dict
    run: Callable[[], int | None]


def _evaluate(law: str, seed: int, description: dict, cases: Iterable[_Case], ctx: LawContext) -> LawReport:
    start = time.perf_counter()
    instances = checked = 0
    failure = None
    for case in cases:
        instances += 1
        try:
            checked += case.run() or 1
        except LawFailure as exc:
            failure = (case, str(exc))
        except Exception as exc:  # a construction blowing up is a failed law too
            failure = (case, f"{type(exc).__name__}: {exc}")
        if failure:
            break
    millis = int((time.perf_counter() - start) * 1000)
    info = {**description, "instances": instances, "checked": checked}
    if failure is None:
        return LawReport(law, seed, info, "pass", None, millis)
    case, message = failure
    cx = {"law": law, "mutation": ctx.mutation, "message": message, **case.payload}
    return LawReport(law, seed, info, "fail", cx, millis)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise LawFailure(message)


def _docs(**objs) -> dict:
    return {"documents": {k: serialize(v) for k, v in objs.items()}}


def _bare(g: Graph) -> VoltageGraph:
    return VoltageGraph(g, grp.cyclic(1), (0,) * g.dart_count)


def _maps(f: gr.GraphMorphism) -> tuple:
    return (f.vmap, f.dmap)


def _sample(source, iterations: int | None, make: Callable[[InstanceGenerator], object]) -> Iterator:
    if isinstance(source, InstanceGenerator):
        for _ in range(iterations if iterations is not None else 20):
            yield make(source)
    else:
        yield from source


# --------------------------------------------------------------------------
# pullback universality


def pullback_case(x: VoltageGraph, b: VoltageGraph, v: Graph, ctx: LawContext) -> int:
    """Outer squares over ``ℓ(Γ)`` from ``v`` each have exactly one mediator."""
    x, b = ctx.prepare(x), ctx.prepare(b)
    f1, f2 = cons.voltage_morphism(x), cons.voltage_morphism(b)
    pb = gr.pullback(f1, f2)
    problem = gr.validate_graph(pb.apex)
    _require(problem is None, f"pullback apex is not a graph: {problem}")
    for leg in (pb.proj_left, pb.proj_right):
        problem = gr.validate_morphism(leg)
        _require(problem is None, f"pullback leg is not a morphism: {problem}")
    _require(
        _maps(gr.compose(pb.proj_left, f1)) == _maps(gr.compose(pb.proj_right, f2)),
        "pullback square does not commute",
    )
    mediators: dict[tuple, list[gr.GraphMorphism]] = {}
    for u in gr.enumerate_morphisms(v, pb.apex):
        key = (_maps(gr.compose(u, pb.proj_left)), _maps(gr.compose(u, pb.proj_right)))
        mediators.setdefault(key, []).append(u)
    squares = 0
    to_x = list(gr.enumerate_morphisms(v, x.graph))
    to_b = list(gr.enumerate_morphisms(v, b.graph))
    for vx in to_x:
        via_x = _maps(gr.compose(vx, f1))
        for vb in to_b:
            if _maps(gr.compose(vb, f2)) != via_x:
                continue
            squares += 1
            found = mediators.get((_maps(vx), _maps(vb)), [])
            _require(
                len(found) == 1,
                f"outer square vX={vx.vmap}/{vx.dmap}, vB={vb.vmap}/{vb.dmap} has "
                f"{len(found)} mediating morphisms",
            )
            _require(found[0] == gr.mediate(pb, vx, vb), "computed mediator differs from the unique one")
    _require(
        sum(len(us) for us in mediators.values()) == squares,
        "some morphism into the apex does not come from a commuting square",
    )
    return max(squares, 1)


def check_pullback_universality(
    gen: InstanceGenerator, iterations: int = 20, ctx: LawContext = LawContext()
) -> LawReport:
    small = [G for G in gen.groups if G.order <= 4] or list(gen.groups)

    def cases() -> Iterator[_Case]:
        for _ in range(iterations):
            G = small[gen.rng.randrange(len(small))]
            x, b = gen_voltage_graph(gen, G), gen_voltage_graph(gen, G)
            v_gen_max = (gen.max_vertices, gen.max_edges)
            gen.max_vertices, gen.max_edges = min(2, v_gen_max[0]), min(2, v_gen_max[1])
            v = gen_graph(gen)
            gen.max_vertices, gen.max_edges = v_gen_max
            yield _Case(_docs(x=x, b=b, v=_bare(v)), lambda x=x, b=b, v=v: pullback_case(x, b, v, ctx))

    desc = {"iterations": iterations, "groups": [G.name for G in small]}
    return _evaluate("pullback_universality", gen.seed, desc, cases(), ctx)


# --------------------------------------------------------------------------
# naturality of q


def naturality_case(h: GroupHom, ctx: LawContext) -> int:
    """``ℓ(h) ∘ q_Γ = q_Γ' ∘ K̊(h)`` dart by dart (vertices are trivial)."""
    G1 = h.source
    lhs = gr.compose(cons.q(G1), cons.ell_on_hom(h, check=False))
    rhs = gr.compose(cons.k_on_hom(h, check=False), cons.q(h.target))
    _require(lhs.vmap == rhs.vmap, "vertex components differ")
    for d, (a, b) in enumerate(zip(lhs.dmap, rhs.dmap)):
        u, v = divmod(d, G1.order)
        _require(a == b, f"ℓ(h)∘q ≠ q∘K̊(h) at dart ({u},{v}): {a} vs {b}")
    return 1


def _hom_payload(h: GroupHom) -> dict:
    return {
        "source": "\n".join(serialize_group(h.source)),
        "target": "\n".join(serialize_group(h.target)),
        "images": list(h.images),
    }


def check_naturality_q(groups: Sequence[FiniteGroup], ctx: LawContext = LawContext(), seed: int = 0) -> LawReport:
    def cases() -> Iterator[_Case]:
        for G1, G2 in itertools.product(groups, repeat=2):
            for h in grp.enumerate_homs(G1, G2):
                yield _Case(_hom_payload(h), lambda h=h: naturality_case(h, ctx))

    desc = {"groups": [G.name for G in groups]}
    return _evaluate("naturality_q", seed, desc, cases(), ctx)


# --------------------------------------------------------------------------
# counit universality and the hom-set bijection


def counit_case(lg: LabeledGraph, vg: VoltageGraph, ctx: LawContext) -> int:
    """Each ``m: L(lg) → vg`` factors through ``ε`` exactly once, as computed."""
    vg = ctx.prepare(vg)
    eps = cons.counit(vg)
    problem = cons.validate_volt_morphism(eps)
    _require(problem is None, f"counit is not a voltage morphism: {problem}")
    r = cons.functor_R(vg)
    volts = cons.enumerate_volt_morphisms(cons.functor_L(lg), vg, ctx.caps)
    labs = cons.enumerate_lab_morphisms(lg, r, ctx.caps)
    through: dict[tuple, list[cons.LabMorphism]] = {}
    for m in labs:
        tri = cons.compose_volt(cons.functor_L_on_morphism(m), eps)
        through.setdefault(tri.key(), []).append(m)
    volt_keys = {m.key() for m in volts}
    _require(set(through) <= volt_keys, "ε ∘ L(u, h) is not a morphism L(lg) → vg")
    for m in volts:
        found = through.get(m.key(), [])
        _require(len(found) == 1, f"voltage morphism {m.key()} has {len(found)} factorizations")
        u = cons.universal_factorization(lg, vg, m)
        _require(u.key() == found[0].key(), "universal_factorization differs from the unique factorization")
        tri = cons.compose_volt(cons.functor_L_on_morphism(u), eps)
        _require(tri.key() == m.key(), "triangle ε ∘ L(u, h) = (f, h) fails")
    return len(volts)


def _enum_pair(gen: InstanceGenerator, groups: Sequence[FiniteGroup], enum_vertices: int, enum_edges: int):
    saved = (gen.max_vertices, gen.max_edges)
    gen.max_vertices, gen.max_edges = enum_vertices, enum_edges
    try:
        lg = gen_labeled_graph(gen, groups[gen.rng.randrange(len(groups))])
        vg = gen_voltage_graph(gen, groups[gen.rng.randrange(len(groups))])
    finally:
        gen.max_vertices, gen.max_edges = saved
    return lg, vg


def check_counit_universal(
    gen: InstanceGenerator,
    iterations: int = 20,
    ctx: LawContext = LawContext(),
    enum_vertices: int = 3,
    enum_edges: int = 3,
) -> LawReport:
    small = [G for G in gen.groups if G.order <= ctx.caps.max_group_order] or [grp.cyclic(1)]

    def cases() -> Iterator[_Case]:
        for _ in range(iterations):
            lg, vg = _enum_pair(gen, small, enum_vertices, enum_edges)
            yield _Case(_docs(lg=lg, vg=vg), lambda lg=lg, vg=vg: counit_case(lg, vg, ctx))

    desc = {"iterations": iterations, "groups": [G.name for G in small]}
    report = _evaluate("counit_universal", gen.seed, desc, cases(), ctx)
    report.instance["triples"] = report.instance.pop("checked")
    return report


def hom_set_case(lg: LabeledGraph, vg: VoltageGraph, ctx: LawContext) -> int:
    """``|Volt(L(X), Y)| = |Lab(X, R(Y))|``."""
    vg = ctx.prepare(vg)
    volts = cons.enumerate_volt_morphisms(cons.functor_L(lg), vg, ctx.caps)
    labs = cons.enumerate_lab_morphisms(lg, cons.functor_R(vg), ctx.caps)
    _require(len(volts) == len(labs), f"|Volt(L(X),Y)| = {len(volts)} but |Lab(X,R(Y))| = {len(labs)}")
    return 1


def check_hom_set_bijection(
    gen: InstanceGenerator,
    iterations: int = 20,
    ctx: LawContext = LawContext(),
    enum_vertices: int = 3,
    enum_edges: int = 3,
) -> LawReport:
    small = [G for G in gen.groups if G.order <= ctx.caps.max_group_order] or [grp.cyclic(1)]

    def cases() -> Iterator[_Case]:
        for _ in range(iterations):
            lg, vg = _enum_pair(gen, small, enum_vertices, enum_edges)
            yield _Case(_docs(lg=lg, vg=vg), lambda lg=lg, vg=vg: hom_set_case(lg, vg, ctx))

    desc = {"iterations": iterations, "groups": [G.name for G in small]}
    return _evaluate("hom_set_bijection", gen.seed, desc, cases(), ctx)


# --------------------------------------------------------------------------
# derived graph = LR, coverings


def derived_iso_case(vg: VoltageGraph, ctx: LawContext) -> int:
    """``j: LR(vg) → vg^α`` is a Volt-isomorphism; sizes multiply by ``|Γ|``."""
    vg = ctx.prepare(vg)
    g, n = vg.graph, vg.group.order
    lift = cons.derived(vg)
    _require(lift.graph.vertex_count == g.vertex_count * n, "|V(derived)| != |V(G)|·|Γ|")
    _require(lift.graph.dart_count == g.dart_count * n, "|D(derived)| != |D(G)|·|Γ|")
    problem = gr.validate_graph(lift.graph) or cons._voltage_problem(lift)
    _require(problem is None, f"derived graph invalid: {problem}")
    j = cons.iso_j(vg)
    problem = cons.validate_volt_morphism(j)
    _require(problem is None, f"j is not a voltage morphism: {problem}")
    _require(gr.is_isomorphism(j.f), "j is not bijective")
    lr = j.domain
    for d in lr.graph.darts():
        _require(lr.alpha[d] == lift.alpha[j.f.dmap[d]], f"j does not preserve the voltage of dart {d}")
    back = cons.iso_j_inverse(vg)
    _require(gr.compose(j.f, back.f) == gr.identity(lr.graph), "j⁻¹ ∘ j is not the identity")
    _require(gr.compose(back.f, j.f) == gr.identity(lift.graph), "j ∘ j⁻¹ is not the identity")
    _require(gr.find_isomorphism(lr.graph, lift.graph) is not None, "no isomorphism LR(G) ≅ G^α found")
    return 1


def check_derived_iso(source, iterations: int | None = None, ctx: LawContext = LawContext(), seed: int = 0) -> LawReport:
    """``source`` is an :class:`InstanceGenerator` or an iterable of voltage graphs."""
    if isinstance(source, InstanceGenerator):
        seed = source.seed

    def cases() -> Iterator[_Case]:
        for vg in _sample(source, iterations, gen_voltage_graph):
            yield _Case(_docs(vg=vg), lambda vg=vg: derived_iso_case(vg, ctx))

    return _evaluate("derived_iso", seed, _describe(source, iterations), cases(), ctx)


def covering_case(vg: VoltageGraph, ctx: LawContext) -> int:
    """Counit leg and direct projection are coverings; both fibration tests agree."""
    vg = ctx.prepare(vg)
    eps = cons.counit(vg)
    p = cons.derived_projection(vg)
    for name, f in (("counit α*(q)", eps.f), ("projection p", p)):
        fib = gr.is_fibration(f)
        _require(fib == gr.is_fibration_by_pullback(f), f"{name}: fibration tests disagree")
        _require(fib, f"{name} is not a fibration")
        _require(gr.is_covering(f), f"{name} is not a covering")
    return 1


def q_fibration_case(G: FiniteGroup, ctx: LawContext) -> int:
    f = cons.q(G)
    _require(gr.is_fibration(f), f"q_{G.name} is not a fibration")
    _require(gr.is_fibration_by_pullback(f), f"q_{G.name} fails the pullback-square test")
    return 1


def check_covering(
    source, iterations: int | None = None, ctx: LawContext = LawContext(),
    groups: Sequence[FiniteGroup] | None = None, seed: int = 0,
) -> LawReport:
    if isinstance(source, InstanceGenerator):
        seed = source.seed
        groups = groups if groups is not None else source.groups

    def cases() -> Iterator[_Case]:
        for G in groups or ():
            yield _Case({"group": "\n".join(serialize_group(G))}, lambda G=G: q_fibration_case(G, ctx))
        for vg in _sample(source, iterations, gen_voltage_graph):
            yield _Case(_docs(vg=vg), lambda vg=vg: covering_case(vg, ctx))

    return _evaluate("covering", seed, _describe(source, iterations), cases(), ctx)


def _describe(source, iterations) -> dict:
    if isinstance(source, InstanceGenerator):
        return {
            "iterations": iterations,
            "max_vertices": source.max_vertices,
            "max_edges": source.max_edges,
            "groups": [G.name for G in source.groups],
        }
    return {"source": "fixed instance list"}


# --------------------------------------------------------------------------
# products


def group_product_case(G1: FiniteGroup, G2: FiniteGroup, ctx: LawContext) -> int:
    k = cons.k_ring_product_iso(G1, G2)
    _require(gr.is_isomorphism(k), f"K̊({G1.name}×{G2.name}) reindexing is not an isomorphism")
    e = cons.ell_product_iso(G1, G2)
    _require(gr.is_isomorphism(e), f"ℓ({G1.name}×{G2.name}) reindexing is not an isomorphism")
    return 1


def volt_product_case(v1: VoltageGraph, v2: VoltageGraph, ctx: LawContext) -> int:
    """``G1^α1 × G2^α2 ≅ (G1 × G2)^(α1 × α2)``."""
    v1, v2 = ctx.prepare(v1), ctx.prepare(v2)
    left = gr.product(cons.derived(v1).graph, cons.derived(v2).graph).apex
    right = cons.derived(cons.volt_product(v1, v2)).graph
    _require(gr.find_isomorphism(left, right) is not None, "product of lifts is not isomorphic to lift of product")
    return 1


def check_product_laws(
    groups: Sequence[FiniteGroup],
    graphs: Sequence[VoltageGraph] | None = None,
    ctx: LawContext = LawContext(),
    seed: int = 0,
) -> LawReport:
    if graphs is None:
        graphs = single_edge_voltage_graphs(groups)

    def cases() -> Iterator[_Case]:
        for G1, G2 in itertools.product(groups, repeat=2):
            payload = {"groups": ["\n".join(serialize_group(G1)), "\n".join(serialize_group(G2))]}
            yield _Case(payload, lambda G1=G1, G2=G2: group_product_case(G1, G2, ctx))
        for v1, v2 in itertools.product(graphs, repeat=2):
            yield _Case(_docs(v1=v1, v2=v2), lambda v1=v1, v2=v2: volt_product_case(v1, v2, ctx))

    desc = {"groups": [G.name for G in groups], "graphs": len(graphs)}
    return _evaluate("product_laws", seed, desc, cases(), ctx)


# --------------------------------------------------------------------------
# suite


@dataclass(frozen=True)
class LawConfig:
    seed: int = 42
    iterations: int = 30
    max_vertices: int = 6
    max_edges: int = 8
    groups: tuple[str, ...] = DEFAULT_PALETTE
    mutation: str | None = None
    caps: EnumerationCaps = DEFAULT_CAPS
    product_groups: tuple[str, ...] = ("Z2", "Z3")
    sweep: bool = False


def _law_seed(seed: int, law: str) -> int:
    return seed * 1_000_003 + zlib.crc32(law.encode())


def run_all(config: LawConfig = LawConfig()) -> list[LawReport]:
    """Run every law with seeds derived from ``config.seed``; reports sorted by law."""
    groups = palette(config.groups)
    ctx = LawContext(config.mutation, config.caps)

    def gen(law: str) -> InstanceGenerator:
        return InstanceGenerator(
            seed=_law_seed(config.seed, law),
            max_vertices=config.max_vertices,
            max_edges=config.max_edges,
            groups=groups,
        )

    it = config.iterations
    reports = []
    with mutation_context(config.mutation):
        reports.append(check_pullback_universality(gen("pullback_universality"), it, ctx))
        reports.append(check_naturality_q(groups, ctx, seed=config.seed))
        reports.append(check_counit_universal(gen("counit_universal"), it, ctx))
        reports.append(check_hom_set_bijection(gen("hom_set_bijection"), it, ctx))
        derived_source: object = gen("derived_iso")
        covering_source: object = gen("covering")
        if config.sweep:
            sweep_groups = [G for G in groups if G.order <= 4]
            derived_source = itertools.chain(
                edge_kind_sweep(sweep_groups, seed=config.seed),
                (gen_voltage_graph(derived_source) for _ in range(it)),  # type: ignore[arg-type]
            )
            covering_source = itertools.chain(
                edge_kind_sweep(sweep_groups, seed=config.seed),
                (gen_voltage_graph(covering_source) for _ in range(it)),  # type: ignore[arg-type]
            )
        report = check_derived_iso(derived_source, it, ctx, seed=config.seed)
        reports.append(report)
        reports.append(check_covering(covering_source, it, ctx, groups=groups, seed=config.seed))
        reports.append(check_product_laws(palette(config.product_groups), ctx=ctx, seed=config.seed))
    for r in reports:
        r.seed = config.seed
    return sorted(reports, key=lambda r: r.law)


# --------------------------------------------------------------------------
# replay


def _vg(text: str) -> VoltageGraph:
    obj = parse(text)
    if not isinstance(obj, VoltageGraph):
        raise ValueError("expected a voltage-graph document")
    return obj


def _lg(text: str) -> LabeledGraph:
    obj = parse(text)
    if not isinstance(obj, LabeledGraph):
        raise ValueError("expected a labelled-graph document")
    return obj


def _run_counterexample(cx: dict, ctx: LawContext) -> int:
    law = cx["law"]
    docs = cx.get("documents", {})
    if law == "pullback_universality":
        return pullback_case(_vg(docs["x"]), _vg(docs["b"]), _vg(docs["v"]).graph, ctx)
    if law == "naturality_q":
        h = GroupHom(parse_group(cx["source"]), parse_group(cx["target"]), cx["images"], check=False)
        return naturality_case(h, ctx)
    if law == "counit_universal":
        return counit_case(_lg(docs["lg"]), _vg(docs["vg"]), ctx)
    if law == "hom_set_bijection":
        return hom_set_case(_lg(docs["lg"]), _vg(docs["vg"]), ctx)
    if law == "derived_iso":
        return derived_iso_case(_vg(docs["vg"]), ctx)
    if law == "covering":
        if "group" in cx:
            return q_fibration_case(parse_group(cx["group"]), ctx)
        return covering_case(_vg(docs["vg"]), ctx)
    if law == "product_laws":
        if "groups" in cx:
            G1, G2 = (parse_group(t) for t in cx["groups"])
            return group_product_case(G1, G2, ctx)
        return volt_product_case(_vg(docs["v1"]), _vg(docs["v2"]), ctx)
    raise ValueError(f"unknown law {law!r}")


def replay(counterexample: dict, caps: EnumerationCaps = DEFAULT_CAPS) -> str | None:
    """Re-run a recorded counterexample; return the failure message or ``None``."""
    mutation = counterexample.get("mutation")
    ctx = LawContext(mutation, caps)
    with mutation_context(mutation):
        try:
            _run_counterexample(counterexample, ctx)
        except LawFailure as exc:
            return str(exc)
        except Exception as exc:
            return f"{type(exc).__name__}: {exc}"
    return None
