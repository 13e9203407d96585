"""Graphs as symmetric multidigraphs.

A graph is a set of vertices ``0..n-1`` and darts ``0..m-1`` with source and
target maps and a dart-reversing involution ``lam``.  Edges are the orbits of
``lam``: a fixed dart is a semiedge, a swapped pair with equal endpoints is a
loop, anything else a link.
"""

from __future__ import annotations

import enum
import itertools
import math
from collections import deque
from dataclasses import InitVar, dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

__all__ = [
    "GraphError",
    "SizeCapError",
    "EdgeKind",
    "Graph",
    "GraphMorphism",
    "PullbackResult",
    "GraphStats",
    "build_graph",
    "cycle_graph",
    "terminal_graph",
    "validate_graph",
    "classify_edge",
    "edges",
    "validate_morphism",
    "identity",
    "compose",
    "is_isomorphism",
    "inverse",
    "to_terminal",
    "pullback",
    "mediate",
    "product",
    "enumerate_morphisms",
    "find_isomorphism",
    "in_neighbourhood",
    "is_fibration",
    "is_fibration_by_pullback",
    "is_covering",
    "graph_stats",
]

DEFAULT_ISO_CAP = 64


class GraphError(ValueError):
    pass


class SizeCapError(ValueError):
    pass


class EdgeKind(enum.Enum):
    SEMIEDGE = "semiedge"
    LOOP = "loop"
    LINK = "link"


@dataclass(frozen=True)
class Graph:
    """Finite graph ``(V, D, s, t, λ)`` on dense integer ids.

    Constructing a ``Graph`` validates the axioms unless ``check=False``.
    Display names do not take part in equality.
    """

    vertex_count: int
    src: tuple[int, ...]
    tgt: tuple[int, ...]
    lam: tuple[int, ...]
    vertex_names: tuple[str, ...] | None = field(default=None, compare=False)
    dart_names: tuple[str, ...] | None = field(default=None, compare=False)
    check: InitVar[bool] = True

    def __post_init__(self, check: bool) -> None:
        for name in ("src", "tgt", "lam"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if self.vertex_names is not None:
            object.__setattr__(self, "vertex_names", tuple(self.vertex_names))
        if self.dart_names is not None:
            object.__setattr__(self, "dart_names", tuple(self.dart_names))
        if check:
            problem = validate_graph(self)
            if problem:
                raise GraphError(problem)

    @property
    def dart_count(self) -> int:
        return len(self.src)

    def vertices(self) -> range:
        return range(self.vertex_count)

    def darts(self) -> range:
        return range(len(self.src))

    def vertex_name(self, v: int) -> str:
        if self.vertex_names is not None:
            return self.vertex_names[v]
        return f"v{v}"

    def with_names(self, vertex_names: Sequence[str] | None) -> "Graph":
        return Graph(
            self.vertex_count, self.src, self.tgt, self.lam,
            vertex_names=tuple(vertex_names) if vertex_names is not None else None,
            dart_names=self.dart_names, check=False,
        )

    def __repr__(self) -> str:
        return f"Graph(|V|={self.vertex_count}, |D|={self.dart_count})"


def validate_graph(g: Graph) -> str | None:
    """Return the first violated graph axiom, or ``None`` if ``g`` is a graph."""
    n, m = g.vertex_count, len(g.src)
    if n < 0:
        return "totality: negative vertex count"
    if len(g.tgt) != m or len(g.lam) != m:
        return f"totality: src/tgt/lam have lengths {m}/{len(g.tgt)}/{len(g.lam)}"
    for d in range(m):
        if not (0 <= g.src[d] < n and 0 <= g.tgt[d] < n):
            return f"totality: dart {d} has an endpoint outside 0..{n - 1}"
        if not 0 <= g.lam[d] < m:
            return f"totality: λ({d}) = {g.lam[d]} is not a dart"
    if g.vertex_names is not None and len(g.vertex_names) != n:
        return "totality: wrong number of vertex names"
    for d in range(m):
        if g.lam[g.lam[d]] != d:
            return f"involution: λ(λ({d})) = {g.lam[g.lam[d]]} != {d}"
    for d in range(m):
        if g.src[g.lam[d]] != g.tgt[d]:
            return f"s∘λ≠t at dart {d}: s(λ({d})) = {g.src[g.lam[d]]}, t({d}) = {g.tgt[d]}"
    return None


def _kind(kind: EdgeKind | str) -> EdgeKind:
    return kind if isinstance(kind, EdgeKind) else EdgeKind(kind)


def build_graph(
    vertex_count: int,
    edge_spec: Iterable[tuple[EdgeKind | str, Sequence[int]]],
    vertex_names: Sequence[str] | None = None,
) -> Graph:
    """Build a graph from a list of ``(kind, endpoints)`` edges.

    Links take two distinct endpoints, loops and semiedges one.  Darts are
    numbered in insertion order; a link ``u v`` gets the dart ``u → v``
    first and its reverse second.
    """
    src: list[int] = []
    tgt: list[int] = []
    lam: list[int] = []
    for i, (kind, ends) in enumerate(edge_spec):
        kind = _kind(kind)
        ends = tuple(ends)
        for v in ends:
            if not (isinstance(v, int) and 0 <= v < vertex_count):
                raise GraphError(f"edge {i}: invalid vertex id {v!r}")
        d = len(src)
        if kind is EdgeKind.LINK:
            if len(ends) != 2:
                raise GraphError(f"edge {i}: a link needs two endpoints")
            u, v = ends
            if u == v:
                raise GraphError(f"edge {i}: a link needs distinct endpoints, got {u} twice")
            src += [u, v]
            tgt += [v, u]
            lam += [d + 1, d]
        else:
            if len(ends) != 1:
                raise GraphError(f"edge {i}: a {kind.value} needs one endpoint")
            (u,) = ends
            if kind is EdgeKind.LOOP:
                src += [u, u]
                tgt += [u, u]
                lam += [d + 1, d]
            else:
                src.append(u)
                tgt.append(u)
                lam.append(d)
    return Graph(vertex_count, src, tgt, lam, vertex_names=vertex_names)


def cycle_graph(n: int) -> Graph:
    """The n-cycle built from links (n >= 3)."""
    if n < 3:
        raise GraphError("a simple cycle needs at least 3 vertices")
    return build_graph(n, [(EdgeKind.LINK, (i, (i + 1) % n)) for i in range(n)])


def terminal_graph() -> Graph:
    """One vertex carrying one semiedge: every graph maps to it uniquely."""
    return Graph(1, (0,), (0,), (0,))


def classify_edge(g: Graph, d: int) -> EdgeKind:
    if not 0 <= d < g.dart_count:
        raise GraphError(f"invalid dart id {d}")
    if g.lam[d] == d:
        return EdgeKind.SEMIEDGE
    if g.src[d] == g.tgt[d]:
        return EdgeKind.LOOP
    return EdgeKind.LINK


def edges(g: Graph) -> list[tuple[int, ...]]:
    """λ-orbits ordered by their least dart."""
    out = []
    for d in g.darts():
        e = g.lam[d]
        if e == d:
            out.append((d,))
        elif d < e:
            out.append((d, e))
    return out


@dataclass(frozen=True)
class GraphMorphism:
    domain: Graph
    codomain: Graph
    vmap: tuple[int, ...]
    dmap: tuple[int, ...]
    check: InitVar[bool] = True

    def __post_init__(self, check: bool) -> None:
        object.__setattr__(self, "vmap", tuple(self.vmap))
        object.__setattr__(self, "dmap", tuple(self.dmap))
        if check:
            problem = validate_morphism(self)
            if problem:
                raise GraphError(problem)

    def __repr__(self) -> str:
        return f"GraphMorphism({self.domain!r} -> {self.codomain!r}, vmap={self.vmap}, dmap={self.dmap})"


def validate_morphism(f: GraphMorphism) -> str | None:
    g, h = f.domain, f.codomain
    if len(f.vmap) != g.vertex_count or len(f.dmap) != g.dart_count:
        return "vmap/dmap are not total on the domain"
    if any(not 0 <= w < h.vertex_count for w in f.vmap):
        return "vmap leaves the codomain"
    if any(not 0 <= e < h.dart_count for e in f.dmap):
        return "dmap leaves the codomain"
    for d in g.darts():
        e = f.dmap[d]
        if h.src[e] != f.vmap[g.src[d]]:
            return f"source condition fails at dart {d}"
        if h.tgt[e] != f.vmap[g.tgt[d]]:
            return f"target condition fails at dart {d}"
        if h.lam[e] != f.dmap[g.lam[d]]:
            return f"λ condition fails at dart {d}"
    return None


def identity(g: Graph) -> GraphMorphism:
    return GraphMorphism(g, g, tuple(g.vertices()), tuple(g.darts()), check=False)


def compose(f: GraphMorphism, g: GraphMorphism) -> GraphMorphism:
    """``g ∘ f``: apply ``f`` first, then ``g``."""
    if f.codomain != g.domain:
        raise GraphError("morphisms are not composable: codomain(f) != domain(g)")
    return GraphMorphism(
        f.domain,
        g.codomain,
        tuple(g.vmap[v] for v in f.vmap),
        tuple(g.dmap[d] for d in f.dmap),
        check=False,
    )


def is_isomorphism(f: GraphMorphism) -> bool:
    return (
        validate_morphism(f) is None
        and f.domain.vertex_count == f.codomain.vertex_count
        and f.domain.dart_count == f.codomain.dart_count
        and len(set(f.vmap)) == len(f.vmap)
        and len(set(f.dmap)) == len(f.dmap)
    )


def inverse(f: GraphMorphism) -> GraphMorphism:
    if not is_isomorphism(f):
        raise GraphError("only isomorphisms have inverses")
    vinv = [0] * len(f.vmap)
    dinv = [0] * len(f.dmap)
    for v, w in enumerate(f.vmap):
        vinv[w] = v
    for d, e in enumerate(f.dmap):
        dinv[e] = d
    return GraphMorphism(f.codomain, f.domain, vinv, dinv)


def to_terminal(g: Graph) -> GraphMorphism:
    return GraphMorphism(g, terminal_graph(), (0,) * g.vertex_count, (0,) * g.dart_count)


# --------------------------------------------------------------------------
# pullbacks


@dataclass(frozen=True)
class PullbackResult:
    """Apex of a pullback square plus its two legs and the pair indexing.

    ``vertex_index[i]`` is the (left, right) vertex pair behind apex vertex
    ``i``; ``vertex_id`` is the inverse lookup.  Darts likewise.
    """

    apex: Graph
    proj_left: GraphMorphism
    proj_right: GraphMorphism
    vertex_index: tuple[tuple[int, int], ...]
    dart_index: tuple[tuple[int, int], ...]
    vertex_id: dict = field(compare=False, repr=False, hash=False, default_factory=dict)
    dart_id: dict = field(compare=False, repr=False, hash=False, default_factory=dict)


def _pullback_pairs(
    f1: GraphMorphism, f2: GraphMorphism
) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Vertex and dart pairs agreeing in the common codomain, lexicographic."""
    vbucket: dict[int, list[int]] = {}
    for v2, w in enumerate(f2.vmap):
        vbucket.setdefault(w, []).append(v2)
    dbucket: dict[int, list[int]] = {}
    for d2, e in enumerate(f2.dmap):
        dbucket.setdefault(e, []).append(d2)
    vpairs = [(v1, v2) for v1, w in enumerate(f1.vmap) for v2 in vbucket.get(w, ())]
    dpairs = [(d1, d2) for d1, e in enumerate(f1.dmap) for d2 in dbucket.get(e, ())]
    return vpairs, dpairs


def pullback(f1: GraphMorphism, f2: GraphMorphism) -> PullbackResult:
    """Pointwise pullback of the cospan ``G1 --f1--> H <--f2-- G2``.

    Vertices are the pairs ``(v1, v2)`` with ``f1(v1) = f2(v2)`` and darts
    likewise; structure maps act componentwise.  ``proj_left`` goes to
    ``G1`` and ``proj_right`` to ``G2``.
    """
    if f1.codomain != f2.codomain:
        raise GraphError("pullback needs a cospan: the codomains differ")
    g1, g2 = f1.domain, f2.domain
    vpairs, dpairs = _pullback_pairs(f1, f2)
    vid = {p: i for i, p in enumerate(vpairs)}
    did = {p: i for i, p in enumerate(dpairs)}
    src = [vid[(g1.src[a], g2.src[b])] for a, b in dpairs]
    tgt = [vid[(g1.tgt[a], g2.tgt[b])] for a, b in dpairs]
    lam = [did[(g1.lam[a], g2.lam[b])] for a, b in dpairs]
    names = [f"({g1.vertex_name(a)},{g2.vertex_name(b)})" for a, b in vpairs]
    apex = Graph(len(vpairs), src, tgt, lam, vertex_names=names)
    left = GraphMorphism(apex, g1, [a for a, _ in vpairs], [a for a, _ in dpairs])
    right = GraphMorphism(apex, g2, [b for _, b in vpairs], [b for _, b in dpairs])
    return PullbackResult(apex, left, right, tuple(vpairs), tuple(dpairs), vid, did)


def mediate(pb: PullbackResult, to_left: GraphMorphism, to_right: GraphMorphism) -> GraphMorphism:
    """The unique morphism into the apex induced by a commuting outer square."""
    if to_left.domain != to_right.domain:
        raise GraphError("mediate needs two morphisms out of the same graph")
    if to_left.codomain != pb.proj_left.codomain or to_right.codomain != pb.proj_right.codomain:
        raise GraphError("mediate: morphisms do not land in the pullback's legs")
    try:
        vmap = [pb.vertex_id[p] for p in zip(to_left.vmap, to_right.vmap)]
        dmap = [pb.dart_id[p] for p in zip(to_left.dmap, to_right.dmap)]
    except KeyError as exc:
        raise GraphError(f"outer square does not commute at pair {exc.args[0]}") from None
    return GraphMorphism(to_left.domain, pb.apex, vmap, dmap)


def product(g1: Graph, g2: Graph) -> PullbackResult:
    """Categorical product, i.e. the pullback over the terminal graph."""
    return pullback(to_terminal(g1), to_terminal(g2))


# --------------------------------------------------------------------------
# morphism enumeration


def _search_order(g: Graph) -> list[int]:
    """Vertices in BFS order so each new vertex tends to touch placed ones."""
    adj: list[set[int]] = [set() for _ in g.vertices()]
    for d in g.darts():
        adj[g.src[d]].add(g.tgt[d])
    seen: set[int] = set()
    order: list[int] = []
    for start in g.vertices():
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(adj[v]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def enumerate_morphisms(
    g: Graph,
    h: Graph,
    vertex_ok: Callable[[int, int], bool] | None = None,
    dart_ok: Callable[[int, int], bool] | None = None,
) -> Iterator[GraphMorphism]:
    """Every graph morphism ``g → h`` passing the optional filters.

    Given the vertex map, each λ-orbit of ``g`` chooses its image
    independently, so the search backtracks over vertices only and then
    takes a product of per-orbit choices.
    """
    bucket: dict[tuple[int, int], list[int]] = {}
    for e in h.darts():
        bucket.setdefault((h.src[e], h.tgt[e]), []).append(e)
    orbits = edges(g)
    order = _search_order(g)
    position = {v: i for i, v in enumerate(order)}
    # orbit becomes checkable once both endpoints are placed
    ready: list[list[tuple[int, ...]]] = [[] for _ in order]
    for orb in orbits:
        d = orb[0]
        ready[max(position[g.src[d]], position[g.tgt[d]])].append(orb)

    def choices(orb: tuple[int, ...], vmap: list[int]) -> list[int]:
        d = orb[0]
        out = []
        for e in bucket.get((vmap[g.src[d]], vmap[g.tgt[d]]), ()):
            if len(orb) == 1 and h.lam[e] != e:
                continue
            if dart_ok is not None and not (dart_ok(d, e) and dart_ok(g.lam[d], h.lam[e])):
                continue
            out.append(e)
        return out

    vmap = [-1] * g.vertex_count

    def extend(i: int) -> Iterator[list[list[int]]]:
        if i == len(order):
            yield []
            return
        v = order[i]
        for w in h.vertices():
            if vertex_ok is not None and not vertex_ok(v, w):
                continue
            vmap[v] = w
            opts = [choices(orb, vmap) for orb in ready[i]]
            if all(opts):
                for rest in extend(i + 1):
                    yield opts + rest
            vmap[v] = -1

    flat_orbits = [orb for i in range(len(order)) for orb in ready[i]]
    for per_orbit in extend(0):
        vm = tuple(vmap)
        for pick in itertools.product(*per_orbit):
            dmap = [0] * g.dart_count
            for orb, e in zip(flat_orbits, pick):
                dmap[orb[0]] = e
                if len(orb) == 2:
                    dmap[orb[1]] = h.lam[e]
            yield GraphMorphism(g, h, vm, dmap, check=False)


# --------------------------------------------------------------------------
# isomorphism


def _multiplicities(g: Graph) -> tuple[list[dict[int, int]], list[int], list[int]]:
    out: list[dict[int, int]] = [dict() for _ in g.vertices()]
    semi = [0] * g.vertex_count
    loop = [0] * g.vertex_count
    for d in g.darts():
        u, w = g.src[d], g.tgt[d]
        if g.lam[d] == d:
            semi[u] += 1
        elif u == w:
            loop[u] += 1
        else:
            out[u][w] = out[u].get(w, 0) + 1
    return out, semi, loop


def _refine(
    graphs: list[tuple[list[dict[int, int]], list[int], list[int]]]
) -> list[list[int]] | None:
    """Joint colour refinement; ``None`` if the colour histograms ever differ."""
    colours = []
    for out, semi, loop in graphs:
        colours.append(
            [(semi[v], loop[v], sum(out[v].values())) for v in range(len(semi))]
        )
    classes = -1
    while True:
        palette = sorted({c for cs in colours for c in cs})
        index = {c: i for i, c in enumerate(palette)}
        colours = [[index[c] for c in cs] for cs in colours]
        hists = [sorted(cs) for cs in colours]
        if any(hh != hists[0] for hh in hists[1:]):
            return None
        if len(palette) == classes:
            return colours
        classes = len(palette)
        colours = [
            [
                (cs[v], tuple(sorted((cs[w], k) for w, k in out[v].items())))
                for v in range(len(cs))
            ]
            for cs, (out, _, _) in zip(colours, graphs)
        ]


def find_isomorphism(
    g1: Graph, g2: Graph, max_vertices: int = DEFAULT_ISO_CAP
) -> GraphMorphism | None:
    """Return a graph isomorphism ``g1 → g2`` or ``None``.

    Backtracks over vertex assignments pruned by colour refinement (seeded by
    degree, semiedge and loop counts) and pairwise dart multiplicities; the
    dart map is then read off orbit by orbit.
    """
    if max(g1.vertex_count, g2.vertex_count) > max_vertices:
        raise SizeCapError(
            f"isomorphism search capped at {max_vertices} vertices "
            f"(got {g1.vertex_count} and {g2.vertex_count})"
        )
    if g1.vertex_count != g2.vertex_count or g1.dart_count != g2.dart_count:
        return None
    m1, m2 = _multiplicities(g1), _multiplicities(g2)
    colours = _refine([m1, m2])
    if colours is None:
        return None
    c1, c2 = colours
    out1, out2 = m1[0], m2[0]

    by_colour: dict[int, list[int]] = {}
    for w in g2.vertices():
        by_colour.setdefault(c2[w], []).append(w)
    # rarest colour classes first, then BFS from there
    order = sorted(_search_order(g1), key=lambda v: len(by_colour[c1[v]]))
    order = _bfs_from(g1, out1, order)

    phi = [-1] * g1.vertex_count
    used = [False] * g2.vertex_count
    placed: list[int] = []

    def consistent(v: int, w: int) -> bool:
        for a in placed:
            if out1[v].get(a, 0) != out2[w].get(phi[a], 0):
                return False
        return True

    def search(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in by_colour[c1[v]]:
            if used[w] or not consistent(v, w):
                continue
            phi[v] = w
            used[w] = True
            placed.append(v)
            if search(i + 1):
                return True
            placed.pop()
            used[w] = False
            phi[v] = -1
        return False

    if not search(0):
        return None
    return GraphMorphism(g1, g2, phi, _darts_for(g1, g2, phi))


def _bfs_from(g: Graph, out: list[dict[int, int]], seeds: list[int]) -> list[int]:
    seen: set[int] = set()
    order = []
    for s in seeds:
        if s in seen:
            continue
        seen.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(out[v]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def _darts_for(g1: Graph, g2: Graph, phi: Sequence[int]) -> list[int]:
    def groups(g: Graph) -> dict[tuple, list[int]]:
        table: dict[tuple, list[int]] = {}
        for d in g.darts():
            e = g.lam[d]
            u, w = g.src[d], g.tgt[d]
            if e == d:
                table.setdefault(("semi", u), []).append(d)
            elif u == w:
                if d < e:
                    table.setdefault(("loop", u), []).append(d)
            else:
                table.setdefault(("link", u, w), []).append(d)
        return table

    t1, t2 = groups(g1), groups(g2)
    dmap = [-1] * g1.dart_count
    for key, ds in t1.items():
        if key[0] == "link":
            _, u, w = key
            if u > w:
                continue
            a, b = phi[u], phi[w]
            # pair the forward darts of the smaller endpoint, reverses follow
            targets = t2[("link", a, b)]
            for d, e in zip(ds, targets):
                dmap[d] = e
                dmap[g1.lam[d]] = g2.lam[e]
        else:
            targets = t2[(key[0], phi[key[1]])]
            for d, e in zip(ds, targets):
                dmap[d] = e
                dmap[g1.lam[d]] = g2.lam[e]
    return dmap


# --------------------------------------------------------------------------
# fibrations and coverings


def in_neighbourhood(g: Graph, v: int) -> tuple[int, ...]:
    """Darts with target ``v``."""
    if not 0 <= v < g.vertex_count:
        raise GraphError(f"invalid vertex id {v}")
    return tuple(d for d in g.darts() if g.tgt[d] == v)


def _require_valid(f: GraphMorphism) -> None:
    problem = validate_morphism(f)
    if problem:
        raise GraphError(f"invalid morphism: {problem}")


def _neighbourhoods(g: Graph) -> list[list[int]]:
    nbhd: list[list[int]] = [[] for _ in g.vertices()]
    for d in g.darts():
        nbhd[g.tgt[d]].append(d)
    return nbhd


def is_fibration(f: GraphMorphism) -> bool:
    """True iff ``f`` maps every in-neighbourhood bijectively onto the image's."""
    _require_valid(f)
    n_dom = _neighbourhoods(f.domain)
    n_cod = _neighbourhoods(f.codomain)
    for v in f.domain.vertices():
        images = sorted(f.dmap[d] for d in n_dom[v])
        if images != n_cod[f.vmap[v]]:
            return False
    return True


def is_fibration_by_pullback(f: GraphMorphism) -> bool:
    """Same predicate via the square ``t, f^D, f^V, t`` being a pullback of sets.

    The comparison map ``d ↦ (t(d), f^D(d))`` into
    ``V(G) ×_{V(G')} D(G')`` must be a bijection.
    """
    _require_valid(f)
    g, h = f.domain, f.codomain
    hits = {(g.tgt[d], f.dmap[d]) for d in g.darts()}
    if len(hits) != g.dart_count:
        return False
    indeg = [0] * h.vertex_count
    for e in h.darts():
        indeg[h.tgt[e]] += 1
    pairs = sum(indeg[f.vmap[v]] for v in g.vertices())
    return pairs == g.dart_count


def is_covering(f: GraphMorphism) -> bool:
    return is_fibration(f) and set(f.vmap) == set(f.codomain.vertices())


# --------------------------------------------------------------------------
# statistics


@dataclass(frozen=True)
class GraphStats:
    vertices: int
    darts: int
    edges: int
    semiedges: int
    loops: int
    links: int
    degrees: tuple[int, ...]
    components: int
    diameter: float

    @property
    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees, reverse=True))

    @property
    def regular_degree(self) -> int | None:
        return self.degrees[0] if self.degrees and len(set(self.degrees)) == 1 else None


def graph_stats(g: Graph) -> GraphStats:
    """Counts by edge kind, degrees, components and diameter.

    Degree counts darts by source, so a loop adds 2 and a semiedge 1.  Only
    links create adjacency; the diameter of a disconnected graph is ``inf``.
    """
    orbits = edges(g)
    kinds = [classify_edge(g, orb[0]) for orb in orbits]
    degrees = [0] * g.vertex_count
    adj: list[set[int]] = [set() for _ in g.vertices()]
    for d in g.darts():
        degrees[g.src[d]] += 1
        if g.src[d] != g.tgt[d]:
            adj[g.src[d]].add(g.tgt[d])

    components = 0
    seen = [False] * g.vertex_count
    for s in g.vertices():
        if not seen[s]:
            components += 1
            seen[s] = True
            stack = [s]
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)

    diameter: float = 0
    if components > 1:
        diameter = math.inf
    else:
        for s in g.vertices():
            dist = {s: 0}
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for w in adj[v]:
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        queue.append(w)
            diameter = max(diameter, max(dist.values()))

    return GraphStats(
        vertices=g.vertex_count,
        darts=g.dart_count,
        edges=len(orbits),
        semiedges=kinds.count(EdgeKind.SEMIEDGE),
        loops=kinds.count(EdgeKind.LOOP),
        links=kinds.count(EdgeKind.LINK),
        degrees=tuple(degrees),
        components=components,
        diameter=diameter,
    )
