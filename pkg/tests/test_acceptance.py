"""Acceptance criteria 1-11.

Each criterion is a function returning ``(passed, detail)``.  Under pytest
every criterion is a test that prints one PASS/FAIL line; run the module
directly (``python3 -m tests.test_acceptance``) for the plain summary.
All checks are exact; the wall-clock budgets are asserted as stated.
"""

from __future__ import annotations

import itertools
import json
import math
import subprocess
import sys
import time
from functools import lru_cache
from pathlib import Path

import pytest

from voltgraph import constructions as cons
from voltgraph import graph as gr
from voltgraph import laws
from voltgraph.groups import cyclic, direct_product
from voltgraph.io import parse, read_document, serialize
from voltgraph.laws import InstanceGenerator, LawConfig, LawContext, edge_kind_sweep, replay, run_all
from voltgraph.mutations import MUTATIONS

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
SWEEP_GROUPS = (cyclic(2), cyclic(3), cyclic(4), direct_product(cyclic(2), cyclic(2)))
PALETTE = laws.palette(laws.DEFAULT_PALETTE)


@lru_cache(maxsize=1)
def sweep() -> tuple:
    return tuple(edge_kind_sweep(SWEEP_GROUPS, max_vertices=4, max_edges=5, placements=2, seed=0))


def _timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def criterion_1():
    """LR(G) ≅ G^α on the exhaustive edge-kind sweep."""
    def body():
        for vg in sweep():
            j = cons.iso_j(vg)
            if cons.validate_volt_morphism(j) is not None or not gr.is_isomorphism(j.f):
                return vg, "iso_j invalid"
            if gr.find_isomorphism(j.domain.graph, cons.derived(vg).graph) is None:
                return vg, "find_isomorphism found no LR(G) ≅ G^α"
        return None, ""

    (bad, why), secs = _timed(body)
    detail = f"{len(sweep())} instances in {secs:.2f}s (budget 30s)"
    if bad is not None:
        return False, f"{why} on\n{serialize(bad)}"
    return secs < 30, detail


def criterion_2():
    """Counit universality on ≥ 200 triples, uniqueness count exactly 1."""
    gen = InstanceGenerator(seed=2, groups=PALETTE)
    report, secs = _timed(lambda: laws.check_counit_universal(gen, iterations=150))
    triples = report.instance["triples"]
    ok = report.passed and triples >= 200 and secs < 60
    msg = report.counterexample["message"] if report.counterexample else ""
    return ok, f"{triples} triples over {report.instance['instances']} (lg, vg) pairs in {secs:.2f}s {msg}"


def criterion_3():
    """|Volt(L(X),Y)| = |Lab(X,R(Y))| on ≥ 50 pairs."""
    gen = InstanceGenerator(seed=3, groups=PALETTE)
    report, secs = _timed(lambda: laws.check_hom_set_bijection(gen, iterations=60))
    pairs = report.instance["instances"]
    return report.passed and pairs >= 50 and secs < 60, f"{pairs} pairs in {secs:.2f}s"


def criterion_4():
    """Naturality of q for every hom between Z1..Z6."""
    groups = [cyclic(n) for n in range(1, 7)]
    report, secs = _timed(lambda: laws.check_naturality_q(groups))
    homs = report.instance["instances"]
    # |Hom(Z_m, Z_n)| = gcd(m, n), summed over the 36 ordered pairs
    expected = sum(math.gcd(m, n) for m in range(1, 7) for n in range(1, 7))
    return report.passed and homs == expected and secs < 5, f"{homs}/{expected} homs in {secs:.2f}s"


def criterion_5():
    """Derived projection is a covering on the sweep; q_Γ is a fibration on the palette."""
    report, secs = _timed(lambda: laws.check_covering(sweep(), groups=PALETTE))
    ok = report.passed and report.instance["instances"] == len(sweep()) + len(PALETTE) and secs < 10
    return ok, f"{report.instance['instances']} cases in {secs:.2f}s"


def criterion_6():
    """Product law for all pairs of single-edge voltage graphs over Z2 and Z3."""
    groups = [cyclic(2), cyclic(3)]
    graphs = laws.single_edge_voltage_graphs(groups)

    def body():
        ctx = LawContext()
        largest = 0
        for v1, v2 in itertools.product(graphs, repeat=2):
            laws.volt_product_case(v1, v2, ctx)
            largest = max(largest, cons.derived(cons.volt_product(v1, v2)).graph.vertex_count)
        return largest

    try:
        largest, secs = _timed(body)
    except laws.LawFailure as exc:
        return False, str(exc)
    return secs < 10, f"{len(graphs) ** 2} pairs, largest lift {largest} vertices, {secs:.2f}s"


def criterion_7():
    """Reindexing isos K̊(Γ1×Γ2) ≅ K̊(Γ1)×K̊(Γ2) and ℓ likewise."""
    def body():
        for G1, G2 in itertools.product([cyclic(2), cyclic(3)], repeat=2):
            k, e = cons.k_ring_product_iso(G1, G2), cons.ell_product_iso(G1, G2)
            if not (gr.validate_morphism(k) is None and gr.is_isomorphism(k)):
                return False
            if not (gr.validate_morphism(e) is None and gr.is_isomorphism(e)):
                return False
        return True

    ok, secs = _timed(body)
    return ok and secs < 5, f"4 group pairs in {secs:.3f}s"


def criterion_8():
    """Loop over Z_n → n-cycle (n = 3..12); dumbbell over Z5 → Petersen."""
    def body():
        loop = gr.build_graph(1, [("loop", (0,))])
        for n in range(3, 13):
            lift = cons.derived(cons.voltage_graph(loop, cyclic(n), [1])).graph
            if gr.find_isomorphism(lift, gr.cycle_graph(n)) is None:
                return f"Z{n} loop lift is not C{n}"
        lift = cons.derived(read_document(str(FIXTURES / "dumbbell_z5.vg"))).graph
        s = gr.graph_stats(lift)
        if (s.vertices, s.edges, s.regular_degree, s.diameter) != (10, 15, 3, 2):
            return f"dumbbell lift stats {s}"
        if gr.find_isomorphism(lift, read_document(str(FIXTURES / "petersen.vg")).graph) is None:
            return "dumbbell lift not isomorphic to the stored Petersen graph"
        return ""

    why, secs = _timed(body)
    return not why and secs < 5, why or f"cycles C3..C12 and Petersen confirmed in {secs:.2f}s"


def criterion_9():
    """Size laws on the sweep plus a random batch over the full palette."""
    gen = InstanceGenerator(seed=9, max_vertices=6, max_edges=8, groups=PALETTE)
    instances = list(sweep()) + [laws.gen_voltage_graph(gen) for _ in range(300)]
    for vg in instances:
        lift, n = cons.derived(vg).graph, vg.group.order
        if lift.vertex_count != vg.graph.vertex_count * n or lift.dart_count != vg.graph.dart_count * n:
            return False, f"size law fails on\n{serialize(vg)}"
    return True, f"{len(instances)} instances"


def criterion_10():
    """Every structural mutation trips a law with a replayable counterexample."""
    def body():
        lines = []
        for m in MUTATIONS:
            failed = [r for r in run_all(LawConfig(mutation=m)) if not r.passed]
            replayable = [r.law for r in failed if replay(json.loads(json.dumps(r.counterexample)))]
            if not replayable:
                return False, f"{m}: no replayable failure"
            lines.append(f"{m}->{','.join(replayable)}")
        return True, "; ".join(lines)

    (ok, detail), secs = _timed(body)
    return ok and secs < 60, f"{detail} ({secs:.2f}s)"


def criterion_11():
    """parse∘serialize on the fixtures; `laws --seed 42` byte-identical twice."""
    for path in sorted(FIXTURES.iterdir()):
        obj = read_document(str(path))
        if parse(serialize(obj)) != obj:
            return False, f"round trip fails on {path.name}"
    cmd = [sys.executable, "-m", "voltgraph", "laws", "--seed", "42", "--json", "--no-timing"]
    runs = [subprocess.run(cmd, capture_output=True, cwd=ROOT) for _ in range(2)]
    if any(r.returncode != 0 for r in runs):
        return False, "laws --seed 42 did not pass: " + runs[0].stdout.decode()[-300:]
    same = runs[0].stdout == runs[1].stdout
    return same, f"{len(list(FIXTURES.iterdir()))} fixtures; reports identical: {same}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


def _line(i: int, ok: bool, detail: str) -> str:
    return f"criterion {i:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("index", range(1, len(CRITERIA) + 1))
def test_criterion(index, capsys):
    ok, detail = CRITERIA[index - 1]()
    with capsys.disabled():
        print("\n" + _line(index, ok, detail))
    assert ok, detail


def main() -> int:
    failures = 0
    for i, fn in enumerate(CRITERIA, start=1):
        ok, detail = fn()
        failures += not ok
        print(_line(i, ok, detail), flush=True)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
