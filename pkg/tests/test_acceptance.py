"""The nine acceptance criteria, one test each.

Each test records a single PASS/FAIL line that is printed in the pytest
terminal summary, then asserts.
"""

import random
import time

import pytest

from conftest import ACCEPTANCE
from oracles import brute_edge_gamma, brute_gamma, certificate, connected_graphs
from dominion import (
    Verdict,
    builtin_gadget,
    classify,
    classify_all,
    graph_from_spec,
    is_dominating,
    min_dominating,
    min_edge_dominating,
    min_independent_dominating,
    named_graph,
    reduce_4reg_to_cubic,
    reduce_cubic_butterfly,
    reduce_cubic_to_odd_regular,
    search_gadget,
    verify_gadget,
)
from dominion.dichotomy import H4_HARD, H5_EASY, H5_HARD, H6_EASY
from dominion.gadgets import GadgetError, GadgetSpec
from dominion.generate import random_claw_free, random_connected, random_cubic, random_graph, random_regular
from dominion.graph import Graph
from dominion.recognition import check_class, is_claw_free, is_isomorphic
from dominion.reductions import BUTTERFLY_FORBIDDEN, gamma_pair, verify_reduction


def record(num: int, ok: bool | None, detail: str) -> None:
    status = "SKIP" if ok is None else "PASS" if ok else "FAIL"
    ACCEPTANCE.append(f"{status} criterion {num}: {detail}")
    print(ACCEPTANCE[-1])


def test_1_solver_matches_brute_force():
    start = time.time()
    bad = []
    count = 0
    for n in range(1, 9):
        for g in connected_graphs(n):
            r = min_dominating(g)
            count += 1
            if r.size != brute_gamma(g) or not is_dominating(g, r.witness):
                bad.append(g.edges())
    rng = random.Random(20240601)
    for _ in range(500):
        n = rng.randint(9, 16)
        g = random_graph(n, rng.uniform(0.12, 0.5), rng)
        r = min_dominating(g)
        count += 1
        if r.size != brute_gamma(g) or not is_dominating(g, r.witness):
            bad.append(g.edges())
    elapsed = time.time() - start
    ok = not bad and elapsed <= 600
    record(1, ok, f"{count} graphs (12113 connected on <= 8 vertices + 500 random), "
                  f"{len(bad)} mismatches, {elapsed:.0f}s")
    assert ok


def test_2_claw_free_gamma_equals_i():
    rng = random.Random(7)
    bad = 0
    for _ in range(300):
        n = rng.randint(1, 14)
        g = random_claw_free(n, rng, rng.uniform(0.2, 0.8))
        assert is_claw_free(g)
        if min_independent_dominating(g).size != min_dominating(g).size:
            bad += 1
    record(2, bad == 0, f"300 random claw-free graphs, {bad} with i != gamma")
    assert bad == 0


def _hard_set(n):
    return [r.graph for r in classify_all(n) if r.classification.verdict is Verdict.NP_COMPLETE]


def _same_classes(got, want):
    return len(got) == len(want) and all(any(is_isomorphic(a, b) for b in want) for a in got)


def test_3_dichotomy_tables():
    problems = []
    want4 = [graph_from_spec(s) for s in H4_HARD]
    if not _same_classes(_hard_set(4), want4):
        problems.append("n=4 hard set")
    listed = [graph_from_spec(s) for s in H5_HARD]
    if any(classify(h).verdict is not Verdict.NP_COMPLETE for h in listed):
        problems.append("a listed 5-vertex graph is not NP-complete")
    # classify_all ranges over claw-free H; the list's claw-containing member
    # (the complement of K3+2K1) is NP-complete through the claw kernel
    if not _same_classes(_hard_set(5), [h for h in listed if is_claw_free(h)]):
        problems.append("n=5 hard set")
    rows5 = classify_all(5)
    easy5 = [r.graph for r in rows5 if r.classification.verdict is Verdict.POLYNOMIAL]
    if len(easy5) + len(_hard_set(5)) != len(rows5) or not _same_classes(easy5, [graph_from_spec(s) for s in H5_EASY]):
        problems.append("n=5 polynomial set")
    if any(classify(graph_from_spec(s)).verdict is not Verdict.POLYNOMIAL for s in H6_EASY):
        problems.append("six-vertex polynomial list")
    for s in ("C6", "dt:0"):
        if classify(graph_from_spec(s)).verdict is not Verdict.NP_COMPLETE:
            problems.append(s)
    ok = not problems
    record(3, ok, "n=4 {diamond,K4,C4}; n=5 14 claw-free of the 15 listed (+ claw-containing co-(K3+2K1)); "
                  f"13 six-vertex polynomial; C6, dt:0 hard; problems: {problems or 'none'}")
    assert ok


def test_4_gadget_rediscovery():
    start = time.time()
    found = search_gadget(9, 3, 3, 2, ["claw", "diamond", "butterfly", "C4", "C5", "K4"], 3)
    elapsed = time.time() - start
    good = 0
    for spec in found:
        rep = verify_gadget(GadgetSpec(spec.graph, spec.corners, 3, forbidden=spec.forbidden, name="recheck"))
        if (rep.passed and rep.gamma == 3 and all(e.gamma_without == 2 and e.unique and e.avoids_corners
                                                 for e in rep.corner_evidence) and rep.p3):
            good += 1
    ok = found and good == len(found) and elapsed <= 300
    record(4, ok, f"{len(found)} gadget(s) found, {good} re-verified, {elapsed:.1f}s")
    assert ok


def test_5_butterfly_reduction():
    gadget = builtin_gadget("butterfly9")
    rng = random.Random(5)
    graphs = [random_cubic(rng.choice([4, 6, 8, 10, 12]), rng) for _ in range(20)]
    graphs += [named_graph("K", 4), named_graph("petersen")]
    bad = 0
    for g in graphs:
        r = reduce_cubic_butterfly(g, gadget)
        cls = check_class(r.output, BUTTERFLY_FORBIDDEN, expect_regular=3)
        if r.offset != 2 * g.n or not cls.ok or not verify_reduction(g, r):
            bad += 1
    record(5, bad == 0, f"{len(graphs)} cubic graphs, gamma(G') = gamma(G) + 2n and class re-check; {bad} failures")
    assert bad == 0


CONNECTED_CUBIC = {4: 1, 6: 2, 8: 5, 10: 19}  # connected cubic graphs up to isomorphism


def _connected_cubic(n, tries=20000):
    seen = {}
    rng = random.Random(n)
    for _ in range(tries):
        g = random_cubic(n, rng)
        if g.is_connected():
            seen.setdefault(certificate(g), g)
            if len(seen) == CONNECTED_CUBIC[n]:
                break
    return list(seen.values())


def _all_cubic(n):
    """Connected classes by sampling until the known count is reached, plus
    every disjoint union of smaller connected classes."""
    parts = {k: _connected_cubic(k) for k in CONNECTED_CUBIC if k <= n}
    out = list(parts[n])
    if n == 8:
        out.append(parts[4][0] + parts[4][0])
    if n == 10:
        out += [parts[4][0] + h for h in parts[6]]
    return out


def test_6_odd_regular_reduction():
    known = {4: 1, 6: 2, 8: 6, 10: 21}  # all cubic graphs up to isomorphism
    bad = 0
    total = 0
    complete = True
    for n, count in known.items():
        graphs = _all_cubic(n)
        complete &= len(graphs) == count
        for g in graphs:
            r = reduce_cubic_to_odd_regular(g, 5)
            src, out = gamma_pair(g, r)
            total += 1
            if r.output.regular_degree() != 5 or out != src + g.n:
                bad += 1
    ok = bad == 0 and complete
    record(6, ok, f"all {total} cubic graphs on <= 10 vertices, k=5: 5-regular and gamma(G') = gamma(G) + n; "
                  f"{bad} failures")
    assert ok


def _catalog():
    specs = ["claw", "diamond", "paw", "bull", "net", "butterfly", "house", "gem", "W4", "dart",
             "petersen", "prism", "Q:3", "Kab:2,3", "Kab:3,3", "Kab:1,4"]
    specs += [f"P:{k}" for k in range(2, 12)] + [f"C:{k}" for k in range(3, 11)] + ["K:2", "K:3", "K:4"]
    specs += [f"dt:{k}" for k in range(0, 3)] + [f"tri:{a},{b},{c}" for a, b, c in
                                                  [(1, 0, 0), (1, 1, 0), (1, 1, 1), (2, 1, 0), (3, 0, 0), (2, 2, 1)]]
    specs += list(H5_HARD) + list(H5_EASY) + list(H6_EASY)
    return [graph_from_spec(s) for s in specs]


def test_7_edge_domination():
    graphs = [g for g in _catalog() if 1 <= g.m <= 10]
    rng = random.Random(77)
    while len(graphs) < len([g for g in _catalog() if 1 <= g.m <= 10]) + 100:
        g = random_graph(rng.randint(3, 9), rng.uniform(0.2, 0.5), rng)
        if 1 <= g.m <= 14:
            graphs.append(g)
    bad = 0
    for g in graphs:
        r = min_edge_dominating(g)
        touched = {x for e in r.witness for x in e}
        if r.size != brute_edge_gamma(g) or not all(u in touched or v in touched for u, v in g.edges()):
            bad += 1
    record(7, bad == 0, f"{len(graphs)} graphs ({len(graphs) - 100} catalog with <= 10 edges + 100 random), "
                        f"{bad} mismatches")
    assert bad == 0


def _mutations(g: Graph, count: int, seed: int):
    """Every single-pair flip, then seeded edge moves (one endpoint rerouted)."""
    n = g.n
    out = []
    edges = set(g.edges())
    for u in range(n):
        for v in range(u + 1, n):
            out.append(sorted(edges ^ {(u, v)}))
    rng = random.Random(seed)
    while len(out) < count:
        u, v = rng.choice(sorted(edges))
        w = rng.randrange(n)
        e = (min(u, w), max(u, w))
        if w in (u, v) or e in edges:
            continue
        out.append(sorted((edges - {(u, v)}) | {e}))
    return out[:count]


def test_8_mutation_robustness():
    base = builtin_gadget("butterfly9")
    silent = 0
    kinds = {"fails": 0, "gamma": 0}
    for edges in _mutations(base.graph, 50, 8):
        g = Graph(base.graph.n, edges)
        spec = GadgetSpec(g, base.corners, base.gamma, corner_inside_degree=None, internal_degree=None,
                          forbidden=base.forbidden, name="mutant")
        rep = verify_gadget(spec)
        if rep.gamma != base.gamma:
            kinds["gamma"] += 1
        elif not rep.passed:
            kinds["fails"] += 1
        else:
            silent += 1
    record(8, silent == 0, f"50 mutations of the 9-vertex gadget: {kinds['gamma']} change gamma, "
                           f"{kinds['fails']} fail verification, {silent} silent passes")
    assert silent == 0


def test_9_transcribed_44_vertex_gadget():
    try:
        spec = builtin_gadget("gadget44")
    except GadgetError:
        record(9, None, "no 44-vertex gadget transcription shipped (data-gated)")
        pytest.skip("44-vertex gadget transcription absent")
    rep = verify_gadget(spec)
    ok = (spec.graph.n == 44 and rep.passed and rep.gamma == 12
          and all(e.gamma_without == 11 for e in rep.corner_evidence))
    g = random_regular(6, 4, 9)
    r = reduce_4reg_to_cubic(g, spec)
    ok = ok and r.offset == 11 * g.n and verify_reduction(g, r)
    record(9, ok, "44-vertex gadget: gamma 12, gamma(H-a) 11 unique, p3, d' = 11n + d")
    assert ok
