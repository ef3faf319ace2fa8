from itertools import permutations

import pytest

from dominion import Verdict, classify, classify_all, graph_from_spec, hardness_witness
from dominion.dichotomy import (
    H4_HARD,
    H5_EASY,
    H5_HARD,
    H6_EASY,
    check_classification,
    claw_free_graphs,
    identify,
    kernel_catalog,
)
from dominion.recognition import contains_induced, is_claw_free
from oracles import certificate, connected_graphs

G = graph_from_spec
NP, POLY, OPEN = Verdict.NP_COMPLETE, Verdict.POLYNOMIAL, Verdict.OPEN


@pytest.mark.parametrize("spec, verdict", [
    ("diamond", NP), ("bull", POLY), ("2K3", POLY), ("C:7", NP), ("P:9", OPEN), ("3K3", OPEN),
    ("claw", NP), ("K:4", NP), ("C:4", NP), ("net", POLY), ("P:8", POLY), ("9K1", POLY), ("C:6", NP), ("dt:0", NP),
])
def test_classify_examples(spec, verdict):
    c = classify(G(spec))
    assert c.verdict is verdict
    assert check_classification(G(spec), c)


def test_c7_uses_its_own_kernel():
    assert classify(G("C:7")).kernel == "C7"


@pytest.mark.parametrize("spec, kernel", [("gem", "diamond"), ("house", "C4"), ("butterfly", "butterfly"), ("dt:2", "dt:2")])
def test_hardness_witness(spec, kernel):
    name, emb = hardness_witness(G(spec))
    assert name == kernel
    assert check_classification(G(spec), classify(G(spec)))


def test_net_has_no_witness():
    assert hardness_witness(G("net")) is None


def test_two_triangle_components_are_hard():
    from dominion.recognition import has_two_triangle_component

    for n in (5, 6):
        for g in claw_free_graphs(n):
            if has_two_triangle_component(g):
                c = classify(g)
                assert c.verdict is NP and c.kernel != "two-triangles"


def test_catalog_order_and_claw_freeness():
    names = [name for name, _ in kernel_catalog(8)]
    assert names[:4] == ["claw", "diamond", "K4", "butterfly"]
    assert names[4:] == ["C4", "C5", "C6", "C7", "C8", "dt:0", "dt:1", "dt:2"]
    for name, k in kernel_catalog(9)[1:]:
        assert is_claw_free(k), name


def test_h6_list_is_polynomial():
    assert len(H6_EASY) == 13
    for spec in H6_EASY:
        assert classify(G(spec)).verdict is POLY, spec


def test_named_lists():
    assert all(classify(G(s)).verdict is NP for s in H5_HARD + H4_HARD)
    assert all(classify(G(s)).verdict is POLY for s in H5_EASY)
    assert len(H5_HARD) == 15


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 4), (4, 10), (5, 26)])
def test_claw_free_class_counts(n, count):
    graphs = claw_free_graphs(n)
    assert len({certificate(g) for g in graphs}) == len(graphs) == count


def test_claw_free_counts_against_exhaustive_generation():
    # connected claw-free graphs on 6 vertices, counted independently
    want = sum(1 for g in connected_graphs(6) if is_claw_free(g))
    have = sum(1 for g in claw_free_graphs(6) if g.is_connected())
    assert have == want


def test_classify_all_small():
    rows4 = classify_all(4)
    hard = {r.name for r in rows4 if r.classification.verdict is NP}
    assert hard == set(H4_HARD)
    assert all(r.classification.verdict is POLY for r in classify_all(3))


def test_classify_all_refuses_seven():
    with pytest.raises(ValueError):
        classify_all(7)
    with pytest.raises(ValueError):
        classify_all(-1)


@pytest.mark.slow
def test_six_vertices_never_open():
    rows = classify_all(6)
    assert all(r.classification.verdict is not OPEN for r in rows)
    for r in rows:
        assert check_classification(r.graph, r.classification)


def test_monotone_closure_on_catalog():
    specs = ["claw", "diamond", "paw", "bull", "net", "butterfly", "house", "gem", "P4", "P:6", "P:9", "C:5",
             "dt:0", "tri:2,1,0", "2K3", "3K3", "K3+P3", "2K2", "P3+3K1"]
    graphs = {s: G(s) for s in specs}
    verdict = {s: classify(g).verdict for s, g in graphs.items()}
    for a, b in permutations(specs, 2):
        if graphs[b].n <= graphs[a].n and contains_induced(graphs[a], graphs[b]) is not None:
            if verdict[b] is NP:
                assert verdict[a] is not POLY, (a, b)
            if verdict[a] is POLY:
                assert verdict[b] is not NP, (a, b)


def test_identify_names():
    assert identify(G("co-(P3+K1)")) == "paw"
    assert identify(G("P:12")) is None


def test_tsv_row_shape():
    row = next(r for r in classify_all(4) if r.name == "diamond")
    cols = row.tsv().split("\t")
    assert len(cols) == 5
    assert cols[0].startswith("4:") and cols[1] == "NP-complete" and cols[4] == "diamond"
    assert cols[2].startswith("kernel diamond at ")
