import pytest

from dominion import builtin_gadget, check_class, graph_from_spec, min_dominating, verify_reduction
from dominion.generate import random_cubic, random_regular
from dominion.graph import Graph
from dominion.reductions import (
    BUTTERFLY_FORBIDDEN,
    ReductionError,
    ReductionResult,
    corner_assignment,
    gamma_pair,
    reduce_4reg_to_cubic,
    reduce_cubic_butterfly,
    reduce_cubic_to_odd_regular,
    reduce_stretch_family,
    stretch,
)
from oracles import brute_gamma

G = graph_from_spec


@pytest.fixture(scope="module")
def b9():
    return builtin_gadget("butterfly9")


def test_butterfly_on_k4(b9):
    r = reduce_cubic_butterfly(G("K:4"), b9)
    assert r.output.n == 36 and r.offset == 8
    assert gamma_pair(G("K:4"), r) == (1, 9)
    assert check_class(r.output, BUTTERFLY_FORBIDDEN, expect_regular=3).ok


def test_butterfly_on_petersen(b9):
    r = reduce_cubic_butterfly(G("petersen"), b9)
    assert r.output.n == 90
    assert min_dominating(r.output, lexicographic=False).size == 23
    assert verify_reduction(G("petersen"), r)


@pytest.mark.parametrize("seed", range(3))
def test_butterfly_on_random_cubic(b9, seed):
    g = random_cubic(8, seed)
    assert verify_reduction(g, reduce_cubic_butterfly(g, b9))


def test_placement_and_wiring(b9):
    g = G("K:4")
    r = reduce_cubic_butterfly(g, b9)
    assert [len(p) for p in r.placement] == [9] * 4
    assert len(r.wiring) == g.m
    assign = corner_assignment(g)
    for w in r.wiring:
        u, v = w.source_edge
        assert w.corners == (9 * u + b9.corners[assign[u][v]], 9 * v + b9.corners[assign[v][u]])
        assert r.output.has_edge(*w.corners)
    assert r.output.labels[0] == "v1.1"


def test_rejects_wrong_inputs(b9):
    with pytest.raises(ReductionError, match="3-regular"):
        reduce_cubic_butterfly(G("C:4"), b9)
    with pytest.raises(ReductionError, match="4-regular"):
        reduce_4reg_to_cubic(G("K:4"), builtin_gadget("cubic24"))
    with pytest.raises(ReductionError):
        reduce_stretch_family(G("K:4"), builtin_gadget("pair20"), 1, "ck_free")
    with pytest.raises(ReductionError):
        reduce_stretch_family(G("K:5"), builtin_gadget("pair20"), 0, "ck_free")
    with pytest.raises(ReductionError):
        reduce_stretch_family(G("K:5"), builtin_gadget("pair20"), 1, "bogus")
    with pytest.raises(ReductionError):
        reduce_4reg_to_cubic(G("K:5"), b9)


def test_broken_gadget_is_refused(b9):
    from dominion import GadgetSpec

    moved = GadgetSpec(b9.graph, (0, 1, 3), 3, None, None, b9.forbidden, "moved")
    with pytest.raises(ReductionError):
        reduce_cubic_butterfly(G("K:4"), moved)


def test_odd_regular():
    r = reduce_cubic_to_odd_regular(G("K:4"), 5)
    assert r.output.n == 28 and r.output.regular_degree() == 5
    assert r.offset == 4
    assert verify_reduction(G("K:4"), r)
    r7 = reduce_cubic_to_odd_regular(G("K:4"), 7)
    assert r7.output.regular_degree() == 7 and r7.offset == 8
    for k in (4, 3, 1):
        with pytest.raises(ReductionError):
            reduce_cubic_to_odd_regular(G("K:4"), k)


def test_cubic_from_k5():
    r = reduce_4reg_to_cubic(G("K:5"), builtin_gadget("cubic24"))
    assert r.output.n == 120 and r.output.regular_degree() == 3 and r.offset == 30
    assert gamma_pair(G("K:5"), r) == (1, 31)


def test_stretch_template():
    spec = builtin_gadget("butterfly9_stretch")
    h, corners = stretch(spec, 0)
    assert h == spec.graph
    h, corners = stretch(spec, 2)
    assert h.n == 9 + 3 * 6 and h.m == spec.graph.m + 3 * 6
    assert corners == list(spec.corners)


def test_kdt_on_k4():
    r = reduce_stretch_family(G("K:4"), builtin_gadget("butterfly9_stretch"), 1, "k_double_triangle")
    assert r.offset == 26
    assert r.output.max_degree() == 3
    assert verify_reduction(G("K:4"), r)
    assert r.notes["checked_patterns"] == ["dt:2"]


def test_ck_on_k5_class_only():
    r = reduce_stretch_family(G("K:5"), builtin_gadget("pair20"), 1, "ck_free")
    assert r.output.n == 235 and r.offset == 70
    assert r.notes["checked_patterns"] == [f"C{k}" for k in range(4, 13)]
    assert check_class(r.output, ["claw"]).claw_free


def test_wiring_to_wrong_corners_breaks_the_offset(b9):
    from dominion.reductions import _substitute

    g = G("K:4")
    r = _substitute(g, b9.graph, [3, 4, 5], "butterfly", 2 * g.n)
    assert not verify_reduction(g, r)
    assert gamma_pair(g, r) == (1, 12)


def test_offset_mutation_is_caught(b9):
    r = reduce_cubic_butterfly(G("K:4"), b9)
    r.offset += 1
    assert not verify_reduction(G("K:4"), r)


def test_save_and_load(tmp_path, b9):
    r = reduce_cubic_butterfly(G("K:4"), b9)
    r.save(tmp_path / "out")
    back = ReductionResult.load(tmp_path / "out")
    assert back.output == Graph(r.output.n, r.output.edges())
    assert (back.offset, back.mode, back.source_n) == (r.offset, r.mode, r.source_n)
    assert back.wiring == r.wiring and back.placement == r.placement


def test_regular_generator_feeds_cubic_reduction():
    g = random_regular(6, 4, 1)
    assert g.regular_degree() == 4
    r = reduce_4reg_to_cubic(g, builtin_gadget("cubic24"))
    assert r.output.regular_degree() == 3 and r.offset == 36


def test_source_gamma_oracle():
    # the solver used by verify_reduction agrees with brute force on the sources used above
    for spec in ("K:4", "K:5", "petersen"):
        assert min_dominating(G(spec)).size == brute_gamma(G(spec))
