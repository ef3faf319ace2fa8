import json
from itertools import combinations

import pytest

from dominion import GadgetSpec, builtin_gadget, load_gadget, save_gadget, search_gadget, verify_gadget
from dominion.gadgets import GadgetError, dumps_gadget, gadget_from_json, gadget_to_json, with_pendants
from dominion.graph import Graph, delete_vertices
from dominion.recognition import contains_induced, resolve_patterns
from oracles import adjacency, brute_all_min, brute_gamma

BUILTINS = ["butterfly9", "butterfly9_stretch", "pair20", "cubic24"]


def oracle_properties(spec):
    """p1, p2, p3 decided by subset enumeration (gadgets up to about 12 vertices)."""
    h, g, corners = spec.graph, spec.gamma, set(spec.corners)
    adj = adjacency(h)

    def dominates(s, targets):
        return all(t in s or adj[t] & s for t in targets)

    everything = range(h.n)
    p1 = brute_gamma(h) == g and any(
        dominates(set(s) | corners, everything) for s in combinations(sorted(set(everything) - corners), g - len(corners)))
    p2 = True
    for a in corners:
        sub = delete_vertices(h, [a])
        back = [v for v in everything if v != a]
        optima = brute_all_min(sub)
        p2 &= len(optima[0]) == g - 1 and len(optima) == 1 and not corners & {back[v] for v in optima[0]}
    inner = [v for v in everything if v not in corners]
    p3 = g < 2 or not any(dominates(set(s), inner) for s in combinations(everything, g - 2))
    return p1, p2, p3


@pytest.mark.parametrize("name", BUILTINS)
def test_builtins_pass(name):
    spec = builtin_gadget(name)
    report = verify_gadget(spec)
    assert report.passed, report.failures()
    assert report.gamma == spec.gamma


def test_butterfly9_against_oracle():
    spec = builtin_gadget("butterfly9")
    assert oracle_properties(spec) == (True, True, True)
    report = verify_gadget(spec)
    assert set(spec.corners) <= set(report.p1_witness) and len(report.p1_witness) == 3
    for ev in report.corner_evidence:
        assert ev.gamma_without == 2 and ev.unique and ev.avoids_corners


def test_butterfly9_forbidden_patterns_with_pendants():
    spec = builtin_gadget("butterfly9")
    ext = with_pendants(spec.graph, spec.corners)
    for name, pat in resolve_patterns(spec.forbidden):
        assert contains_induced(ext, pat) is None, name


def _relocated(spec, corners):
    return GadgetSpec(spec.graph, corners, spec.gamma, None, None, spec.forbidden, "moved")


def test_verifier_agrees_with_oracle_on_corner_choices():
    base = builtin_gadget("butterfly9")
    n = base.graph.n
    seen = set()
    for corners in combinations(range(n), 3):
        spec = _relocated(base, corners)
        r = verify_gadget(spec)
        assert (r.p1, r.p2, r.p3) == oracle_properties(spec), corners
        seen.add(r.passed)
    assert seen == {True, False}


def test_wrong_gamma_fails():
    base = builtin_gadget("butterfly9")
    spec = GadgetSpec(base.graph, base.corners, 4, forbidden=base.forbidden)
    assert "p1" in verify_gadget(spec).failures()


def test_forbidden_hit_reported():
    base = builtin_gadget("butterfly9")
    spec = GadgetSpec(base.graph, base.corners, 3, forbidden=("P3",))
    r = verify_gadget(spec)
    assert not r.forbidden_ok and r.forbidden_hits[0][0] == "P3"


def test_spec_validation():
    k3 = Graph(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(GadgetError, match="distinct"):
        GadgetSpec(k3, (0, 0), 1, None, None)
    with pytest.raises(GadgetError, match="degree"):
        GadgetSpec(k3, (0,), 1)
    with pytest.raises(GadgetError, match="outside"):
        GadgetSpec(k3, (5,), 1, None, None)
    with pytest.raises(GadgetError, match="not an edge"):
        GadgetSpec(Graph(3, [(0, 1)]), (0,), 1, None, None, stretch_edges=((1, 2),))


@pytest.mark.parametrize("name", BUILTINS)
def test_json_round_trip(name, tmp_path):
    spec = builtin_gadget(name)
    path = tmp_path / "g.json"
    save_gadget(spec, path)
    back = load_gadget(path)
    assert back == spec
    assert gadget_from_json(json.loads(dumps_gadget(spec))) == spec
    assert gadget_to_json(back) == gadget_to_json(spec)


def test_bad_gadget_files():
    with pytest.raises(GadgetError):
        gadget_from_json({"n": 3})
    with pytest.raises(GadgetError):
        gadget_from_json({"n": 2, "edges": [[1, 1]], "corners": [1], "gamma": 1})
    with pytest.raises(GadgetError):
        builtin_gadget("does-not-exist")


def test_search_small_cases():
    assert search_gadget(4, 3, forbidden=("claw",), gamma=2) == []
    # odd degree sum
    assert search_gadget(5, 2, internal_degree=3) == []
    with pytest.raises(GadgetError):
        search_gadget(13, 3)
    with pytest.raises(GadgetError):
        search_gadget(6, 5)


def test_search_finds_the_nine_vertex_gadget():
    base = builtin_gadget("butterfly9")
    found = search_gadget(9, 3, forbidden=base.forbidden, gamma=3)
    assert found
    from dominion import is_isomorphic

    assert any(is_isomorphic(s.graph, base.graph, s.corner_mask, base.corner_mask) for s in found)
    for s in found:
        assert oracle_properties(s) == (True, True, True)
