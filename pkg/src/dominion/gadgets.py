"""Corner-marked gadgets: exact verification, exhaustive search, JSON files.

A gadget ``H`` with corners ``C`` and claimed optimum ``g`` is accepted when

* p1: gamma(H) = g and some minimum dominating set contains every corner;
* p2: for each corner a, gamma(H - a) = g - 1, the optimum of H - a is
  unique, and it contains no other corner;
* p3: no set of g - 2 vertices of H dominates all non-corner vertices;
* the forbidden patterns do not occur, checked on H with one pendant vertex
  hung on every corner (the corner's outside edge in a reduction).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from os import PathLike
from typing import Sequence

from .domination import PartialDominationQuery, enumerate_min_dominating, min_dominating, min_partial_dominating
from .graph import Graph, GraphError, bits, delete_vertices
from .named import graph_from_spec, named_graph
from .recognition import contains_induced, is_isomorphic, resolve_patterns, triangles


class GadgetError(ValueError):
    pass


@dataclass(frozen=True)
class GadgetSpec:
    graph: Graph
    corners: tuple[int, ...]
    gamma: int
    corner_inside_degree: int | None = 2
    internal_degree: int | None = 3
    forbidden: tuple[str, ...] = ()
    name: str = "gadget"
    # edges (u, v) that stretch templates replace by induced paths
    stretch_edges: tuple[tuple[int, int], ...] = ()
    # whether stretch templates also put a path on every inter-gadget edge
    edge_stretch: bool = False

    def __post_init__(self):
        g = self.graph
        if len(set(self.corners)) != len(self.corners):
            raise GadgetError("corners must be distinct")
        if not 1 <= len(self.corners) <= 4:
            raise GadgetError("a gadget has between one and four corners")
        for c in self.corners:
            if not 0 <= c < g.n:
                raise GadgetError(f"corner {c} outside the gadget")
        cset = set(self.corners)
        for v in range(g.n):
            want = self.corner_inside_degree if v in cset else self.internal_degree
            if want is not None and g.degree(v) != want:
                kind = "corner" if v in cset else "vertex"
                raise GadgetError(f"{kind} {v} has degree {g.degree(v)}, expected {want}")
        for u, v in self.stretch_edges:
            if not g.has_edge(u, v):
                raise GadgetError(f"stretch edge ({u}, {v}) is not an edge")

    @property
    def corner_mask(self) -> int:
        m = 0
        for c in self.corners:
            m |= 1 << c
        return m


@dataclass(frozen=True)
class CornerEvidence:
    corner: int
    gamma_without: int
    witness: tuple[int, ...]
    unique: bool
    avoids_corners: bool

    @property
    def ok(self) -> bool:
        return self.unique and self.avoids_corners


@dataclass
class GadgetReport:
    spec: GadgetSpec
    gamma: int
    p1: bool
    p1_witness: tuple[int, ...] | None
    p2: bool
    corner_evidence: list[CornerEvidence]
    p3: bool
    p3_counterexample: tuple[int, ...] | None
    forbidden_ok: bool
    forbidden_hits: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.p1 and self.p2 and self.p3 and self.forbidden_ok

    def failures(self) -> list[str]:
        return [name for name, ok in
                (("p1", self.p1), ("p2", self.p2), ("p3", self.p3), ("forbidden", self.forbidden_ok)) if not ok]


def with_pendants(g: Graph, corners: Sequence[int]) -> Graph:
    """``g`` plus one new pendant vertex attached to each corner."""
    edges = g.edges() + [(c, g.n + i) for i, c in enumerate(corners)]
    return Graph(g.n + len(corners), edges)


_verified: dict[GadgetSpec, GadgetReport] = {}


def verify_gadget(spec: GadgetSpec, node_cap: int | None = None) -> GadgetReport:
    """Decide the gadget properties exactly.  Reports are memoised per spec."""
    if spec in _verified:
        return _verified[spec]
    h = spec.graph
    g = spec.gamma
    corners = spec.corners
    cmask = spec.corner_mask
    gamma = min_dominating(h, node_cap, lexicographic=False).size

    p1_witness = None
    rest_targets = h.full_mask & ~h.neighborhood(corners)
    rest = min_partial_dominating(
        h, PartialDominationQuery(targets=frozenset(bits(rest_targets))), node_cap)
    if gamma == g and len(corners) + rest.size == g:
        p1_witness = tuple(sorted(set(corners) | set(rest.witness)))
    p1 = p1_witness is not None

    evidence = []
    for a in corners:
        sub = delete_vertices(h, [a])
        # vertex ids above a shift down by one in the deleted graph
        back = [v for v in range(h.n) if v != a]
        sets = enumerate_min_dominating(sub, limit=2, node_cap=node_cap)
        size = len(sets[0])
        wit = tuple(back[v] for v in sets[0])
        evidence.append(CornerEvidence(
            corner=a,
            gamma_without=size,
            witness=wit,
            unique=len(sets) == 1,
            avoids_corners=not any(cmask >> v & 1 for v in wit),
        ))
    p2 = all(e.gamma_without == g - 1 and e.ok for e in evidence)

    inner = frozenset(v for v in range(h.n) if not cmask >> v & 1)
    counter = None
    if g >= 2:
        r = min_partial_dominating(h, PartialDominationQuery(targets=inner, budget=g - 2), node_cap)
        if r is not None:
            counter = r.witness
    elif inner:
        counter = ()
    p3 = counter is None

    ext = with_pendants(h, corners)
    hits = []
    for name, pat in resolve_patterns(spec.forbidden):
        emb = contains_induced(ext, pat)
        if emb is not None:
            hits.append((name, emb))

    report = GadgetReport(spec, gamma, p1, p1_witness, p2, evidence, p3, counter, not hits, hits)
    _verified[spec] = report
    return report


# --- search ---------------------------------------------------------------


def _subgraph_prunes(patterns: list[tuple[str, Graph]]) -> tuple[bool, bool]:
    """Which cycle subgraphs can be excluded edge by edge.

    A 4-cycle subgraph is induced C4, a diamond or K4, so it can be rejected
    as soon as it appears when all three are forbidden.  Any 5-cycle
    subgraph is then an induced C5 or has a chord closing a 4-cycle.
    """
    graphs = [p for _, p in patterns]

    def has(h: Graph) -> bool:
        return any(is_isomorphic(p, h) for p in graphs)

    no_c4 = has(named_graph("C", 4)) and has(named_graph("diamond")) and has(named_graph("K", 4))
    return no_c4, no_c4 and has(named_graph("C", 5))


def _labelled_graphs(need: list[int], no_c4: bool, no_c5: bool):
    n = len(need)
    adj = [0] * n

    def ok_edge(i: int, j: int) -> bool:
        if no_c4:
            for x in bits(adj[i] & ~(1 << j)):
                if adj[x] & adj[j] & ~(1 << i):
                    return False
        if no_c5:
            for x in bits(adj[i] & ~(1 << j)):
                for z in bits(adj[j] & ~(1 << i) & ~(1 << x)):
                    if adj[x] & adj[z] & ~(1 << i) & ~(1 << j):
                        return False
        return True

    def rec(i: int):
        if i == n:
            yield tuple(adj)
            return
        r = need[i] - adj[i].bit_count()
        if r < 0:
            return
        cands = [j for j in range(i + 1, n) if adj[j].bit_count() < need[j]]
        for chosen in combinations(cands, r):
            added = []
            good = True
            for j in chosen:
                if not ok_edge(i, j):
                    good = False
                    break
                adj[i] |= 1 << j
                adj[j] |= 1 << i
                added.append(j)
            if good:
                yield from rec(i + 1)
            for j in added:
                adj[i] &= ~(1 << j)
                adj[j] &= ~(1 << i)

    yield from rec(0)


def _signature(g: Graph, cmask: int) -> tuple:
    tri = [0] * g.n
    for t in triangles(g):
        for v in t:
            tri[v] += 1
    per = sorted((bool(cmask >> v & 1), g.degree(v), tri[v],
                  tuple(sorted(g.degree(u) for u in g.neighbors(v)))) for v in range(g.n))
    return tuple(per)


def search_gadget(n: int, corners: int, internal_degree: int = 3, corner_degree: int | None = None,
                  forbidden: Sequence[str] = (), gamma: int = 1, node_cap: int | None = None,
                  name: str | None = None) -> list[GadgetSpec]:
    """All gadgets on ``n`` vertices, up to isomorphism, that pass verification.

    Corners are vertices ``0..corners-1``.  An infeasible degree sequence
    (odd degree sum) gives an empty list.
    """
    if corner_degree is None:
        corner_degree = internal_degree - 1
    if n > 12:
        raise GadgetError("exhaustive gadget search is limited to 12 vertices")
    if not 1 <= corners <= min(4, n):
        raise GadgetError("corners must be between 1 and min(4, n)")
    need = [corner_degree] * corners + [internal_degree] * (n - corners)
    if sum(need) % 2 or max(need) >= n:
        return []
    forbidden = tuple(forbidden)
    patterns = resolve_patterns(forbidden)
    no_c4, no_c5 = _subgraph_prunes(patterns)
    cmask = (1 << corners) - 1
    cset = tuple(range(corners))

    reps: dict[tuple, list[Graph]] = {}
    order: list[Graph] = []
    for rows in _labelled_graphs(need, no_c4, no_c5):
        g = Graph.from_rows(rows)
        ext = with_pendants(g, cset)
        if any(contains_induced(ext, p) is not None for _, p in patterns):
            continue
        sig = _signature(g, cmask)
        bucket = reps.setdefault(sig, [])
        if any(is_isomorphic(r, g, cmask, cmask) for r in bucket):
            continue
        bucket.append(g)
        order.append(g)

    found = []
    for g in order:
        spec = GadgetSpec(g, cset, gamma, corner_degree, internal_degree, forbidden,
                          name or f"search-n{n}-c{corners}")
        if verify_gadget(spec, node_cap).passed:
            found.append(spec)
    found.sort(key=lambda s: s.graph.edges())
    return found


# --- files ----------------------------------------------------------------


def gadget_to_json(spec: GadgetSpec) -> dict:
    edges = spec.graph.edges()
    index = {e: i for i, e in enumerate(edges)}
    data = {
        "name": spec.name,
        "n": spec.graph.n,
        "edges": [[u + 1, v + 1] for u, v in edges],
        "corners": [c + 1 for c in spec.corners],
        "gamma": spec.gamma,
        "forbidden": list(spec.forbidden),
        "corner_degree": spec.corner_inside_degree,
        "internal_degree": spec.internal_degree,
    }
    if spec.stretch_edges:
        data["stretch_edges"] = [index[(min(e), max(e))] for e in spec.stretch_edges]
        data["edge_stretch"] = spec.edge_stretch
    return data


def gadget_from_json(data: dict) -> GadgetSpec:
    try:
        n = int(data["n"])
        raw_edges = [(int(u) - 1, int(v) - 1) for u, v in data["edges"]]
        corners = tuple(int(c) - 1 for c in data["corners"])
        gamma = int(data["gamma"])
    except (KeyError, TypeError, ValueError) as exc:
        raise GadgetError(f"bad gadget file: {exc}") from None
    try:
        g = Graph(n, raw_edges)
    except GraphError as exc:
        raise GadgetError(f"bad gadget graph: {exc}") from None
    stretch = tuple(raw_edges[i] for i in data.get("stretch_edges", ()))
    return GadgetSpec(
        graph=g,
        corners=corners,
        gamma=gamma,
        corner_inside_degree=data.get("corner_degree", 2),
        internal_degree=data.get("internal_degree", 3),
        forbidden=tuple(data.get("forbidden", ())),
        name=data.get("name", "gadget"),
        stretch_edges=stretch,
        edge_stretch=bool(data.get("edge_stretch", False)),
    )


def load_gadget(path: str | PathLike) -> GadgetSpec:
    with open(path) as fh:
        return gadget_from_json(json.load(fh))


def dumps_gadget(spec: GadgetSpec) -> str:
    """One key per line, each value on a single line."""
    data = gadget_to_json(spec)
    body = ",\n".join(f" {json.dumps(k)}: {json.dumps(v)}" for k, v in data.items())
    return "{\n" + body + "\n}\n"


def save_gadget(spec: GadgetSpec, path: str | PathLike) -> None:
    with open(path, "w") as fh:
        fh.write(dumps_gadget(spec))


def builtin_gadget(name: str) -> GadgetSpec:
    """Load one of the gadget files shipped in ``dominion/data``."""
    from importlib import resources

    ref = resources.files("dominion") / "data" / f"{name}.json"
    if not ref.is_file():
        raise GadgetError(f"no built-in gadget {name!r}")
    return gadget_from_json(json.loads(ref.read_text()))
