"""Induced-subgraph containment and the class checks built on it."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union

from .graph import Graph, bits
from .named import graph_from_spec, named_graph

Embedding = tuple[int, ...]
"""``emb[i]`` is the host vertex that pattern vertex ``i`` maps to."""

MAX_PATTERN = 16

CLAW = named_graph("claw")
TRIANGLE = named_graph("K", 3)


class PatternTooLarge(ValueError):
    pass


def _search(g: Graph, h: Graph, compat: Sequence[int] | None = None) -> Embedding | None:
    """Lexicographically least induced embedding of ``h`` into ``g``.

    Pattern vertices are placed in index order and host candidates are tried
    in ascending order, so the first hit is the least tuple.  ``compat[i]``
    optionally restricts the host vertices pattern vertex ``i`` may use.
    """
    k = h.n
    if k == 0:
        return ()
    if k > g.n:
        return None
    gadj, hadj = g.adj, h.adj
    gdeg = g.degrees()
    cand0 = []
    for i in range(k):
        d = hadj[i].bit_count()
        m = 0
        for v, dv in enumerate(gdeg):
            if dv >= d:
                m |= 1 << v
        if compat is not None:
            m &= compat[i]
        if not m:
            return None
        cand0.append(m)
    nbr = [[j for j in range(i) if hadj[i] >> j & 1] for i in range(k)]
    non = [[j for j in range(i) if not hadj[i] >> j & 1] for i in range(k)]
    emb = [0] * k

    def rec(i: int, used: int) -> bool:
        cand = cand0[i] & ~used
        for j in nbr[i]:
            cand &= gadj[emb[j]]
        for j in non[i]:
            cand &= ~gadj[emb[j]]
        last = i == k - 1
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            emb[i] = v
            if last or rec(i + 1, used | low):
                return True
            cand ^= low
        return False

    return tuple(emb) if rec(0, 0) else None


def contains_induced(g: Graph, h: Graph) -> Embedding | None:
    """Find ``h`` as an induced subgraph of ``g``; ``None`` when absent."""
    if h.n > MAX_PATTERN:
        raise PatternTooLarge(f"pattern has {h.n} vertices, limit is {MAX_PATTERN}")
    return _search(g, h)


def is_induced_embedding(g: Graph, h: Graph, emb: Embedding) -> bool:
    """Direct re-check of the induced condition for ``emb``."""
    if len(emb) != h.n or len(set(emb)) != h.n:
        return False
    if any(not 0 <= v < g.n for v in emb):
        return False
    for a in range(h.n):
        for b in range(a + 1, h.n):
            if h.has_edge(a, b) != g.has_edge(emb[a], emb[b]):
                return False
    return True


def _invariant(g: Graph) -> tuple:
    return (g.n, g.m, tuple(sorted(g.degrees())))


def is_isomorphic(g: Graph, h: Graph, g_marks: int = 0, h_marks: int = 0) -> bool:
    """Isomorphism test by induced embedding between equal-size graphs.

    With equal vertex counts an induced embedding is a bijection preserving
    edges and non-edges, so one containment decides.  The optional marks
    restrict the map to send marked vertices of ``h`` onto marked vertices
    of ``g`` (used to keep gadget corners fixed as a set).
    """
    if _invariant(g) != _invariant(h):
        return False
    if g_marks.bit_count() != h_marks.bit_count():
        return False
    compat = None
    if g_marks or h_marks:
        compat = [g_marks if h_marks >> i & 1 else g.full_mask & ~g_marks for i in range(h.n)]
    return _search(g, h, compat) is not None


def is_claw_free(g: Graph) -> bool:
    return contains_induced(g, CLAW) is None


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    adj = g.adj
    for u in range(g.n):
        up = adj[u] >> (u + 1) << (u + 1)
        for v in bits(up):
            for w in bits(adj[v] & up & ~((2 << v) - 1)):
                out.append((u, v, w))
    return out


@dataclass
class ClassReport:
    claw_free: bool
    regular_degree: int | None
    forbidden_hits: list[tuple[str, Embedding | None]] = field(default_factory=list)
    expected_regular: int | None = None

    @property
    def violations(self) -> list[tuple[str, Embedding]]:
        return [(name, emb) for name, emb in self.forbidden_hits if emb is not None]

    @property
    def regular_ok(self) -> bool:
        return self.expected_regular is None or self.regular_degree == self.expected_regular

    @property
    def ok(self) -> bool:
        return not self.violations and self.regular_ok


PatternList = Union[Mapping[str, Graph], Iterable[Union[str, Graph, tuple[str, Graph]]]]


def resolve_patterns(forbidden: PatternList) -> list[tuple[str, Graph]]:
    """Normalise pattern arguments to ``(id, graph)`` pairs; strings are specs."""
    if isinstance(forbidden, Mapping):
        return list(forbidden.items())
    out = []
    for i, item in enumerate(forbidden):
        if isinstance(item, str):
            out.append((item, graph_from_spec(item)))
        elif isinstance(item, Graph):
            out.append((f"H{i}", item))
        else:
            out.append((item[0], item[1]))
    return out


def check_class(g: Graph, forbidden: PatternList = (), expect_regular: int | None = None) -> ClassReport:
    patterns = resolve_patterns(forbidden)
    hits = [(name, contains_induced(g, h)) for name, h in patterns]
    return ClassReport(
        claw_free=is_claw_free(g),
        regular_degree=g.regular_degree(),
        forbidden_hits=hits,
        expected_regular=expect_regular,
    )


def find_induced_path(g: Graph, k: int) -> Embedding | None:
    """Some induced path on ``k`` vertices, first in DFS order, or ``None``."""
    if k < 1:
        raise ValueError("path length must be >= 1")
    adj = g.adj
    path = [0] * k

    def extend(i: int, blocked: int) -> bool:
        # blocked: closed neighbourhoods of path[0..i-2] plus path[i-1] itself
        if i == k:
            return True
        cand = adj[path[i - 1]] & ~blocked
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            path[i] = v
            if extend(i + 1, blocked | adj[path[i - 1]] | (1 << path[i - 1]) | low):
                return True
            cand ^= low
        return False

    for s in range(g.n):
        path[0] = s
        if k == 1 or extend(1, 1 << s):
            return tuple(path)
    return None


def find_two_triangle_component(g: Graph) -> tuple[tuple[int, int, int], tuple[int, int, int]] | None:
    """Two distinct triangles inside one connected component, if any."""
    tris = triangles(g)
    if len(tris) < 2:
        return None
    for comp in g.components():
        inside = [t for t in tris if comp >> t[0] & 1]
        if len(inside) >= 2:
            return inside[0], inside[1]
    return None


def has_two_triangle_component(g: Graph) -> bool:
    return find_two_triangle_component(g) is not None
