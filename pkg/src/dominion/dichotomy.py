"""Complexity of minimum domination on (claw, H)-free graphs, decided from H.

Hardness propagates upward along induced containment and tractability
propagates downward, so a verdict is read off from which hardness kernels
embed in H and which tractable graphs contain H.  Beyond six vertices only
these machine-checkable memberships are used; everything else is Open.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Graph
from .named import cycle, double_triangle, graph_from_spec, named_graph
from .recognition import (
    Embedding,
    _search,
    find_two_triangle_component,
    is_induced_embedding,
    is_isomorphic,
    triangles,
)


class Verdict(Enum):
    NP_COMPLETE = "NP-complete"
    POLYNOMIAL = "polynomial"
    OPEN = "open"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    kernel: str | None = None
    embedding: Embedding | None = None
    reason: str | None = None
    citation: str = ""

    def summary(self) -> str:
        if self.verdict is Verdict.NP_COMPLETE:
            return f"kernel {self.kernel} at " + " ".join(str(v + 1) for v in self.embedding)
        return self.reason or "-"


_HARD_CITE = {
    "claw": "a claw in H leaves all claw-free graphs, where MDS is NP-complete",
    "diamond": "NP-complete on (claw, diamond, K4, C4)-free perfect graphs (line graphs of bipartite subcubic graphs)",
    "K4": "NP-complete on (claw, diamond, K4, C4)-free perfect graphs (line graphs of bipartite subcubic graphs)",
    "butterfly": "NP-complete on cubic (claw, butterfly, diamond, C4, C5, K4)-free graphs (9-vertex gadget reduction)",
    "C": "NP-complete on (claw, C4, ..., Ck)-free subcubic graphs (stretched 4-corner gadget reduction)",
    "dt": "NP-complete on (claw, k-double-triangle)-free subcubic graphs (stretched 3-corner gadget reduction)",
    "two-triangles": "a component with two triangles contains C4, K4, a diamond, a butterfly or a k-double-triangle",
}

_EASY_CITE = {
    "cycle-only": "connected (claw, K3)-free graphs are paths and cycles",
    "kK1": "alpha(G) < k and gamma = i <= alpha on claw-free graphs: enumerate small independent sets",
    "2K2-family": "external result: MDS is polynomial on 2K2-free graphs",
    "co-claw": "external result: (claw, co-claw)-free graphs have bounded clique-width",
    "subgraph-of-net": "external result: MDS is polynomial on (claw, net)-free graphs",
    "subgraph-of-P8": "external result: MDS is polynomial on (claw, P8)-free graphs",
    "K3+2K1": "outside N[T] of a triangle T is a clique, so gamma <= 4",
    "K3+K2": "an induced P8 with a vertex beyond N[P8] forces H; otherwise gamma <= 8",
    "paw+K1": "an induced P8 with a vertex beyond N[P8] forces H; otherwise gamma <= 8",
    "(2,0,0)-triangle": "an induced P8 with a vertex beyond N[P8] forces H; otherwise gamma <= 8",
    "H6-list": "an induced P8 with a vertex beyond N[P8] forces H; otherwise gamma <= 8",
    "H5-list": "every 5-vertex H outside the hard list is covered by a tractable family",
    "dichotomy-completeness": "every claw-free H on at most six vertices without a hardness kernel is tractable",
}

H5_HARD = (
    "C5", "K5", "Kme:5", "co-(P3+2K1)", "W4", "co-(claw+K1)", "co-(P2+P3)", "gem",
    "co-(K3+2K1)", "K4+K1", "C4+K1", "dart", "house", "diamond+K1", "butterfly",
)
H5_EASY = (
    "bull", "P5", "P3+2K1", "2K2+K1", "K2+3K1", "K2+P3", "P4+K1", "5K1",
    "paw+K1", "tri:2,0,0", "K3+2K1", "K3+K2",
)
H6_EASY = (
    "K3+P3", "tri:3,0,0", "tri:2,0,0+K1", "2K3", "P3+3K1", "2K2+2K1", "paw+2K1",
    "bull+K1", "K3+K2+K1", "paw+K2", "tri:2,1,0", "K2+4K1", "K3+3K1",
)
H4_HARD = ("diamond", "K4", "C4")

_FAMILIES = [
    ("2K2-family", ("2K2",)),
    ("co-claw", ("K3+K1",)),
    ("subgraph-of-net", ("net",)),
    ("subgraph-of-P8", ("P8",)),
    ("K3+2K1", ("K3+2K1",)),
    ("K3+K2", ("K3+K2",)),
    ("paw+K1", ("paw+K1",)),
    ("(2,0,0)-triangle", ("tri:2,0,0",)),
    ("H6-list", H6_EASY),
]
_family_graphs = [(tag, [graph_from_spec(s) for s in specs]) for tag, specs in _FAMILIES]


def kernel_catalog(n: int) -> list[tuple[str, Graph]]:
    """Hardness kernels that can embed in a graph with ``n`` vertices, in scan order."""
    out = [(name, named_graph(name)) for name in ("claw", "diamond")]
    out.append(("K4", named_graph("K", 4)))
    out.append(("butterfly", named_graph("butterfly")))
    out.extend((f"C{k}", cycle(k)) for k in range(4, n + 1))
    out.extend((f"dt:{k}", double_triangle(k)) for k in range(0, n - 5))
    return out


def hardness_witness(h: Graph) -> tuple[str, Embedding] | None:
    """First kernel (in catalog order) embedding in ``h``, or the two-triangle test."""
    for name, k in kernel_catalog(h.n):
        emb = _search(h, k)
        if emb is not None:
            return name, emb
    pair = find_two_triangle_component(h)
    if pair is not None:
        return "two-triangles", pair[0] + pair[1]
    return None


def _kernel_cite(name: str) -> str:
    if name == "C4":
        return _HARD_CITE["K4"]
    if name.startswith("C") and name[1:].isdigit():
        return _HARD_CITE["C"]
    if name.startswith("dt:"):
        return _HARD_CITE["dt"]
    return _HARD_CITE[name]


def easy_reason(h: Graph) -> str | None:
    """Tag of the first tractable family H belongs to, if any."""
    if h.n == 3 and h.m == 3:
        return "cycle-only"
    if h.m == 0:
        return "kK1"
    for tag, graphs in _family_graphs:
        for f in graphs:
            if h.n <= f.n and _search(f, h) is not None:
                return tag
    return None


def classify(h: Graph) -> Classification:
    hit = hardness_witness(h)
    if hit is not None:
        name, emb = hit
        return Classification(Verdict.NP_COMPLETE, kernel=name, embedding=emb, citation=_kernel_cite(name))
    tag = easy_reason(h)
    if tag is None and h.n <= 6:
        tag = "dichotomy-completeness"
    if tag is not None:
        return Classification(Verdict.POLYNOMIAL, reason=tag, citation=_EASY_CITE[tag])
    return Classification(Verdict.OPEN, citation="no hardness kernel and no known tractable family")


def check_classification(h: Graph, c: Classification) -> bool:
    """Re-verify a verdict's evidence independently of :func:`classify`."""
    if c.verdict is Verdict.NP_COMPLETE:
        if c.kernel == "two-triangles":
            tris = {tuple(sorted(t)) for t in triangles(h)}
            a, b = tuple(sorted(c.embedding[:3])), tuple(sorted(c.embedding[3:]))
            if a not in tris or b not in tris or a == b:
                return False
            return any(comp >> a[0] & 1 and comp >> b[0] & 1 for comp in h.components())
        k = dict(kernel_catalog(max(h.n, 6)))[c.kernel]
        return is_induced_embedding(h, k, c.embedding)
    if c.verdict is Verdict.POLYNOMIAL:
        if c.reason == "dichotomy-completeness":
            return h.n <= 6
        if c.reason == "cycle-only":
            return is_isomorphic(h, named_graph("K", 3))
        if c.reason == "kK1":
            return h.m == 0
        graphs = dict(_family_graphs)[c.reason]
        return any(h.n <= f.n and _search(f, h) is not None for f in graphs)
    return True


# --- enumeration of small claw-free graphs ---------------------------------


def _signature(g: Graph) -> tuple:
    tri = [0] * g.n
    for t in triangles(g):
        for v in t:
            tri[v] += 1
    return tuple(sorted((g.degree(v), tri[v], tuple(sorted(g.degree(u) for u in g.neighbors(v))))
                        for v in range(g.n)))


def claw_free_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of claw-free graphs on n vertices.

    Built by adding a vertex with every possible neighbourhood to the
    classes one size down (claw-freeness is hereditary), then merging
    copies by invariant buckets and isomorphism tests.
    """
    level = [Graph(0)]
    claw = named_graph("claw")
    for size in range(1, n + 1):
        buckets: dict[tuple, list[Graph]] = {}
        nxt = []
        for g in level:
            base = g.edges()
            for nb in range(1 << (size - 1)):
                edges = base + [(u, size - 1) for u in range(size - 1) if nb >> u & 1]
                cand = Graph(size, edges)
                if _search(cand, claw) is not None:
                    continue
                bucket = buckets.setdefault(_signature(cand), [])
                if any(is_isomorphic(r, cand) for r in bucket):
                    continue
                bucket.append(cand)
                nxt.append(cand)
        level = nxt
    return sorted(level, key=lambda g: (g.m, sorted(g.degrees()), g.edges()))


_NAMES = (
    ["K3", "P3", "K2+K1", "3K1"]
    + ["claw", "K3+K1", "P4", "P3+K1", "2K2", "K2+2K1", "4K1", "paw"] + list(H4_HARD)
    + list(H5_HARD) + list(H5_EASY)
    + list(H6_EASY) + ["C6", "dt:0", "net", "P6", "6K1", "K6", "prism"]
)


def identify(h: Graph) -> str | None:
    """A conventional name for small graphs, when one is known."""
    for name in _NAMES:
        g = graph_from_spec(name)
        if g.n == h.n and is_isomorphic(g, h):
            return name
    return None


@dataclass(frozen=True)
class Row:
    graph: Graph
    name: str | None
    classification: Classification

    def tsv(self) -> str:
        edges = ",".join(f"{u + 1}-{v + 1}" for u, v in self.graph.edges()) or "-"
        c = self.classification
        return "\t".join([f"{self.graph.n}:{edges}", str(c.verdict), c.summary(), c.citation, self.name or "-"])


def classify_all(n: int) -> list[Row]:
    """Classification of every claw-free H on n <= 6 vertices."""
    if n > 6:
        raise ValueError("the dichotomy is only complete up to six vertices")
    if n < 0:
        raise ValueError("n must be non-negative")
    return [Row(h, identify(h), classify(h)) for h in claw_free_graphs(n)]
