"""Gadget-substitution reductions between domination instances.

Every builder returns a :class:`ReductionResult` carrying the claimed
additive offset ``gamma(out) = gamma(G) + offset``.  Builders only check
structure; :func:`verify_reduction` settles the claim with the exact solver.

Corner wiring is deterministic: at each source vertex the incident edges,
sorted by the other endpoint, take the gadget corners in order, and the
source edge ``uv`` becomes an edge (or a path) between the two corners it
was assigned at ``u`` and at ``v``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from os import PathLike
from pathlib import Path

from .domination import min_dominating
from .formats import read_graph, write_graph
from .gadgets import GadgetSpec, verify_gadget
from .graph import Graph
from .named import k_minus_e
from .recognition import MAX_PATTERN, check_class, is_claw_free

BUTTERFLY_FORBIDDEN = ("claw", "butterfly", "diamond", "C4", "C5", "K4")


class ReductionError(ValueError):
    pass


@dataclass(frozen=True)
class Wire:
    source_edge: tuple[int, int]
    corners: tuple[int, int]
    path: tuple[int, ...] = ()


@dataclass
class ReductionResult:
    output: Graph
    offset: int
    placement: list[range]
    wiring: list[Wire]
    mode: str
    source_n: int
    notes: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "offset": self.offset,
            "source_n": self.source_n,
            "placement": [[r.start, r.stop] for r in self.placement],
            "wiring": [
                {"edge": list(w.source_edge), "corners": list(w.corners), "path": list(w.path)}
                for w in self.wiring
            ],
            "notes": self.notes,
        }

    def save(self, directory: str | PathLike) -> None:
        """Write ``output.graph`` and ``result.json`` into ``directory``."""
        d = Path(directory)
        d.mkdir(parents=True, exist_ok=True)
        write_graph(self.output, d / "output.graph", [f"reduction {self.mode}, offset {self.offset}"])
        with open(d / "result.json", "w") as fh:
            json.dump(self.to_json(), fh, indent=1)
            fh.write("\n")

    @classmethod
    def load(cls, directory: str | PathLike) -> "ReductionResult":
        d = Path(directory)
        out = read_graph(d / "output.graph")
        with open(d / "result.json") as fh:
            data = json.load(fh)
        return cls(
            output=out,
            offset=data["offset"],
            placement=[range(a, b) for a, b in data["placement"]],
            wiring=[Wire(tuple(w["edge"]), tuple(w["corners"]), tuple(w.get("path", ()))) for w in data["wiring"]],
            mode=data["mode"],
            source_n=data["source_n"],
            notes=data.get("notes", {}),
        )


def corner_assignment(g: Graph) -> list[dict[int, int]]:
    """For each vertex v, the corner index used by each neighbour of v."""
    return [{u: i for i, u in enumerate(g.neighbors(v))} for v in range(g.n)]


def stretch(spec: GadgetSpec, p: int) -> tuple[Graph, list[int]]:
    """Replace each stretch edge of the template by an induced path of 3p vertices.

    Returns the stretched graph (original vertex ids kept, path vertices
    appended) and the list of corners.
    """
    h = spec.graph
    if p == 0:
        return h, list(spec.corners)
    stretched = {(min(e), max(e)) for e in spec.stretch_edges}
    edges = [e for e in h.edges() if e not in stretched]
    nxt = h.n
    for u, v in sorted(stretched):
        chain = [u] + list(range(nxt, nxt + 3 * p)) + [v]
        nxt += 3 * p
        edges.extend(zip(chain, chain[1:]))
    return Graph(nxt, edges), list(spec.corners)


def _substitute(g: Graph, gadget: Graph, corners: list[int], mode: str, offset: int,
                edge_path: int = 0) -> ReductionResult:
    """One copy of ``gadget`` per source vertex, corners wired per source edge.

    ``edge_path`` > 0 puts an induced path of that many vertices on every
    inter-gadget connection instead of a single edge.
    """
    size = gadget.n
    gedges = gadget.edges()
    edges = []
    labels = []
    placement = []
    for v in range(g.n):
        base = v * size
        placement.append(range(base, base + size))
        edges.extend((base + a, base + b) for a, b in gedges)
        labels.extend(f"v{v + 1}.{a + 1}" for a in range(size))
    assign = corner_assignment(g)
    nxt = g.n * size
    wiring = []
    for u, v in g.edges():
        cu = u * size + corners[assign[u][v]]
        cv = v * size + corners[assign[v][u]]
        path = tuple(range(nxt, nxt + edge_path))
        nxt += edge_path
        chain = [cu, *path, cv]
        edges.extend(zip(chain, chain[1:]))
        labels.extend(f"e{u + 1}-{v + 1}.{i + 1}" for i in range(edge_path))
        wiring.append(Wire((u, v), (cu, cv), path))
    out = Graph(nxt, edges, labels)
    return ReductionResult(out, offset, placement, wiring, mode, g.n)


def _require_regular(g: Graph, k: int, what: str) -> None:
    if g.n == 0 or g.regular_degree() != k:
        raise ReductionError(f"{what} needs a {k}-regular input graph")


def _require_verified(spec: GadgetSpec, corners: int) -> None:
    if len(spec.corners) != corners:
        raise ReductionError(f"gadget needs {corners} corners, has {len(spec.corners)}")
    report = verify_gadget(spec)
    if not report.passed:
        raise ReductionError(f"gadget {spec.name!r} fails verification: {', '.join(report.failures())}")


def reduce_4reg_to_cubic(g: Graph, gadget: GadgetSpec) -> ReductionResult:
    """4-regular G to a cubic graph using a verified 4-corner gadget."""
    _require_regular(g, 4, "the cubic reduction")
    if gadget.corner_inside_degree != 2 or gadget.internal_degree != 3:
        raise ReductionError("the cubic reduction needs corners of degree 2 and other vertices of degree 3")
    _require_verified(gadget, 4)
    r = _substitute(g, gadget.graph, list(gadget.corners), "cubic", (gadget.gamma - 1) * g.n)
    if r.output.regular_degree() != 3:
        raise AssertionError("cubic reduction produced a non-cubic graph")
    return r


def reduce_cubic_butterfly(g: Graph, gadget: GadgetSpec) -> ReductionResult:
    """Cubic G to a cubic (claw, butterfly, diamond, C4, C5, K4)-free graph."""
    _require_regular(g, 3, "the butterfly reduction")
    if gadget.graph.n != 9 or gadget.gamma != 3:
        raise ReductionError("the butterfly reduction needs the 9-vertex gadget with gamma 3")
    missing = set(BUTTERFLY_FORBIDDEN) - set(gadget.forbidden)
    if missing:
        raise ReductionError(f"gadget does not forbid {sorted(missing)}")
    _require_verified(gadget, 3)
    r = _substitute(g, gadget.graph, list(gadget.corners), "butterfly", 2 * g.n)
    report = check_class(r.output, BUTTERFLY_FORBIDDEN, expect_regular=3)
    if not report.ok:
        raise AssertionError(f"butterfly reduction output violates its class: {report.violations}")
    return r


def reduce_cubic_to_odd_regular(g: Graph, k: int) -> ReductionResult:
    """Cubic G to a k-regular graph by hanging (k-3)/2 copies of K_{k+1}-e on each vertex.

    The source vertex is joined to the two ends of the missing edge of
    every copy.  Offset: one extra vertex per copy.
    """
    if k < 5 or k % 2 == 0:
        raise ReductionError("k must be odd and at least 5")
    _require_regular(g, 3, "the odd-regular reduction")
    per = (k - 3) // 2
    block = k_minus_e(k + 1)
    s, t = k - 1, k  # the two highest vertices miss their edge
    edges = list(g.edges())
    labels = [f"v{v + 1}" for v in range(g.n)]
    placement = [range(v, v + 1) for v in range(g.n)]
    nxt = g.n
    for v in range(g.n):
        for c in range(per):
            base = nxt
            edges.extend((base + a, base + b) for a, b in block.edges())
            edges.extend([(v, base + s), (v, base + t)])
            labels.extend(f"v{v + 1}.K{c + 1}.{a + 1}" for a in range(block.n))
            placement.append(range(base, base + block.n))
            nxt += block.n
    out = Graph(nxt, edges, labels)
    if out.regular_degree() != k:
        raise AssertionError("odd-regular reduction produced an irregular graph")
    wiring = [Wire((u, v), (u, v)) for u, v in g.edges()]
    return ReductionResult(out, per * g.n, placement, wiring, f"odd:{k}", g.n)


def reduce_stretch_family(g: Graph, template: GadgetSpec, p: int, mode: str) -> ReductionResult:
    """Stretched-gadget reductions with an arbitrarily long girth parameter.

    ``mode='ck_free'`` takes a 4-regular G and a 4-corner template;
    ``mode='k_double_triangle'`` takes a cubic G and a 3-corner template.
    Each template stretch edge becomes an induced path of 3p vertices; when
    the template sets ``edge_stretch`` the inter-gadget edges get the same
    treatment.  Each such path costs exactly p more dominating vertices, so
    the claimed offset is ``(gamma - 1 + p * s) * n + p * m`` with s stretch
    edges and the last term only under ``edge_stretch``.
    """
    if p < 1:
        raise ReductionError("stretch parameter p must be >= 1")
    if mode == "ck_free":
        _require_regular(g, 4, "ck_free mode")
        want = 4
    elif mode == "k_double_triangle":
        _require_regular(g, 3, "k_double_triangle mode")
        want = 3
    else:
        raise ReductionError(f"unknown stretch mode {mode!r}")
    if len(template.corners) != want:
        raise ReductionError(f"{mode} needs a {want}-corner template")
    if not template.stretch_edges:
        raise ReductionError("template declares no stretch edges")
    _require_verified(template, want)
    h, corners = stretch(template, p)
    per_vertex = template.gamma - 1 + p * len(template.stretch_edges)
    edge_path = 3 * p if template.edge_stretch else 0
    offset = per_vertex * g.n + (p * g.m if template.edge_stretch else 0)
    tag = "ck" if mode == "ck_free" else "kdt"
    r = _substitute(g, h, corners, f"{tag}:{p}", offset, edge_path)
    if r.output.max_degree() > 3:
        raise AssertionError("stretch reduction produced a vertex of degree > 3")
    if not is_claw_free(r.output):
        raise AssertionError("stretch reduction produced a claw")
    # class re-check, as far as the pattern size limit allows
    if mode == "ck_free":
        pats = [f"C{k}" for k in range(4, min(12 * p, MAX_PATTERN) + 1)]
    else:
        pats = [f"dt:{3 * p - 1}"] if 3 * p + 5 <= MAX_PATTERN else []
    report = check_class(r.output, pats)
    if not report.ok:
        raise AssertionError(f"stretch reduction output violates its class: {report.violations}")
    r.notes["checked_patterns"] = pats
    return r


def verify_reduction(g: Graph, r: ReductionResult, node_cap: int | None = None) -> bool:
    """Exact check of gamma(output) == gamma(G) + offset."""
    src, out = gamma_pair(g, r, node_cap)
    return out == src + r.offset


def gamma_pair(g: Graph, r: ReductionResult, node_cap: int | None = None) -> tuple[int, int]:
    """(gamma(G), gamma(output))."""
    src = min_dominating(g, node_cap, lexicographic=False).size
    out = min_dominating(r.output, node_cap, lexicographic=False).size
    return src, out
