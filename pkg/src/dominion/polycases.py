"""Polynomial-time procedures for (claw, H)-free inputs and their dispatcher.

Each solver checks its own preconditions and raises
:class:`PreconditionError` (carrying the offending embedding when there is
one) instead of returning a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .domination import DominationResult, min_dominating
from .graph import Graph, bits, delete_vertices, induced_subgraph
from .named import copies, graph_from_spec
from .recognition import (
    CLAW,
    Embedding,
    contains_induced,
    find_induced_path,
    is_claw_free,
    is_isomorphic,
    triangles,
)

K3_2K1 = graph_from_spec("K3+2K1")


class PreconditionError(ValueError):
    def __init__(self, message: str, embedding: Embedding | None = None):
        self.embedding = embedding
        super().__init__(message if embedding is None else f"{message} (at {list(embedding)})")


class InternalInconsistency(AssertionError):
    pass


@dataclass(frozen=True)
class TraceStep:
    rule: str
    vertices: tuple[int, ...]
    detail: str = ""
    scope: tuple[int, ...] = ()  # the part of the input the rule was applied to


@dataclass
class StrategyTrace:
    steps: list[TraceStep] = field(default_factory=list)

    def add(self, rule: str, vertices=(), detail: str = "", scope=()) -> None:
        self.steps.append(TraceStep(rule, tuple(sorted(vertices)), detail, tuple(sorted(scope))))

    def replay(self) -> tuple[int, ...]:
        """The dominating set assembled from the steps."""
        out: set[int] = set()
        for s in self.steps:
            out.update(s.vertices)
        return tuple(sorted(out))

    def lines(self) -> list[str]:
        out = []
        for s in self.steps:
            vs = " ".join(str(v + 1) for v in s.vertices)
            out.append(f"{s.rule}\t{vs}\t{s.detail}".rstrip())
        return out


def _dominates(g: Graph, s) -> bool:
    return g.neighborhood(s) == g.full_mask


def bounded_gamma_solve(g: Graph, k: int) -> DominationResult | None:
    """Optimum by trying all sets of size <= k, smallest first; None if gamma > k."""
    if k < 1:
        raise ValueError("bound k must be >= 1")
    if g.n == 0:
        return DominationResult(0, ())
    tried = 0
    full = g.full_mask
    closed = [g.closed(v) for v in range(g.n)]
    for size in range(1, min(k, g.n) + 1):
        for s in combinations(range(g.n), size):
            tried += 1
            m = 0
            for v in s:
                m |= closed[v]
            if m == full:
                return DominationResult(size, s, tried, "exhaustive")
    return None


def leaf_reduce(g: Graph) -> tuple[Graph, tuple[int, ...], list[int]]:
    """Repeatedly take the support v of a leaf and delete N[v].

    Returns the reduced graph, the forced supports (original ids) and the
    original id of each vertex of the reduced graph.
    """
    emb = contains_induced(g, CLAW)
    if emb is not None:
        raise PreconditionError("leaf reduction needs a claw-free graph", emb)
    ids = list(range(g.n))
    forced = []
    cur = g
    while True:
        leaf = next((v for v in range(cur.n) if cur.degree(v) == 1), None)
        if leaf is None:
            break
        support = cur.neighbors(leaf)[0]
        forced.append(ids[support])
        gone = set(bits(cur.closed(support)))
        ids = [x for i, x in enumerate(ids) if i not in gone]
        cur = delete_vertices(cur, gone)
    return cur, tuple(sorted(forced)), ids


def _walk_order(g: Graph) -> list[int]:
    """Vertices of a connected max-degree-2 graph in path or cycle order."""
    start = next((v for v in range(g.n) if g.degree(v) <= 1), 0)
    order = [start]
    seen = 1 << start
    cur = start
    while len(order) < g.n:
        cur = (g.adj[cur] & ~seen & -(g.adj[cur] & ~seen)).bit_length() - 1
        order.append(cur)
        seen |= 1 << cur
    return order


def solve_path_or_cycle(g: Graph) -> DominationResult:
    """gamma = ceil(n/3) with every third vertex along the path or cycle."""
    if g.n == 0:
        return DominationResult(0, (), 0, "closed-form")
    if g.max_degree() > 2:
        v = next(v for v in range(g.n) if g.degree(v) > 2)
        raise PreconditionError(f"vertex {v} has degree {g.degree(v)} > 2")
    if not g.is_connected():
        raise PreconditionError("graph must be connected")
    order = _walk_order(g)
    n = g.n
    is_cycle = g.m == n and n >= 3
    if is_cycle:
        pick = order[0::3]
    else:
        pick = order[1::3]
        if n % 3 == 1:
            pick.append(order[-1])
    return DominationResult(len(pick), tuple(sorted(pick)), 0, "closed-form")


def solve_claw_kk1(g: Graph, k: int) -> DominationResult:
    """Claw-free and kK1-free: the optimum is an independent set of size < k."""
    emb = contains_induced(g, CLAW)
    if emb is not None:
        raise PreconditionError("graph is not claw-free", emb)
    emb = contains_induced(g, copies(k, 1))
    if emb is not None:
        raise PreconditionError(f"graph contains an independent set of size {k}", emb)
    if g.n == 0:
        return DominationResult(0, (), 0, "independent-enumeration")
    adj = g.adj
    tried = 0
    for size in range(1, k):
        for s in combinations(range(g.n), size):
            tried += 1
            if any(adj[a] >> b & 1 for a, b in combinations(s, 2)):
                continue
            if _dominates(g, s):
                return DominationResult(size, s, tried, "independent-enumeration")
    raise InternalInconsistency("no independent dominating set below the independence bound")


def solve_claw_k3_2k1(g: Graph) -> DominationResult:
    """Connected, claw-free, (K3+2K1)-free.

    Triangle-free inputs are paths or cycles.  Otherwise the vertices outside
    N[T] for a triangle T form a clique, so gamma <= 4.
    """
    if not g.is_connected():
        raise PreconditionError("graph must be connected")
    emb = contains_induced(g, CLAW)
    if emb is not None:
        raise PreconditionError("graph is not claw-free", emb)
    emb = contains_induced(g, K3_2K1)
    if emb is not None:
        raise PreconditionError("graph contains K3+2K1", emb)
    tris = triangles(g)
    if not tris:
        return solve_path_or_cycle(g)
    k = 3 if g.neighborhood(tris[0]) == g.full_mask else 4
    r = bounded_gamma_solve(g, k)
    if r is None:
        raise InternalInconsistency(f"gamma exceeds {k} on a claw-free (K3+2K1)-free graph")
    return r


def _is_edgeless(h: Graph) -> bool:
    return h.m == 0


def dispatch_solve(g: Graph, h: Graph | None = None) -> tuple[DominationResult, StrategyTrace]:
    """Solve with the cheapest rule whose precondition holds, per component."""
    trace = StrategyTrace()
    witness: list[int] = []
    for comp in g.components():
        ids = list(bits(comp))
        part = induced_subgraph(g, ids)
        witness.extend(_dispatch_component(part, ids, h, trace))
    witness.sort()
    return DominationResult(len(witness), tuple(witness), 0, "dispatch"), trace


def _dispatch_component(g: Graph, ids: list[int], h: Graph | None, trace: StrategyTrace) -> list[int]:
    def lift(vs) -> list[int]:
        return [ids[v] for v in vs]

    claw_free = is_claw_free(g)
    if claw_free:
        reduced, forced, keep = leaf_reduce(g)
        if forced:
            trace.add("leaf-reduction", lift(forced), f"removed {g.n - reduced.n} vertices", ids)
            out = lift(forced)
            for comp in reduced.components():
                sub_ids = list(bits(comp))
                sub = induced_subgraph(reduced, sub_ids)
                out.extend(_dispatch_component(sub, [ids[keep[v]] for v in sub_ids], h, trace))
            return out

    if g.max_degree() <= 2:
        r = solve_path_or_cycle(g)
        kind = "cycle" if g.m == g.n and g.n >= 3 else "path"
        trace.add("path-cycle", lift(r.witness), f"{kind} on {g.n} vertices", ids)
        return lift(r.witness)

    if h is not None and claw_free:
        if _is_edgeless(h) and h.n >= 1 and contains_induced(g, h) is None:
            r = solve_claw_kk1(g, h.n)
            trace.add("claw-kK1", lift(r.witness), f"k={h.n}", ids)
            return lift(r.witness)
        if is_isomorphic(h, K3_2K1) and contains_induced(g, K3_2K1) is None:
            r = solve_claw_k3_2k1(g)
            trace.add("claw-K3+2K1", lift(r.witness), f"gamma {r.size}", ids)
            return lift(r.witness)

    p8 = find_induced_path(g, 8)
    if p8 is not None and g.neighborhood(p8) == g.full_mask:
        r = bounded_gamma_solve(g, 8)
        if r is None:
            raise InternalInconsistency("N[P8] = V but gamma > 8")
        trace.add("bounded-gamma", lift(r.witness), "N[P8] = V, gamma <= 8", ids)
        return lift(r.witness)

    r = min_dominating(g)
    detail = "exact branch and bound"
    if h is not None:
        from .dichotomy import Verdict, classify

        c = classify(h)
        if c.verdict is Verdict.POLYNOMIAL:
            detail = f"polynomial per cited external algorithm ({c.reason}), exact fallback used"
    trace.add("exact", lift(r.witness), detail, ids)
    return lift(r.witness)
