"""Exact domination numbers by branch and bound.

The search branches on the undominated vertex with the fewest remaining
candidate dominators and tries each candidate in turn, excluding it from
later siblings so every dominating set is reached along a single path.
Nodes are pruned with two lower bounds on the number of further vertices
needed: a greedy packing of undominated vertices with pairwise disjoint
candidate sets, and the fractional cover bound sum(1 / best coverage).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .graph import Graph, bits, delete_vertices, line_graph, mask_of

DEFAULT_NODE_CAP = 10**9
BOUND_KIND = "packing+fractional"


class SearchLimitExceeded(RuntimeError):
    """The node cap was hit before the search finished."""


class InfeasibleQuery(ValueError):
    """Some target vertex has no allowed dominator at all."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"target {vertex} has no allowed vertex in its closed neighbourhood")


@dataclass(frozen=True)
class DominationResult:
    size: int
    witness: tuple
    explored: int = 0
    lower_bound_kind: str = BOUND_KIND


@dataclass(frozen=True)
class PartialDominationQuery:
    """Dominate ``targets`` using only vertices from ``allowed``.

    ``None`` for either set means every vertex.
    """

    targets: frozenset[int] | None = None
    allowed: frozenset[int] | None = None
    budget: int | None = None

    def masks(self, g: Graph) -> tuple[int, int]:
        full = g.full_mask
        t = full if self.targets is None else mask_of(self.targets)
        a = full if self.allowed is None else mask_of(self.allowed)
        if t & ~full or a & ~full:
            raise ValueError("query references a vertex outside the graph")
        return t, a


class _Search:
    def __init__(self, g: Graph, node_cap: int | None = None, independent: bool = False):
        self.closed = [row | (1 << v) for v, row in enumerate(g.adj)]
        self.cap = DEFAULT_NODE_CAP if node_cap is None else node_cap
        self.independent = independent
        self.nodes = 0

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.cap:
            raise SearchLimitExceeded(f"node cap {self.cap} exhausted")

    def _after(self, w: int, a: int) -> int:
        return a & ~self.closed[w] if self.independent else a

    def bound(self, u_mask: int, a: int):
        """Return (lower bound, branching vertex, its candidates) or None if dead."""
        closed = self.closed
        reach = 0
        for u in bits(u_mask):
            reach |= closed[u]
        reach &= a
        cov = {w: (closed[w] & u_mask).bit_count() for w in bits(reach)}
        per_max: dict[int, int] = {}
        best_u, best_c, best_n = -1, 0, 1 << 30
        opts = []
        for u in bits(u_mask):
            c = closed[u] & a
            if not c:
                return None
            cnt = c.bit_count()
            if cnt < best_n:
                best_u, best_c, best_n = u, c, cnt
            mx = max(cov[w] for w in bits(c))
            per_max[mx] = per_max.get(mx, 0) + 1
            opts.append((cnt, u, c))
        lcm = 1
        for c in per_max:
            lcm = lcm * c // math.gcd(lcm, c)
        num = sum(k * (lcm // c) for c, k in per_max.items())
        frac = -(-num // lcm)
        opts.sort()
        blocked = 0
        pack = 0
        for _, _, c in opts:
            if not c & blocked:
                pack += 1
                blocked |= c
        return max(frac, pack), best_u, best_c

    def _order(self, cand: int, u_mask: int, prune: bool) -> list[int]:
        closed = self.closed
        ws = [(-(closed[w] & u_mask).bit_count(), w) for w in bits(cand)]
        ws.sort()
        if not prune:
            return [w for _, w in ws]
        # a candidate whose new coverage is inside another candidate's is never needed
        keep = []
        covs = [(w, closed[w] & u_mask) for _, w in ws]
        for i, (w, cw) in enumerate(covs):
            if any((cw & ~cx) == 0 and (cw != cx or j < i) for j, (x, cx) in enumerate(covs) if j != i):
                continue
            keep.append(w)
        return keep

    def greedy(self, u_mask: int, a: int) -> list[int] | None:
        closed = self.closed
        chosen = []
        while u_mask:
            best_w, best_c = -1, 0
            for u in bits(u_mask):
                if not closed[u] & a:
                    return None
            for w in bits(a):
                c = (closed[w] & u_mask).bit_count()
                if c > best_c:
                    best_w, best_c = w, c
            if best_w < 0:
                return None
            chosen.append(best_w)
            u_mask &= ~closed[best_w]
            a = self._after(best_w, a)
        return chosen

    def minimum(self, u_mask: int, a: int, budget: int | None = None) -> list[int] | None:
        """A smallest set (any) dominating ``u_mask`` from ``a`` of size <= budget."""
        limit = budget if budget is not None else 1 << 30
        best: list[int] | None = None
        g = self.greedy(u_mask, a)
        if g is not None and len(g) <= limit:
            best = g
            limit = len(g) - 1
        prune = not self.independent
        closed = self.closed
        chosen: list[int] = []

        def rec(um: int, am: int) -> None:
            nonlocal best, limit
            self._tick()
            if not um:
                best = list(chosen)
                limit = len(chosen) - 1
                return
            k = len(chosen)
            if k >= limit + 1:
                return
            b = self.bound(um, am)
            if b is None:
                return
            lb, _, cand = b
            if k + lb > limit:
                return
            for w in self._order(cand, um, prune):
                chosen.append(w)
                rec(um & ~closed[w], self._after(w, am))
                chosen.pop()
                am &= ~(1 << w)
                if k + 1 > limit:
                    break

        rec(u_mask, a)
        return best

    def enumerate(self, u_mask: int, a: int, size: int, limit: int | None) -> list[tuple[int, ...]]:
        """Dominating sets of exactly ``size`` (assumed optimal), up to ``limit``."""
        found: list[tuple[int, ...]] = []
        closed = self.closed
        chosen: list[int] = []

        class _Done(Exception):
            pass

        def rec(um: int, am: int) -> None:
            self._tick()
            if not um:
                if len(chosen) == size:
                    found.append(tuple(sorted(chosen)))
                    if limit is not None and len(found) >= limit:
                        raise _Done
                return
            k = len(chosen)
            b = self.bound(um, am)
            if b is None:
                return
            lb, _, cand = b
            if k + lb > size:
                return
            for w in sorted(bits(cand)):
                chosen.append(w)
                rec(um & ~closed[w], self._after(w, am))
                chosen.pop()
                am &= ~(1 << w)

        try:
            rec(u_mask, a)
        except _Done:
            pass
        return sorted(found)

    def enumerate_lex(self, u_mask: int, a: int, size: int, limit: int) -> list[tuple[int, ...]]:
        """The first ``limit`` dominating sets of ``size`` in lexicographic order.

        Decides vertices in ascending order, taking each before skipping it,
        so hits arrive already sorted.
        """
        found: list[tuple[int, ...]] = []
        closed = self.closed
        chosen: list[int] = []

        def rec(um: int, am: int) -> bool:
            self._tick()
            if not um:
                if len(chosen) == size:
                    found.append(tuple(chosen))
                    return len(found) >= limit
                return False
            b = self.bound(um, am)
            if b is None or len(chosen) + b[0] > size:
                return False
            w = (am & -am).bit_length() - 1
            rest = am & ~(1 << w)
            if closed[w] & um:
                chosen.append(w)
                done = rec(um & ~closed[w], self._after(w, rest))
                chosen.pop()
                if done:
                    return True
            return rec(um, rest)

        rec(u_mask, a)
        return found

    def lex_least(self, u_mask: int, a: int, known: list[int]) -> list[int]:
        """Lexicographically least optimum, given one optimum ``known``."""
        closed = self.closed
        known = sorted(known)
        size = len(known)
        prefix: list[int] = []
        while len(prefix) < size:
            left = size - len(prefix) - 1
            for v in bits(a):
                above = a & ~((2 << v) - 1)
                if v == known[0]:
                    known = known[1:]
                elif not closed[v] & u_mask:
                    continue  # covers nothing new, so it is in no optimum
                else:
                    um = u_mask & ~closed[v]
                    rest = [] if not um else self.minimum(um, self._after(v, above), left)
                    if rest is None:
                        continue
                    known = sorted(rest)
                    if len(known) < left:
                        raise AssertionError("found a smaller dominating set than the optimum")
                prefix.append(v)
                u_mask &= ~closed[v]
                a = self._after(v, above)
                break
            else:
                raise AssertionError("lexicographic refinement lost the optimum")
        return prefix


def _component_parts(g: Graph, targets: int, allowed: int) -> list[tuple[int, int]]:
    parts = []
    for comp in g.components():
        t = targets & comp
        if t:
            parts.append((t, allowed & comp))
    return parts


def _check_feasible(search: _Search, targets: int, allowed: int) -> None:
    for t in bits(targets):
        if not search.closed[t] & allowed:
            raise InfeasibleQuery(t)


def _solve(g: Graph, targets: int, allowed: int, budget: int | None, node_cap: int | None,
           independent: bool = False, lexicographic: bool = True) -> DominationResult | None:
    search = _Search(g, node_cap, independent)
    _check_feasible(search, targets, allowed)
    witness: list[int] = []
    remaining = budget
    for t, a in _component_parts(g, targets, allowed):
        part = search.minimum(t, a, remaining)
        if part is None:
            return None
        if lexicographic:
            part = search.lex_least(t, a, part)
        witness.extend(part)
        if remaining is not None:
            remaining -= len(part)
    return DominationResult(len(witness), tuple(sorted(witness)), search.nodes)


def is_dominating(g: Graph, s: Iterable[int], targets: Iterable[int] | None = None) -> bool:
    covered = g.neighborhood(s)
    want = g.full_mask if targets is None else mask_of(targets)
    return want & ~covered == 0


def min_dominating(g: Graph, node_cap: int | None = None, lexicographic: bool = True) -> DominationResult:
    """gamma(G) with the lexicographically least minimum dominating set.

    With ``lexicographic=False`` the witness is whatever optimum the search
    meets first, which saves the refinement pass on large instances.
    """
    full = g.full_mask
    return _solve(g, full, full, None, node_cap, lexicographic=lexicographic)


def min_partial_dominating(g: Graph, query: PartialDominationQuery, node_cap: int | None = None,
                           lexicographic: bool = True) -> DominationResult | None:
    """Smallest subset of ``allowed`` dominating ``targets``.

    Returns ``None`` when a budget is given and no set within it exists;
    raises InfeasibleQuery when some target cannot be dominated at all.
    """
    t, a = query.masks(g)
    return _solve(g, t, a, query.budget, node_cap, lexicographic=lexicographic)


def enumerate_min_dominating(g: Graph, limit: int | None = None, node_cap: int | None = None) -> list[tuple[int, ...]]:
    """Minimum dominating sets in lexicographic order, the first ``limit`` of them."""
    if limit is not None and limit < 1:
        raise ValueError("limit must be >= 1")
    full = g.full_mask
    if g.n == 0:
        return [()]
    search = _Search(g, node_cap)
    best = search.minimum(full, full)
    if limit is None:
        return search.enumerate(full, full, len(best), None)
    return search.enumerate_lex(full, full, len(best), limit)


def min_independent_dominating(g: Graph, node_cap: int | None = None) -> DominationResult:
    """i(G): the minimum size of a maximal independent set."""
    full = g.full_mask
    return _solve(g, full, full, None, node_cap, independent=True)


def min_edge_dominating(g: Graph, node_cap: int | None = None) -> DominationResult:
    """Minimum edge dominating set, solved as domination in the line graph.

    The witness holds edges ``(u, v)`` of ``g`` with ``u < v``.
    """
    if g.m == 0:
        raise ValueError("edge domination needs at least one edge")
    lg, edges = line_graph(g)
    r = min_dominating(lg, node_cap)
    return DominationResult(r.size, tuple(edges[i] for i in r.witness), r.explored, r.lower_bound_kind)


def critical_vertices(g: Graph, node_cap: int | None = None) -> tuple[int, ...]:
    """Vertices whose deletion strictly increases gamma."""
    gamma = min_dominating(g, node_cap, lexicographic=False).size
    return tuple(
        v for v in range(g.n)
        if min_dominating(delete_vertices(g, [v]), node_cap, lexicographic=False).size > gamma
    )


def domination_number(g: Graph, node_cap: int | None = None) -> int:
    return min_dominating(g, node_cap, lexicographic=False).size


def independence_number(g: Graph) -> int:
    """alpha(G) by simple branching; only meant for small graphs."""
    adj = g.adj

    def rec(cand: int) -> int:
        if not cand:
            return 0
        v = (cand & -cand).bit_length() - 1
        if not adj[v] & cand:
            return 1 + rec(cand & ~(1 << v))
        return max(1 + rec(cand & ~adj[v] & ~(1 << v)), rec(cand & ~(1 << v)))

    return rec(g.full_mask)
