"""Simple undirected graphs over dense vertex ids with bitmask rows.

Every row ``adj[v]`` is a Python int whose bit ``u`` is set iff ``uv`` is an
edge.  Graphs are immutable; all algebra returns new graphs.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 65535


class GraphError(ValueError):
    """Invalid graph construction or vertex selection."""


class GraphFormatError(GraphError):
    """Malformed edge-list text; ``line`` is the 1-based offending line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph.

    Equality is label-sensitive: two graphs are equal when they have the same
    vertex count, the same rows and the same labels.
    """

    __slots__ = ("_n", "_adj", "_labels", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels: Sequence[str] | None = None):
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if rows[u] >> v & 1:
                raise GraphError(f"duplicate edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self._init(n, tuple(rows), labels)

    def _init(self, n, rows, labels):
        self._n = n
        self._adj = rows
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise GraphError(f"{len(labels)} labels for {n} vertices")
        self._labels = labels
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Sequence[int], labels: Sequence[str] | None = None) -> "Graph":
        """Build from bitmask rows, checking symmetry and irreflexivity."""
        n = len(rows)
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= {n}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        g = cls.__new__(cls)
        g._init(n, tuple(rows), labels)
        return g

    @classmethod
    def _trusted(cls, rows: tuple[int, ...], labels=None) -> "Graph":
        g = cls.__new__(cls)
        g._n = len(rows)
        g._adj = rows
        g._labels = labels
        g._hash = None
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def labels(self) -> tuple[str, ...] | None:
        return self._labels

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self._adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj and self._labels == other._labels

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._adj, self._labels))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"

    def __add__(self, other: "Graph") -> "Graph":
        return disjoint_union(self, other)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._adj[v]))

    def closed(self, v: int) -> int:
        """Closed neighbourhood N[v] as a mask."""
        return self._adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self._adj):
            for v in bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def neighborhood(self, vertices: Iterable[int]) -> int:
        """Closed neighbourhood N[S] of a vertex collection, as a mask."""
        m = 0
        for v in vertices:
            m |= self._adj[v] | (1 << v)
        return m

    def regular_degree(self) -> int | None:
        """The common degree if the graph is regular, else ``None``."""
        degs = set(self.degrees())
        if len(degs) == 1:
            return degs.pop()
        if not degs:
            return 0
        return None

    def components(self) -> list[int]:
        """Connected components as masks, ordered by smallest vertex."""
        seen = 0
        comps = []
        for s in range(self._n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self._adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def relabel(self, labels: Sequence[str] | None) -> "Graph":
        g = Graph._trusted(self._adj)
        g._init(self._n, self._adj, labels)
        return g


def complement(g: Graph) -> Graph:
    full = g.full_mask
    rows = tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj))
    return Graph._trusted(rows, g.labels)


def disjoint_union(*graphs: Graph) -> Graph:
    """Union with each operand shifted past the vertices of the previous ones."""
    rows: list[int] = []
    labels: list[str] | None = []
    for h in graphs:
        off = len(rows)
        rows.extend(r << off for r in h.adj)
        if labels is not None and h.labels is not None:
            labels.extend(h.labels)
        else:
            labels = None
    if not graphs or labels is None:
        labels = None
    return Graph._trusted(tuple(rows), tuple(labels) if labels is not None else None)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """G[S] with vertices renumbered in ascending order of ``vertices``."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(keep)}
    sel = mask_of(keep)
    rows = []
    for v in keep:
        r = 0
        for u in bits(g.adj[v] & sel):
            r |= 1 << index[u]
        rows.append(r)
    labels = tuple(g.labels[v] for v in keep) if g.labels is not None else None
    return Graph._trusted(tuple(rows), labels)


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    drop = set(vertices)
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))


def line_graph(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """L(G) together with the edge of G behind each vertex of L(G)."""
    edges = g.edges()
    at: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        at[u].append(i)
        at[v].append(i)
    rows = [0] * len(edges)
    for incident in at:
        for i, j in combinations(incident, 2):
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    labels = tuple(f"{u + 1}-{v + 1}" for u, v in edges)
    return Graph._trusted(tuple(rows), labels), edges


def check_invariants(g: Graph) -> None:
    """Full scan of symmetry, irreflexivity and row range; raises GraphError."""
    Graph.from_rows(g.adj, g.labels)
