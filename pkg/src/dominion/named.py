"""Generators for the small named graphs used throughout the package.

Vertex orders follow the usual textbook presentation, e.g. the claw is
``u, v1, v2, v3`` with the centre first, and the net is ``u1, u2, u3, v1, v2,
v3`` with ``ui vi`` the pendant edges.

Two graphs are not given an explicit definition where they are used and get
the one that keeps them claw-free: ``W4`` is the wheel C4 plus a hub, and
``dart`` is the diamond with a pendant vertex on one of its degree-2
vertices (some catalogues call this the kite and hang the pendant on a
degree-3 vertex instead, which creates a claw).
"""

from __future__ import annotations

from dataclasses import dataclass
from os import path as _path

from .graph import Graph, GraphError, complement, disjoint_union


@dataclass(frozen=True)
class NamedGraphId:
    name: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}:{','.join(map(str, self.params))}"


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("P(n) needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("C(n) needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(p: int) -> Graph:
    if p < 1:
        raise GraphError("K(p) needs p >= 1")
    return Graph(p, [(i, j) for i in range(p) for j in range(i + 1, p)])


def copies(k: int, p: int) -> Graph:
    """kK_p; k = 0 gives the empty graph."""
    if k < 0 or p < 1:
        raise GraphError("kK(p) needs k >= 0 and p >= 1")
    return disjoint_union(*[complete(p) for _ in range(k)]) if k else Graph(0)


def k_minus_e(p: int) -> Graph:
    """K_p without the edge between its two highest vertices (``s, t``)."""
    if p < 2:
        raise GraphError("K_minus_e(p) needs p >= 2")
    return Graph(p, [(i, j) for i in range(p) for j in range(i + 1, p) if (i, j) != (p - 2, p - 1)])


def triangle(k1: int, k2: int, k3: int) -> Graph:
    """Triangle 0,1,2 with pendant paths of k1, k2, k3 vertices at 0, 1, 2."""
    if min(k1, k2, k3) < 0:
        raise GraphError("triangle(k1,k2,k3) needs non-negative lengths")
    edges = [(0, 1), (1, 2), (0, 2)]
    nxt = 3
    for base, k in enumerate((k1, k2, k3)):
        prev = base
        for _ in range(k):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def double_triangle(k: int) -> Graph:
    """Triangles {0,1,2} and {3,4,5} joined by a path of k vertices from 0 to 3."""
    if k < 0:
        raise GraphError("double_triangle(k) needs k >= 0")
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    chain = [0] + list(range(6, 6 + k)) + [3]
    edges += list(zip(chain, chain[1:]))
    return Graph(6 + k, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def prism() -> Graph:
    """C3 x K2."""
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def hypercube(d: int) -> Graph:
    n = 1 << d
    return Graph(n, [(v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)])


_FIXED = {
    "claw": (4, [(0, 1), (0, 2), (0, 3)]),
    "diamond": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    "paw": (4, [(0, 1), (1, 2), (0, 2), (0, 3)]),
    "bull": (5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]),
    "net": (6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]),
    # u1, u2, v, v1, v2
    "butterfly": (5, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 2), (4, 2)]),
    # u1..u4, v
    "house": (5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)]),
    "gem": (5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)]),
    "W4": (5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4), (2, 4), (3, 4)]),
    "dart": (5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4)]),
}

_PARAM = {
    "P": (path, 1),
    "C": (cycle, 1),
    "K": (complete, 1),
    "kK": (copies, 2),
    "tri": (triangle, 3),
    "dt": (double_triangle, 1),
    "Kme": (k_minus_e, 1),
    "Kab": (complete_bipartite, 2),
    "Q": (hypercube, 1),
}

_ALIASES = {
    "triangle": "tri",
    "double_triangle": "dt",
    "K_minus_e": "Kme",
    "kKp": "kK",
}

_SPECIAL = {"petersen": petersen, "prism": prism, "cube": lambda: hypercube(3)}


def named_graph(id: NamedGraphId | str, *params: int) -> Graph:
    """Build a named graph from an id, or from a name plus integer params."""
    if isinstance(id, NamedGraphId):
        name, params = id.name, id.params
    else:
        name = id
    name = _ALIASES.get(name, name)
    if name in _FIXED:
        if params:
            raise GraphError(f"{name} takes no parameters")
        n, edges = _FIXED[name]
        return Graph(n, edges)
    if name in _SPECIAL:
        if params:
            raise GraphError(f"{name} takes no parameters")
        return _SPECIAL[name]()
    if name in _PARAM:
        fn, arity = _PARAM[name]
        if len(params) != arity:
            raise GraphError(f"{name} takes {arity} parameter(s), got {len(params)}")
        return fn(*params)
    raise GraphError(f"unknown named graph {name!r}")


def graph_from_spec(spec: str) -> Graph:
    """Parse a graph spec such as ``gem``, ``P:7``, ``tri:2,1,0``, ``kK:2,3``.

    Terms may be joined with ``+`` (disjoint union), prefixed by ``co-``
    (complement) or by an integer multiplicity (``2K:3`` is 2K3); the
    shorthands ``K1``..``K9``, ``P4``, ``C5`` work without a colon.  A spec
    naming an existing file is read as an edge list.
    """
    spec = spec.strip()
    if _path.isfile(spec):
        from .formats import read_graph

        return read_graph(spec)
    if spec.startswith("co-(") and spec.endswith(")") and _balanced(spec[4:-1]):
        return complement(graph_from_spec(spec[4:-1]))
    if spec.startswith("(") and spec.endswith(")") and _balanced(spec[1:-1]):
        return graph_from_spec(spec[1:-1])
    parts = _split_plus(spec)
    if len(parts) > 1:
        return disjoint_union(*(graph_from_spec(p) for p in parts))
    return _term(spec)


def _balanced(s: str) -> bool:
    depth = 0
    for ch in s:
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            return False
    return depth == 0


def _split_plus(spec: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in spec:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return [p.strip() for p in parts]


def _term(term: str) -> Graph:
    if term.startswith("co-"):
        return complement(graph_from_spec(term[3:]))
    mult = ""
    while term and term[0].isdigit():
        mult += term[0]
        term = term[1:]
    if mult:
        g = _term(term)
        return disjoint_union(*[g] * int(mult))
    term = _ALIASES.get(term, term)
    if ":" in term:
        name, _, raw = term.partition(":")
        try:
            params = tuple(int(x) for x in raw.split(","))
        except ValueError:
            raise GraphError(f"bad parameters in {term!r}") from None
        return named_graph(name, *params)
    if len(term) > 1 and term[0] in "PCKQ" and term[1:].isdigit():
        return named_graph(term[0], int(term[1:]))
    return named_graph(term)
