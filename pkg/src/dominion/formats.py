"""DIMACS-style edge-list text.

::

    c optional comment lines
    p edge <n> <m>
    e <u> <v>        (m lines, 1-based ids)
"""

from __future__ import annotations

from os import PathLike

from .graph import Graph, GraphFormatError


def parse_graph(text: str) -> Graph:
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise GraphFormatError("second problem line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphFormatError(f"expected 'p edge <n> <m>', got {line!r}", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError(f"non-integer counts in {line!r}", lineno) from None
            if n < 0 or m < 0:
                raise GraphFormatError("negative counts", lineno)
        elif tag == "e":
            if len(parts) != 3:
                raise GraphFormatError(f"expected 'e <u> <v>', got {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"non-integer vertex in {line!r}", lineno) from None
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            if n is not None and not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"vertex id out of range 1..{n} in {line!r}", lineno)
            if n is None and (u < 1 or v < 1):
                raise GraphFormatError(f"vertex id out of range in {line!r}", lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(f"duplicate edge {key[0]} {key[1]}", lineno)
            seen.add(key)
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"unknown line type {tag!r}", lineno)
    if n is None:
        # bare edge lists are accepted; vertex count is the largest id
        n = max((max(e) + 1 for e in edges), default=0)
    elif m != len(edges):
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    return Graph(n, edges)


def format_graph(g: Graph, comments: list[str] | None = None) -> str:
    lines = [f"c {c}" for c in comments or ()]
    edges = g.edges()
    lines.append(f"p edge {g.n} {len(edges)}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def read_graph(path: str | PathLike) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path: str | PathLike, comments: list[str] | None = None) -> None:
    with open(path, "w") as fh:
        fh.write(format_graph(g, comments))
