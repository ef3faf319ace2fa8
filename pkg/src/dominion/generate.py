"""Seeded random graph generators for test corpora and experiments."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph


class GenerationError(RuntimeError):
    pass


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_graph(n: int, p: float, seed=None) -> Graph:
    """Erdos-Renyi G(n, p)."""
    rng = _rng(seed)
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_regular(n: int, k: int, seed=None, tries: int = 1000) -> Graph:
    """Random simple k-regular graph.

    Pairing model that only ever joins two points on distinct, not yet
    adjacent vertices (Steger-Wormald); restarts when it gets stuck.
    """
    if n * k % 2 or k >= n:
        raise GenerationError(f"no simple {k}-regular graph on {n} vertices")
    rng = _rng(seed)
    for _ in range(tries):
        left = [k] * n
        adj = [0] * n
        edges = []
        while len(edges) < n * k // 2:
            points = [v for v in range(n) for _ in range(left[v])]
            ok_pairs = [(a, b) for a, b in combinations(range(n), 2)
                        if left[a] and left[b] and not adj[a] >> b & 1]
            if not ok_pairs:
                break
            # pick a uniform point pair among the suitable ones
            while True:
                a, b = rng.choice(points), rng.choice(points)
                if a != b and not adj[a] >> b & 1:
                    break
            adj[a] |= 1 << b
            adj[b] |= 1 << a
            left[a] -= 1
            left[b] -= 1
            edges.append((min(a, b), max(a, b)))
        else:
            return Graph(n, sorted(edges))
    raise GenerationError(f"pairing model failed {tries} times for n={n}, k={k}")


def random_cubic(n: int, seed=None) -> Graph:
    return random_regular(n, 3, seed)


def _makes_claw(adj: list[int], u: int, v: int) -> bool:
    # adding uv creates a claw centred at u or v using the new edge
    for c, x in ((u, v), (v, u)):
        others = adj[c] & ~adj[x] & ~(1 << x)
        rest = others
        while rest:
            low = rest & -rest
            y = low.bit_length() - 1
            rest ^= low
            if others & ~adj[y] & ~low & ~((low << 1) - 1):
                return True
    return False


def random_claw_free(n: int, seed=None, density: float = 0.5) -> Graph:
    """Random claw-free graph: candidate edges in random order, each kept
    with probability ``density`` unless it would create a claw."""
    rng = _rng(seed)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    adj = [0] * n
    edges = []
    for u, v in pairs:
        if rng.random() >= density or _makes_claw(adj, u, v):
            continue
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        edges.append((u, v))
    return Graph(n, edges)


def random_connected(n: int, p: float, seed=None, tries: int = 1000) -> Graph:
    rng = _rng(seed)
    for _ in range(tries):
        g = random_graph(n, p, rng)
        if g.is_connected():
            return g
    raise GenerationError(f"no connected G({n}, {p}) sample in {tries} tries")
