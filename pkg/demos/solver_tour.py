"""Exact domination on a few small graphs, and the variants the solver offers."""

from dominion import (
    PartialDominationQuery,
    critical_vertices,
    enumerate_min_dominating,
    graph_from_spec,
    min_dominating,
    min_edge_dominating,
    min_independent_dominating,
    min_partial_dominating,
)

for spec in ["P:7", "C:9", "petersen", "gem", "Kab:3,3", "dt:2"]:
    g = graph_from_spec(spec)
    r = min_dominating(g)
    i = min_independent_dominating(g)
    print(f"{spec:10s} n={g.n:2d} gamma={r.size} i={i.size} witness={[v + 1 for v in r.witness]} nodes={r.explored}")

# optima of C6: one set per rotation class
print("C6 optima:", enumerate_min_dominating(graph_from_spec("C:6")))

# the claw centre is the only vertex whose removal hurts
print("critical in claw:", critical_vertices(graph_from_spec("claw")))

# edge domination goes through the line graph
print("edge domination of C7:", min_edge_dominating(graph_from_spec("C:7")).witness)

# dominate only the leaves of a star, but without using the centre
star = graph_from_spec("Kab:1,5")
leaves = frozenset(range(1, 6))
r = min_partial_dominating(star, PartialDominationQuery(targets=leaves, allowed=leaves))
print("star leaves without the centre:", r.size)
