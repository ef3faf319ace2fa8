"""Print the (claw, H)-free classification for every claw-free H on 4..6 vertices."""

from collections import Counter

from dominion import classify, classify_all, graph_from_spec

for n in (4, 5, 6):
    rows = classify_all(n)
    tally = Counter(str(r.classification.verdict) for r in rows)
    print(f"n={n}: {len(rows)} graphs, " + ", ".join(f"{v} {c}" for v, c in sorted(tally.items())))
    if n < 6:
        for r in rows:
            print("   ", r.name or "?", "->", r.classification.verdict, "|", r.classification.summary())

print()
# beyond six vertices only family memberships decide; the rest stays open
for spec in ["P:8", "P:9", "3K3", "C:8", "net", "dt:3"]:
    c = classify(graph_from_spec(spec))
    print(f"{spec:6s} {c.verdict}  {c.summary()}")
