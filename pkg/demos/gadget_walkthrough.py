"""Verify the shipped gadgets, then rediscover the 9-vertex one by exhaustive search."""

import time

from dominion import builtin_gadget, is_isomorphic, search_gadget, verify_gadget

for name in ["butterfly9", "butterfly9_stretch", "pair20", "cubic24"]:
    spec = builtin_gadget(name)
    rep = verify_gadget(spec)
    print(f"{name:20s} n={spec.graph.n:2d} corners={len(spec.corners)} gamma={rep.gamma} "
          f"{'passed' if rep.passed else 'failed: ' + ','.join(rep.failures())}")

b9 = builtin_gadget("butterfly9")
t = time.time()
found = search_gadget(9, 3, forbidden=b9.forbidden, gamma=3)
print(f"search over cubic-with-degree-2-corners graphs on 9 vertices: {len(found)} gadget(s) in {time.time() - t:.1f}s")
for s in found:
    same = is_isomorphic(s.graph, b9.graph, s.corner_mask, b9.corner_mask)
    print("  edges", s.graph.edges(), "(the shipped one)" if same else "")
