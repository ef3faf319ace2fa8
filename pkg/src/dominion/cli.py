"""Command-line entry point: ``dominion <command> ...``.

Exit codes: 0 success, 1 domain error (bad graph, failed precondition,
failed verification), 2 usage error, 3 solver node cap exhausted.
Graph arguments accept a file in the edge-list format or a named spec such
as ``gem``, ``P:7``, ``C:6``, ``tri:2,1,0`` or ``K3+2K1``.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .dichotomy import Row, classify, classify_all, identify
from .domination import (
    InfeasibleQuery,
    PartialDominationQuery,
    SearchLimitExceeded,
    enumerate_min_dominating,
    min_dominating,
    min_edge_dominating,
    min_independent_dominating,
    min_partial_dominating,
)
from .formats import format_graph
from .gadgets import GadgetError, builtin_gadget, load_gadget, save_gadget, search_gadget, verify_gadget
from .generate import GenerationError, random_claw_free, random_connected, random_graph, random_regular
from .graph import GraphError
from .named import graph_from_spec
from .polycases import InternalInconsistency, PreconditionError, dispatch_solve
from .recognition import check_class
from .reductions import (
    ReductionError,
    ReductionResult,
    gamma_pair,
    reduce_4reg_to_cubic,
    reduce_cubic_butterfly,
    reduce_cubic_to_odd_regular,
    reduce_stretch_family,
)

DOMAIN_ERRORS = (GraphError, GadgetError, ReductionError, PreconditionError, InfeasibleQuery,
                 GenerationError, InternalInconsistency, ValueError, OSError)


class _Fail(Exception):
    """Domain-level failure with a message for stderr."""


def _ids(vs) -> str:
    return " ".join(str(v + 1) for v in vs)


def _node_cap(args) -> int | None:
    if args.node_cap is not None:
        return args.node_cap
    env = os.environ.get("DOMINION_NODE_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise _Fail(f"DOMINION_NODE_CAP is not an integer: {env!r}") from None
    return None


def _read_ids(path: str) -> frozenset[int]:
    try:
        return frozenset(int(tok) - 1 for tok in Path(path).read_text().split())
    except ValueError as exc:
        raise _Fail(f"{path}: vertex ids must be integers ({exc})") from None


def _gadget(ref: str | None, default: str):
    if ref is None:
        return builtin_gadget(default)
    if Path(ref).is_file():
        return load_gadget(ref)
    return builtin_gadget(ref)


# --- commands -------------------------------------------------------------


def cmd_gen(args, out):
    kind = args.kind
    if kind == "named":
        if not args.spec:
            raise _Fail("gen named needs --spec")
        g = graph_from_spec(args.spec)
    elif args.n is None:
        raise _Fail(f"gen {kind} needs --n")
    elif kind == "gnp":
        g = random_graph(args.n, args.p, args.seed)
    elif kind == "connected":
        g = random_connected(args.n, args.p, args.seed)
    elif kind == "regular":
        g = random_regular(args.n, args.k, args.seed)
    elif kind == "cubic":
        g = random_regular(args.n, 3, args.seed)
    else:
        g = random_claw_free(args.n, args.seed, args.p)
    comments = [f"gen {kind}" + (f" seed {args.seed}" if args.seed is not None and kind != "named" else "")]
    out.write(format_graph(g, comments))


def cmd_solve(args, out):
    g = graph_from_spec(args.graph)
    cap = _node_cap(args)
    if args.strategy == "auto":
        h = graph_from_spec(args.forbidden) if args.forbidden else None
        r, trace = dispatch_solve(g, h)
        out.write(f"gamma {r.size}\nset {_ids(r.witness)}\n")
        for line in trace.lines():
            out.write(line + "\n")
        return 0
    if args.edges:
        r = min_edge_dominating(g, cap)
        out.write(f"gamma {r.size}\n")
        out.write("edges " + " ".join(f"{u + 1}-{v + 1}" for u, v in r.witness) + "\n")
        return 0
    if args.enumerate is not None:
        sets = enumerate_min_dominating(g, args.enumerate, cap)
        out.write(f"gamma {len(sets[0])}\ncount {len(sets)}\n")
        for s in sets:
            out.write(f"set {_ids(s)}\n")
        return 0
    if args.partial or args.allowed or args.budget is not None:
        q = PartialDominationQuery(
            targets=_read_ids(args.partial) if args.partial else None,
            allowed=_read_ids(args.allowed) if args.allowed else None,
            budget=args.budget,
        )
        try:
            r = min_partial_dominating(g, q, cap)
        except InfeasibleQuery as exc:
            raise _Fail(f"target {exc.vertex + 1} has no allowed vertex in its closed neighbourhood") from None
        if r is None:
            out.write(f"none within budget {args.budget}\n")
            return 1
    elif args.independent:
        r = min_independent_dominating(g, cap)
    else:
        r = min_dominating(g, cap)
    out.write(f"gamma {r.size}\nset {_ids(r.witness)}\nnodes {r.explored}\n")
    return 0


def cmd_recognize(args, out):
    g = graph_from_spec(args.graph)
    forbid = [s for s in args.forbid.split(",") if s] if args.forbid else []
    rep = check_class(g, forbid, args.regular)
    rows = [("ok", "yes" if rep.ok else "no"),
            ("vertices", str(g.n)),
            ("edges", str(g.m)),
            ("claw_free", "yes" if rep.claw_free else "no"),
            ("regular_degree", "-" if rep.regular_degree is None else str(rep.regular_degree))]
    if args.regular is not None:
        rows.append(("expected_regular", f"{args.regular} {'ok' if rep.regular_ok else 'violated'}"))
    for name, emb in rep.forbidden_hits:
        rows.append((f"forbid {name}", "absent" if emb is None else f"present at {_ids(emb)}"))
    width = max(len(k) for k, _ in rows)
    for k, v in rows:
        out.write(f"{k.ljust(width)}  {v}\n")
    return 0


def cmd_classify(args, out):
    h = graph_from_spec(args.graph)
    c = classify(h)
    out.write(f"{c.verdict}\n")
    if c.kernel is not None:
        out.write(f"kernel {c.kernel} at {_ids(c.embedding)}\n")
    if c.reason is not None:
        out.write(f"reason {c.reason}\n")
    out.write(f"citation {c.citation}\n")
    name = identify(h) if h.n <= 6 else None
    if name:
        out.write(f"name {name}\n")
    return 0


def _classify_row(h):
    return Row(h, identify(h), classify(h))


def cmd_classify_all(args, out):
    rows = classify_all(args.n)
    if args.jobs > 1:
        # recompute in worker processes; map keeps the row order
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_classify_row, [r.graph for r in rows]))
    out.write("edges\tverdict\twitness_or_reason\tcitation\tname\n")
    for r in rows:
        out.write(r.tsv() + "\n")
    return 0


def _reduce(g, mode: str, gadget_ref: str | None) -> ReductionResult:
    if mode == "cubic":
        return reduce_4reg_to_cubic(g, _gadget(gadget_ref, "cubic24"))
    if mode == "butterfly":
        return reduce_cubic_butterfly(g, _gadget(gadget_ref, "butterfly9"))
    kind, _, arg = mode.partition(":")
    try:
        val = int(arg)
    except ValueError:
        raise _Fail(f"mode {mode!r} needs an integer after the colon") from None
    if kind == "odd":
        return reduce_cubic_to_odd_regular(g, val)
    if kind == "ck":
        return reduce_stretch_family(g, _gadget(gadget_ref, "pair20"), val, "ck_free")
    if kind == "kdt":
        return reduce_stretch_family(g, _gadget(gadget_ref, "butterfly9_stretch"), val, "k_double_triangle")
    raise _Fail(f"unknown mode {mode!r}")


def cmd_reduce(args, out):
    g = graph_from_spec(args.graph)
    r = _reduce(g, args.mode, args.gadget)
    if args.out:
        r.save(args.out)
        out.write(f"offset {r.offset}\nvertices {r.output.n}\nedges {r.output.m}\nwritten {args.out}\n")
    else:
        out.write(format_graph(r.output, [f"reduction {r.mode}, offset {r.offset}"]))
    return 0


def cmd_verify_gadget(args, out):
    spec = _gadget(args.file, "butterfly9")
    rep = verify_gadget(spec, _node_cap(args))
    out.write(f"{'passed' if rep.passed else 'failed'} {spec.name}\n")
    out.write(f"gamma {rep.gamma} (claimed {spec.gamma})\n")
    out.write(f"p1 {'ok' if rep.p1 else 'FAIL'}  optimum containing every corner: "
              f"{_ids(rep.p1_witness) if rep.p1_witness else '-'}\n")
    for ev in rep.corner_evidence:
        detail = (f"gamma(H-{ev.corner + 1}) = {ev.gamma_without}, optimum {_ids(ev.witness)}"
                  f"{'' if ev.unique else ' (not unique)'}{'' if ev.avoids_corners else ' (uses a corner)'}")
        ok = ev.ok and ev.gamma_without == spec.gamma - 1
        out.write(f"p2 {'ok' if ok else 'FAIL'}  corner {ev.corner + 1}: {detail}\n")
    if rep.p3:
        out.write(f"p3 ok  no {spec.gamma - 2} vertices dominate the non-corners\n")
    else:
        out.write(f"p3 FAIL  non-corners dominated by {_ids(rep.p3_counterexample)}\n")
    hits = ", ".join(f"{n} at {_ids(e)}" for n, e in rep.forbidden_hits)
    out.write(f"forbidden {'ok' if rep.forbidden_ok else 'FAIL ' + hits}\n")
    return 0 if rep.passed else 1


def cmd_search_gadget(args, out):
    forbid = [s for s in args.forbid.split(",") if s] if args.forbid else []
    found = search_gadget(args.n, args.corners, args.internal_degree, args.corner_degree,
                          forbid, args.gamma, _node_cap(args))
    out.write(f"found {len(found)}\n")
    for i, spec in enumerate(found):
        out.write(f"gadget {i + 1} edges " + " ".join(f"{u + 1}-{v + 1}" for u, v in spec.graph.edges())
                  + f" corners {_ids(spec.corners)}\n")
        if args.out:
            Path(args.out).mkdir(parents=True, exist_ok=True)
            save_gadget(spec, Path(args.out) / f"{spec.name}.json")
    return 0 if found else 1


def cmd_verify_reduction(args, out):
    g = graph_from_spec(args.graph)
    r = ReductionResult.load(args.result_dir)
    if r.source_n != g.n:
        raise _Fail(f"result was built from a {r.source_n}-vertex graph, got {g.n} vertices")
    src, dst = gamma_pair(g, r, _node_cap(args))
    ok = dst == src + r.offset
    out.write(f"{'verified' if ok else 'mismatch'} {dst} {'==' if ok else '!='} {src} + {r.offset}\n")
    out.write(f"gamma source {src}\ngamma output {dst}\noffset {r.offset}\n")
    return 0 if ok else 1


# --- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="seed for random generation")
    common.add_argument("--node-cap", type=int, default=None,
                        help="abort the exact solver after this many search nodes (exit 3); "
                             "defaults to $DOMINION_NODE_CAP")
    common.add_argument("--jobs", type=int, default=1, help="worker processes where supported (default 1)")

    p = argparse.ArgumentParser(prog="dominion", description=__doc__.split("\n")[0],
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", metavar="command", required=True)

    s = sub.add_parser("gen", parents=[common], help="generate a named or seeded random graph",
                       description="Write a graph in the edge-list format: a named graph, G(n,p), a connected "
                                   "G(n,p), a random k-regular or cubic graph, or a random claw-free graph.")
    s.add_argument("kind", choices=["named", "gnp", "connected", "regular", "cubic", "claw-free"])
    s.add_argument("--spec", help="graph spec for kind 'named'")
    s.add_argument("--n", type=int)
    s.add_argument("--p", type=float, default=0.5, help="edge probability (density for claw-free)")
    s.add_argument("--k", type=int, default=3, help="degree for kind 'regular'")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", parents=[common], help="exact minimum dominating set and variants",
                       description="Exact minimum dominating set by branch and bound; first output line is "
                                   "'gamma N'. Variants: independent domination, edge domination (via the line "
                                   "graph), partial domination of a target set from an allowed set, enumeration "
                                   "of optima, and the polynomial-case dispatcher for claw-free inputs.")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--independent", action="store_true", help="minimum independent dominating set")
    mode.add_argument("--edges", action="store_true", help="minimum edge dominating set")
    mode.add_argument("--enumerate", type=int, metavar="LIMIT", help="list up to LIMIT minimum dominating sets")
    s.add_argument("graph")
    s.add_argument("--partial", metavar="FILE", help="file of 1-based target vertex ids")
    s.add_argument("--allowed", metavar="FILE", help="file of 1-based vertex ids allowed in the set")
    s.add_argument("--budget", type=int, help="give up (exit 1) if more vertices are needed")
    s.add_argument("--strategy", choices=["exact", "auto"], default="exact",
                   help="'auto' picks a polynomial rule per component and prints the trace")
    s.add_argument("--forbidden", metavar="H", help="graph H the input is known to exclude (with --strategy auto)")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("recognize", parents=[common], help="test for forbidden induced subgraphs",
                       description="Report claw-freeness, regularity and, for each pattern, an induced "
                                   "embedding or its absence.")
    s.add_argument("graph")
    s.add_argument("--forbid", help="comma-separated pattern specs, e.g. claw,diamond,C:4")
    s.add_argument("--regular", type=int, help="expected regular degree")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("classify", parents=[common], help="complexity of domination on (claw, H)-free graphs",
                       description="Decide whether minimum domination on (claw, H)-free graphs is NP-complete "
                                   "(a hardness kernel embeds in H), polynomial (H lies in a tractable family) "
                                   "or open. First line: the verdict.")
    s.add_argument("graph", help="the graph H")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("classify-all", parents=[common], help="classify every claw-free H on n <= 6 vertices",
                       description="One TSV row per claw-free graph H on n vertices (n <= 6): edge list, "
                                   "verdict, kernel embedding or tractability reason, justification, name.")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=["tsv"], default="tsv")
    s.set_defaults(func=cmd_classify_all)

    s = sub.add_parser("reduce", parents=[common], help="gadget reductions between domination instances",
                       description="Build a reduction instance: 'cubic' (4-regular to cubic, 4-corner gadget), "
                                   "'butterfly' (cubic to cubic claw/butterfly/diamond/C4/C5/K4-free), 'odd:k' "
                                   "(cubic to k-regular), 'ck:p' (4-regular to claw-free subcubic with long "
                                   "cycles), 'kdt:p' (cubic to claw-free subcubic without short double "
                                   "triangles). Without --out the output graph is printed.")
    s.add_argument("graph")
    s.add_argument("--mode", required=True)
    s.add_argument("--gadget", help="gadget JSON file or built-in gadget name")
    s.add_argument("--out", help="directory for output.graph and result.json")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("verify-gadget", parents=[common], help="check the four gadget properties exactly",
                       description="Check a gadget file: gamma with an optimum containing all corners; per "
                                   "corner a unique optimum of H-a one smaller that avoids the other corners; "
                                   "no gamma-2 vertices dominate the non-corners; no forbidden pattern. "
                                   "Exit 1 if any property fails.")
    s.add_argument("file", nargs="?", help="gadget JSON file or built-in name (default butterfly9)")
    s.set_defaults(func=cmd_verify_gadget)

    s = sub.add_parser("search-gadget", parents=[common], help="exhaustive search for small gadgets",
                       description="Enumerate non-isomorphic gadgets on n <= 12 vertices with the given degrees "
                                   "and forbidden patterns that pass every gadget property.")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--corners", type=int, required=True)
    s.add_argument("--gamma", type=int, required=True)
    s.add_argument("--internal-degree", type=int, default=3)
    s.add_argument("--corner-degree", type=int, default=None)
    s.add_argument("--forbid", default="")
    s.add_argument("--out", help="directory to save each gadget as JSON")
    s.set_defaults(func=cmd_search_gadget)

    s = sub.add_parser("verify-reduction", parents=[common], help="check gamma(output) = gamma(input) + offset",
                       description="Solve both instances exactly and compare with the claimed offset. "
                                   "First line 'verified' or 'mismatch'; exit 1 on mismatch.")
    s.add_argument("graph")
    s.add_argument("result_dir")
    s.set_defaults(func=cmd_verify_reduction)
    return p


def run(argv: list[str], out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out) or 0
    except SearchLimitExceeded as exc:
        err.write(f"dominion: {exc}\n")
        return 3
    except (_Fail, *DOMAIN_ERRORS) as exc:
        err.write(f"dominion: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
