"""Minimum domination on claw-free graphs: exact solving, forbidden-subgraph
recognition, the (claw, H)-free complexity classifier, polynomial special
cases, and machine-checked hardness reductions."""

from .dichotomy import Classification, Verdict, classify, classify_all, hardness_witness
from .domination import (
    DominationResult,
    InfeasibleQuery,
    PartialDominationQuery,
    SearchLimitExceeded,
    critical_vertices,
    enumerate_min_dominating,
    is_dominating,
    min_dominating,
    min_edge_dominating,
    min_independent_dominating,
    min_partial_dominating,
)
from .formats import GraphFormatError, format_graph, parse_graph, read_graph, write_graph
from .gadgets import GadgetReport, GadgetSpec, builtin_gadget, load_gadget, save_gadget, search_gadget, verify_gadget
from .graph import Graph, GraphError, complement, delete_vertices, disjoint_union, induced_subgraph, line_graph
from .named import graph_from_spec, named_graph
from .polycases import PreconditionError, dispatch_solve
from .recognition import check_class, contains_induced, is_claw_free, is_isomorphic
from .reductions import (
    ReductionResult,
    reduce_4reg_to_cubic,
    reduce_cubic_butterfly,
    reduce_cubic_to_odd_regular,
    reduce_stretch_family,
    verify_reduction,
)

__version__ = "0.1.0"
