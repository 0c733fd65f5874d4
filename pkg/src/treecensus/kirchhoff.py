"""Spanning-tree counting through reduced-Laplacian determinants.

count_spanning_trees is the classical matrix tree theorem; the marked-edge
variant counts only the trees through one chosen edge by reading off the
x-coefficient of a determinant that is linear in the edge's weight.
"""

from .graphs import (
    Graph,
    MissingEdgeError,
    _freeze,
    delete_edges,
    normalize_edge,
    reduced_laplacian,
    trim_neighbors_above,
)
from .intdet import MarkedMatrix, det_bareiss, det_linear_in_x
from .tables import GRAIN_ROOT, METHOD_MTT, CensusTable


def count_spanning_trees(g: Graph) -> int:
    """Exact number of spanning trees; 0 iff g is disconnected.

    Parallel edges contribute multiplicatively.  Computed as the determinant
    of the Laplacian with the highest-labeled vertex's row/column removed
    (any choice gives the same value; that cofactor invariance is one of the
    tested properties).
    """
    if g.n == 1:
        return det_bareiss([])
    return det_bareiss(reduced_laplacian(g, g.n))


def _marked_reduced_laplacian(g: Graph, u: int, v: int, weight: int) -> MarkedMatrix:
    """Reduced Laplacian of g minus {u,v}, with the edge re-added at weight x.

    The deleted row/column is the highest-labeled vertex n.  Marking adds
    weight*x on both surviving endpoint diagonals and -weight*x at the
    symmetric off-diagonal pair; if one endpoint is vertex n only the other
    endpoint's diagonal survives.
    """
    stripped = delete_edges(g, [(u, v)])
    drop = g.n
    base = reduced_laplacian(stripped, drop)

    def idx(w: int) -> int:
        return w - 1  # u, v < drop = n whenever they survive

    bump = []
    if u != drop:
        bump.append((idx(u), idx(u), weight))
    if v != drop:
        bump.append((idx(v), idx(v), weight))
    if u != drop and v != drop:
        bump.append((idx(u), idx(v), -weight))
        bump.append((idx(v), idx(u), -weight))
    return MarkedMatrix(_freeze(base), tuple(bump))


def count_spanning_trees_with_edge(g: Graph, edge) -> int:
    """Exact number of spanning trees containing the given edge.

    For an edge of multiplicity w the count includes the w parallel choices,
    so it always equals count_spanning_trees(g) minus the count with the edge
    removed (the deletion decomposition).
    """
    u, v = normalize_edge(*edge)
    weight = g.multiplicity(u, v)
    if weight == 0:
        raise MissingEdgeError(f"edge ({u},{v}) is not present")
    poly = det_linear_in_x(_marked_reduced_laplacian(g, u, v, weight))
    return poly.beta


def count_uprooted_all_roots(g: Graph) -> CensusTable:
    """Census of uprooted spanning trees of a simple graph, keyed by root.

    The entry for root r counts spanning trees of g with every edge from r
    to a larger-labeled vertex removed: rooting such a tree at r gives a
    rooted tree whose children of r are all smaller than r, and every
    uprooted tree with root r arises this way exactly once.  Cost scales
    with n determinants, not with the number of trees.
    """
    if not g.is_simple():
        raise ValueError("the uprooted census is defined for simple graphs")
    entries = {
        r: count_spanning_trees(trim_neighbors_above(g, r, r))
        for r in range(g.n, 0, -1)
    }
    return CensusTable(
        family="graph",
        params={"n": g.n},
        grain=GRAIN_ROOT,
        method=METHOD_MTT,
        entries=entries,
    )
