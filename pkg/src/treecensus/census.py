"""Closed-form uprooted-tree censuses and their cross-checkable counterparts.

Each census is available three ways: the closed formula, a determinant
computation on the matching restricted graph ("mtt"), and brute-force
enumeration ("oracle").  The three tables must agree entry for entry.

The closed forms are evaluated in exact rationals because several carry
negative powers at boundary indices (for example a (n-1)^(k-1) factor at
k = 0) that only cancel in the full product; a final integrality check
guards the conversion back to an integer count.
"""

from fractions import Fraction

from .graphs import (
    Graph,
    census_graph_kmn,
    census_graph_kn,
    census_graph_kn_minus_edge,
    census_graph_kn_refined,
    complete_bipartite,
    complete_graph,
    delete_edges,
)
from .kirchhoff import count_spanning_trees, count_spanning_trees_with_edge
from .oracle import (
    DEFAULT_BUDGET,
    enumerate_spanning_trees,
    highest_child_of_root,
    is_uprooted,
    root_tree,
)
from .tables import (
    GRAIN_ROOT,
    GRAIN_ROOT_CHILD,
    METHOD_FORMULA,
    METHOD_MTT,
    METHOD_ORACLE,
    CensusTable,
)

FAMILY_KN = "kn"
FAMILY_KMN = "kmn"
FAMILY_KN_MINUS_EDGE = "kn-minus-edge"


class FormulaDomainError(ValueError):
    """A closed form failed to cancel to a nonnegative integer."""


def _as_count(value: Fraction, what: str) -> int:
    if value.denominator != 1 or value < 0:
        raise FormulaDomainError(f"{what} is not a nonnegative integer: {value}")
    return int(value)


def count_kn_root(n: int, k: int) -> int:
    """Uprooted spanning trees of K_n with root n-k: (n-1-k) n^(n-2-k) (n-1)^(k-1)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if not 0 <= k <= n - 1:
        raise ValueError(f"k={k} out of range 0..{n - 1}")
    value = Fraction(n - 1 - k) * Fraction(n) ** (n - 2 - k) * Fraction(n - 1) ** (k - 1)
    return _as_count(value, f"count_kn_root({n},{k})")


def count_kn_root_child(n: int, k: int, j: int) -> int:
    """Uprooted spanning trees of K_n with root n-k and highest child n-k-j:
    n^(n-k-j-2) (n-1)^(k+j-2) (2n-k-j-1)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if not 0 <= k <= n - 2:
        raise ValueError(f"k={k} out of range 0..{n - 2}")
    if not 1 <= j <= n - k - 1:
        raise ValueError(f"j={j} out of range 1..{n - k - 1}")
    value = (
        Fraction(n) ** (n - k - j - 2)
        * Fraction(n - 1) ** (k + j - 2)
        * (2 * n - k - j - 1)
    )
    return _as_count(value, f"count_kn_root_child({n},{k},{j})")


def count_kmn_child(m: int, n: int, k: int) -> int:
    """Uprooted spanning trees of K_{m,n} with root m+n and highest child m+1-k:
    m^(n-2) n^(m-k-1) (n-1)^(k-1) (m+n-k)."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be at least 1")
    if not 1 <= k <= m:
        raise ValueError(f"k={k} out of range 1..{m}")
    value = (
        Fraction(m) ** (n - 2)
        * Fraction(n) ** (m - k - 1)
        * Fraction(n - 1) ** (k - 1)
        * (m + n - k)
    )
    return _as_count(value, f"count_kmn_child({m},{n},{k})")


def count_kn_minus_edge_root(n: int, k: int) -> int:
    """Uprooted spanning trees of K_n minus {1,n} with root n-k.

    k = 0 gives n^(n-3) (n-2); otherwise
    n^(n-2-k) (n-1)^(k-1) ((n-3-k) + (2nk+n-k-2)/(n(n-1))).
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    if not 0 <= k <= n - 2:
        raise ValueError(f"k={k} out of range 0..{n - 2}")
    if k == 0:
        value = Fraction(n) ** (n - 3) * (n - 2)
    else:
        value = (
            Fraction(n) ** (n - 2 - k)
            * Fraction(n - 1) ** (k - 1)
            * ((n - 3 - k) + Fraction(2 * n * k + n - k - 2, n * (n - 1)))
        )
    return _as_count(value, f"count_kn_minus_edge_root({n},{k})")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def _check_family_grain(family: str, grain: str, n, m) -> None:
    if family == FAMILY_KN:
        _require(grain in (GRAIN_ROOT, GRAIN_ROOT_CHILD),
                 f"grain {grain!r} is not defined for family {family!r}")
        _require(isinstance(n, int) and n >= 2, "family kn needs n >= 2")
    elif family == FAMILY_KMN:
        _require(grain == GRAIN_ROOT_CHILD,
                 f"grain {grain!r} is not defined for family {family!r}")
        _require(isinstance(m, int) and m >= 1, "family kmn needs m >= 1")
        _require(isinstance(n, int) and n >= 1, "family kmn needs n >= 1")
    elif family == FAMILY_KN_MINUS_EDGE:
        _require(grain == GRAIN_ROOT,
                 f"grain {grain!r} is not defined for family {family!r}")
        _require(isinstance(n, int) and n >= 3, "family kn-minus-edge needs n >= 3")
    else:
        raise ValueError(f"unknown census family {family!r}")


def _params(family: str, n, m) -> dict:
    if family == FAMILY_KMN:
        return {"m": m, "n": n}
    return {"n": n}


def census_cells(family: str, grain: str, *, n: int | None = None,
                 m: int | None = None):
    """Census cells in canonical order: (key, parameter tuple) pairs.

    Order is k ascending (and j ascending inside k), i.e. roots descending,
    which is also the order the closed-form decompositions are summed in.
    The parameter tuples are the arguments of the matching count_* formula.
    """
    if family == FAMILY_KN and grain == GRAIN_ROOT:
        return [((n - k), (n, k)) for k in range(n)]
    if family == FAMILY_KN and grain == GRAIN_ROOT_CHILD:
        return [
            ((n - k, n - k - j), (n, k, j))
            for k in range(n - 1)
            for j in range(1, n - k)
        ]
    if family == FAMILY_KMN:
        return [((m + 1 - k), (m, n, k)) for k in range(1, m + 1)]
    return [((n - k), (n, k)) for k in range(n - 1)]  # kn-minus-edge


def base_graph(family: str, *, n: int | None = None, m: int | None = None) -> Graph:
    """The unrestricted graph a census family refers to."""
    if family == FAMILY_KN:
        return complete_graph(n)
    if family == FAMILY_KMN:
        return complete_bipartite(m, n)
    if family == FAMILY_KN_MINUS_EDGE:
        if n is None or n < 2:
            raise ValueError("family kn-minus-edge needs n >= 2")
        return delete_edges(complete_graph(n), [(1, n)])
    raise ValueError(f"unknown census family {family!r}")


def census_formula(family: str, grain: str, *, n: int | None = None,
                   m: int | None = None) -> CensusTable:
    """Census table from the closed formulas."""
    _check_family_grain(family, grain, n, m)
    formula = {
        (FAMILY_KN, GRAIN_ROOT): count_kn_root,
        (FAMILY_KN, GRAIN_ROOT_CHILD): count_kn_root_child,
        (FAMILY_KMN, GRAIN_ROOT_CHILD): count_kmn_child,
        (FAMILY_KN_MINUS_EDGE, GRAIN_ROOT): count_kn_minus_edge_root,
    }[family, grain]
    entries = {key: formula(*args) for key, args in census_cells(family, grain, n=n, m=m)}
    return CensusTable(family, _params(family, n, m), grain, METHOD_FORMULA, entries)


def _mtt_cell(family: str, grain: str, args) -> int:
    if family == FAMILY_KN and grain == GRAIN_ROOT:
        n, k = args
        return count_spanning_trees(census_graph_kn(n, k))
    if family == FAMILY_KN and grain == GRAIN_ROOT_CHILD:
        n, k, j = args
        graph = census_graph_kn_refined(n, k, j)
        return count_spanning_trees_with_edge(graph, (n - k - j, n - k))
    if family == FAMILY_KMN:
        m, n, k = args
        graph = census_graph_kmn(m, n, k)
        return count_spanning_trees_with_edge(graph, (m + 1 - k, m + n))
    n, k = args  # kn-minus-edge
    if k == 0:
        return count_spanning_trees(base_graph(FAMILY_KN_MINUS_EDGE, n=n))
    return count_spanning_trees(census_graph_kn_minus_edge(n, k))


def census_mtt(family: str, grain: str, *, n: int | None = None,
               m: int | None = None) -> CensusTable:
    """Census table from determinants of the per-cell restricted graphs."""
    _check_family_grain(family, grain, n, m)
    entries = {
        key: _mtt_cell(family, grain, args)
        for key, args in census_cells(family, grain, n=n, m=m)
    }
    return CensusTable(family, _params(family, n, m), grain, METHOD_MTT, entries)


def census_oracle(family: str, grain: str, *, n: int | None = None,
                  m: int | None = None, budget: int = DEFAULT_BUDGET) -> CensusTable:
    """Census table by enumerating spanning trees and classifying each rooting."""
    _check_family_grain(family, grain, n, m)
    entries = {key: 0 for key, _args in census_cells(family, grain, n=n, m=m)}
    trees = enumerate_spanning_trees(base_graph(family, n=n, m=m), budget)
    if family == FAMILY_KMN:
        # rooted at m+n every spanning tree is uprooted; classify by child
        for tree in trees:
            entries[highest_child_of_root(root_tree(tree, m + n))] += 1
    elif grain == GRAIN_ROOT:
        roots = sorted(entries)
        for tree in trees:
            for r in roots:
                rooted = root_tree(tree, r)
                if is_uprooted(rooted):
                    entries[r] += 1
    else:
        roots = sorted({r for r, _child in entries})
        for tree in trees:
            for r in roots:
                rooted = root_tree(tree, r)
                if is_uprooted(rooted):
                    entries[r, highest_child_of_root(rooted)] += 1
    return CensusTable(family, _params(family, n, m), grain, METHOD_ORACLE, entries)
