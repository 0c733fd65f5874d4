"""Simple loopless labeled graphs on vertices 1..n, their Laplacians, and the
restricted graph families used by the uprooted-tree censuses.

Vertices are 1-indexed throughout.  Complete bipartite parts are fixed as
A = {1..m} and B = {m+1..m+n}.  Edge multiplicities are nonnegative integers
(0/1 for simple graphs); every constructor here emits a simple graph, but the
counting machinery accepts multigraphs.  Graphs are immutable and all
operations are pure.
"""

from dataclasses import dataclass


class MissingEdgeError(ValueError):
    """An operation referenced an edge the graph does not contain."""


def normalize_edge(u: int, v: int) -> tuple[int, int]:
    """Return the endpoints as an ordered pair u < v; loops are rejected."""
    if u == v:
        raise ValueError(f"loop edge ({u},{v}) is not allowed")
    return (u, v) if u < v else (v, u)


def _freeze(rows) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(row) for row in rows)


@dataclass(frozen=True)
class Graph:
    """Undirected loopless multigraph given by a symmetric multiplicity matrix.

    mult[i][j] is the number of edges between vertices i+1 and j+1.
    """

    n: int
    mult: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("vertex count must be at least 1")
        if len(self.mult) != self.n or any(len(row) != self.n for row in self.mult):
            raise ValueError("multiplicity matrix must be n x n")
        for i in range(self.n):
            if self.mult[i][i] != 0:
                raise ValueError("loops are not allowed (nonzero diagonal)")
            for j in range(i):
                if self.mult[i][j] != self.mult[j][i]:
                    raise ValueError("multiplicity matrix must be symmetric")
                if self.mult[i][j] < 0:
                    raise ValueError("multiplicities must be nonnegative")

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range 1..{self.n}")

    def multiplicity(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        return self.mult[u - 1][v - 1]

    def degree(self, v: int) -> int:
        """Number of edge endpoints at v (multiplicities included)."""
        self._check_vertex(v)
        return sum(self.mult[v - 1])

    def edges(self) -> list[tuple[int, int]]:
        """Distinct present edges as sorted (u, v) pairs, u < v, lexicographic."""
        return [
            (u, v)
            for u in range(1, self.n + 1)
            for v in range(u + 1, self.n + 1)
            if self.mult[u - 1][v - 1]
        ]

    def edge_count(self) -> int:
        return len(self.edges())

    def is_simple(self) -> bool:
        return all(m <= 1 for row in self.mult for m in row)


def graph_from_edges(n: int, edges) -> Graph:
    """Build a graph on 1..n from an edge list; repeated pairs add multiplicity."""
    if n < 1:
        raise ValueError("vertex count must be at least 1")
    rows = [[0] * n for _ in range(n)]
    for u, v in edges:
        u, v = normalize_edge(u, v)
        if not 1 <= u < v <= n:
            raise ValueError(f"edge ({u},{v}) out of range 1..{n}")
        rows[u - 1][v - 1] += 1
        rows[v - 1][u - 1] += 1
    return Graph(n, _freeze(rows))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least 1 vertex")
    rows = [[0 if i == j else 1 for j in range(n)] for i in range(n)]
    return Graph(n, _freeze(rows))


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with parts {1..m} and {m+1..m+n}."""
    if m < 1 or n < 1:
        raise ValueError("both parts of a complete bipartite graph must be nonempty")
    total = m + n
    rows = [
        [1 if (i < m) != (j < m) else 0 for j in range(total)]
        for i in range(total)
    ]
    return Graph(total, _freeze(rows))


def delete_edges(g: Graph, edges) -> Graph:
    """Remove every listed edge entirely (multiplicity set to 0).

    Deleting an edge that is not present is an error, so callers constructing
    restricted families catch parameter bugs instead of silently no-opping.
    """
    rows = [list(row) for row in g.mult]
    for u, v in edges:
        u, v = normalize_edge(u, v)
        g._check_vertex(v)
        if rows[u - 1][v - 1] == 0:
            raise MissingEdgeError(f"edge ({u},{v}) is not present")
        rows[u - 1][v - 1] = 0
        rows[v - 1][u - 1] = 0
    return Graph(g.n, _freeze(rows))


def trim_neighbors_above(g: Graph, v: int, cap: int) -> Graph:
    """Delete every edge from v to a vertex labeled above cap.

    With cap = v this leaves v adjacent only to smaller-labeled vertices, so
    rooting any spanning tree of the result at v makes every child of v
    smaller than v (an uprooted tree).  A cap below v additionally bounds the
    highest possible child.
    """
    g._check_vertex(v)
    gone = [
        (v, u)
        for u in range(max(cap, 0) + 1, g.n + 1)
        if u != v and g.mult[v - 1][u - 1]
    ]
    return delete_edges(g, gone)


def census_graph_kn(n: int, k: int) -> Graph:
    """K_n with vertex n-k cut off from all larger vertices.

    Its spanning trees, rooted at n-k, are exactly the uprooted spanning
    trees of K_n with root n-k.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if not 0 <= k <= n - 1:
        raise ValueError(f"k={k} out of range 0..{n - 1}")
    return trim_neighbors_above(complete_graph(n), n - k, n - k)


def census_graph_kn_refined(n: int, k: int, j: int) -> Graph:
    """K_n with vertex n-k adjacent only to vertices at most n-k-j.

    Spanning trees containing the edge {n-k-j, n-k}, rooted at n-k, are the
    uprooted spanning trees of K_n with root n-k and highest child n-k-j.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if not 0 <= k <= n - 2:
        raise ValueError(f"k={k} out of range 0..{n - 2}")
    if not 1 <= j <= n - k - 1:
        raise ValueError(f"j={j} out of range 1..{n - k - 1}")
    return trim_neighbors_above(complete_graph(n), n - k, n - k - j)


def census_graph_kmn(m: int, n: int, k: int) -> Graph:
    """K_{m,n} with the top vertex m+n cut off from part-A vertices above m+1-k.

    Spanning trees containing the edge {m+1-k, m+n}, rooted at m+n, are the
    uprooted spanning trees of K_{m,n} with root m+n and highest child m+1-k.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be at least 1")
    if not 1 <= k <= m:
        raise ValueError(f"k={k} out of range 1..{m}")
    return trim_neighbors_above(complete_bipartite(m, n), m + n, m + 1 - k)


def census_graph_kn_minus_edge(n: int, k: int) -> Graph:
    """K_n minus the edge {1,n}, with vertex n-k cut off from larger vertices."""
    if n < 3:
        raise ValueError("n must be at least 3")
    if not 1 <= k <= n - 2:
        raise ValueError(f"k={k} out of range 1..{n - 2}")
    base = delete_edges(complete_graph(n), [(1, n)])
    return trim_neighbors_above(base, n - k, n - k)


def relabel(g: Graph, perm) -> Graph:
    """Apply a vertex relabeling; perm[i-1] is the new label of vertex i."""
    perm = list(perm)
    if sorted(perm) != list(range(1, g.n + 1)):
        raise ValueError("perm must be a permutation of 1..n")
    rows = [[0] * g.n for _ in range(g.n)]
    for i in range(g.n):
        for j in range(g.n):
            rows[perm[i] - 1][perm[j] - 1] = g.mult[i][j]
    return Graph(g.n, _freeze(rows))


def laplacian(g: Graph) -> list[list[int]]:
    """Degree matrix minus adjacency matrix; symmetric with zero row sums."""
    return [
        [g.degree(i + 1) if i == j else -g.mult[i][j] for j in range(g.n)]
        for i in range(g.n)
    ]


def reduced_laplacian(g: Graph, v: int) -> list[list[int]]:
    """Laplacian with row and column v removed ((n-1) x (n-1))."""
    g._check_vertex(v)
    if g.n == 1:
        raise ValueError("reduced Laplacian of a single-vertex graph is empty")
    full = laplacian(g)
    return [
        [entry for j, entry in enumerate(row) if j != v - 1]
        for i, row in enumerate(full)
        if i != v - 1
    ]


def graph_to_json(g: Graph) -> dict:
    """Serialize as {"n": n, "edges": [[u, v], ...]}; repeats encode multiplicity."""
    edges = []
    for u, v in g.edges():
        edges.extend([[u, v]] * g.mult[u - 1][v - 1])
    return {"n": g.n, "edges": edges}


def graph_from_json(obj) -> Graph:
    """Parse the {"n": ..., "edges": ...} format (strict: pairs must have u < v)."""
    if not isinstance(obj, dict) or set(obj) != {"n", "edges"}:
        raise ValueError('graph JSON must have exactly the keys "n" and "edges"')
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError('"n" must be a positive integer')
    edges = obj["edges"]
    if not isinstance(edges, list):
        raise ValueError('"edges" must be a list of [u, v] pairs')
    pairs = []
    for item in edges:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
        ):
            raise ValueError(f"malformed edge entry: {item!r}")
        u, v = item
        if not 1 <= u < v <= n:
            raise ValueError(f"edge [{u},{v}] must satisfy 1 <= u < v <= n")
        pairs.append((u, v))
    return graph_from_edges(n, pairs)
