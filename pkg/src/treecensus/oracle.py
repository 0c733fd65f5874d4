"""Brute-force ground truth for the determinant machinery: explicit spanning
tree enumeration, rooted orientations, the uprooted predicate, and Prüfer
codes.

Instances are meant to be tiny; the enumeration checks every (n-1)-edge
subset with a union-find and refuses to start past a hard subset budget.
"""

import heapq
import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, normalize_edge

DEFAULT_BUDGET = 2_000_000


class OracleBudgetError(RuntimeError):
    """Enumeration would examine more edge subsets than the budget allows."""


@dataclass(frozen=True)
class Tree:
    """A labeled tree spanning 1..n, stored as sorted normalized edge pairs."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("vertex count must be at least 1")
        if len(self.edges) != self.n - 1:
            raise ValueError(f"a tree on {self.n} vertices needs {self.n - 1} edges")
        if list(self.edges) != sorted(self.edges):
            raise ValueError("edges must be sorted")
        parent = list(range(self.n + 1))
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge ({u},{v}) is not a normalized pair in 1..{self.n}")
            ru, rv = _find(parent, u), _find(parent, v)
            if ru == rv:
                raise ValueError("edge set contains a cycle")
            parent[ru] = rv

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


@dataclass(frozen=True)
class RootedTree:
    """A tree with a distinguished root; edges point away from the root."""

    tree: Tree
    root: int
    parent: dict  # non-root vertex -> its parent

    def children(self, v: int) -> list[int]:
        return sorted(c for c, p in self.parent.items() if p == v)


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def enumerate_spanning_trees(g: Graph, budget: int = DEFAULT_BUDGET) -> list[Tree]:
    """All spanning trees of a simple graph, in lexicographic edge-list order.

    Every (n-1)-subset of the edge set is tested for acyclicity with a
    union-find; n-1 acyclic edges on n vertices are automatically spanning.
    Raises OracleBudgetError if there are more than `budget` subsets to try.
    """
    if not g.is_simple():
        raise ValueError("enumeration oracle requires a simple graph")
    n = g.n
    edge_list = g.edges()
    if n - 1 > len(edge_list):
        return []
    total = math.comb(len(edge_list), n - 1)
    if total > budget:
        raise OracleBudgetError(
            f"{total} edge subsets exceed the oracle budget of {budget}"
        )
    trees = []
    for subset in combinations(edge_list, n - 1):
        parent = list(range(n + 1))
        for u, v in subset:
            ru, rv = _find(parent, u), _find(parent, v)
            if ru == rv:
                break
            parent[ru] = rv
        else:
            trees.append(Tree(n, subset))
    return trees


def root_tree(t: Tree, r: int) -> RootedTree:
    """Orient t away from root r, producing the parent map."""
    if not 1 <= r <= t.n:
        raise ValueError(f"root {r} out of range 1..{t.n}")
    adj = t.adjacency()
    parent: dict[int, int] = {}
    queue = deque([r])
    seen = {r}
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                parent[w] = v
                queue.append(w)
    return RootedTree(t, r, parent)


def is_uprooted(rt: RootedTree) -> bool:
    """True iff every child of the root is smaller than the root."""
    return all(c < rt.root for c in rt.children(rt.root))


def highest_child_of_root(rt: RootedTree) -> int:
    children = rt.children(rt.root)
    if not children:
        raise ValueError("root has no children")
    return max(children)


def prufer_decode(n: int, seq) -> Tree:
    """Tree on 1..n from a sequence of n-2 labels (standard min-leaf rule)."""
    if n < 2:
        raise ValueError("Prüfer codes need at least 2 vertices")
    seq = list(seq)
    if len(seq) != n - 2:
        raise ValueError(f"sequence must have length {n - 2}, got {len(seq)}")
    for s in seq:
        if not 1 <= s <= n:
            raise ValueError(f"label {s} out of range 1..{n}")
    degree = [1] * (n + 1)
    for s in seq:
        degree[s] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append(normalize_edge(leaf, s))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append(normalize_edge(u, v))
    return Tree(n, tuple(sorted(edges)))


def prufer_encode(t: Tree) -> list[int]:
    """Sequence of n-2 labels for a tree (inverse of prufer_decode)."""
    n = t.n
    if n < 2:
        raise ValueError("Prüfer codes need at least 2 vertices")
    adj = {v: set(ws) for v, ws in t.adjacency().items()}
    leaves = [v for v in range(1, n + 1) if len(adj[v]) == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        neighbor = next(iter(adj[leaf]))
        seq.append(neighbor)
        adj[neighbor].discard(leaf)
        adj[leaf].clear()
        if len(adj[neighbor]) == 1:
            heapq.heappush(leaves, neighbor)
    return seq


def tree_to_json(t: Tree) -> dict:
    """Serialize as {"edges": [[u, v], ...]} with the edges sorted."""
    return {"edges": [[u, v] for u, v in t.edges]}
