"""Counting spanning trees with exact determinants.

The number of spanning trees of a graph is the determinant of its Laplacian
with one row and column deleted.  Everything below is exact integer
arithmetic, so the values are correct even when they are hundreds of digits.
"""

from treecensus import (
    complete_bipartite,
    complete_graph,
    count_spanning_trees,
    graph_from_edges,
)

print("Complete graphs: the count follows Cayley's formula n^(n-2).")
for n in (3, 4, 5, 8, 16):
    print(f"  K_{n}: {count_spanning_trees(complete_graph(n))} "
          f"(formula {n ** (n - 2)})")

print()
print("Complete bipartite graphs follow m^(n-1) n^(m-1).")
for m, n in [(2, 2), (2, 3), (3, 3), (4, 5)]:
    trees = count_spanning_trees(complete_bipartite(m, n))
    print(f"  K_{{{m},{n}}}: {trees} (formula {m ** (n - 1) * n ** (m - 1)})")

print()
print("The counts are exact at any size; K_64 needs 113 digits:")
big = count_spanning_trees(complete_graph(64))
print(f"  K_64: {big}")
assert big == 64 ** 62

print()
print("A disconnected graph has no spanning tree, and the determinant")
print("reports that as an honest zero:")
two_islands = graph_from_edges(4, [(1, 2), (3, 4)])
print(f"  two disjoint edges on 4 vertices: {count_spanning_trees(two_islands)}")

print()
print("Parallel edges multiply: a doubled edge doubles every tree through it.")
doubled = graph_from_edges(3, [(1, 2), (1, 2), (1, 3), (2, 3)])
print(f"  triangle with a doubled edge: {count_spanning_trees(doubled)} "
      "(3 tree shapes, one edge doubled in two of them)")
