"""Counting only the spanning trees that contain one chosen edge.

Give the chosen edge a variable weight x.  The reduced-Laplacian determinant
then becomes a linear polynomial alpha + beta*x, and beta is exactly the
number of spanning trees through that edge: at x=0 the edge is absent, at
x=1 the graph is back to normal, so beta closes the deletion decomposition

    count(G) = count(G without e) + count(trees of G through e).
"""

from treecensus import (
    complete_graph,
    count_spanning_trees,
    count_spanning_trees_with_edge,
    delete_edges,
    graph_from_edges,
)

k5 = complete_graph(5)
total = count_spanning_trees(k5)
print(f"K_5 has {total} spanning trees.")
for edge in [(1, 2), (2, 5), (4, 5)]:
    through = count_spanning_trees_with_edge(k5, edge)
    without = count_spanning_trees(delete_edges(k5, [edge]))
    print(f"  through {edge}: {through}; without it: {without}; "
          f"sum {through + without}")
    assert through + without == total

print()
print("By symmetry every K_5 edge carries the same share: "
      f"{total} * 4 / 10 = {total * 4 // 10}.")

print()
print("A bridge lies on every spanning tree, so its 'through' count is the")
print("whole count and deleting it leaves nothing:")
path = graph_from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5)])
print(f"  path graph: total {count_spanning_trees(path)}, through (3,4): "
      f"{count_spanning_trees_with_edge(path, (3, 4))}")
