"""Censusing uprooted spanning trees three independent ways.

A rooted tree is *uprooted* when the root is larger than all of its
children.  For the complete graph, the complete bipartite graph, and the
complete graph minus one edge, the census of uprooted spanning trees
(grouped by root, or by the root's highest child) has a closed formula.

Each census can also be computed two other ways: by a determinant on a
restricted graph (delete the root's edges to larger vertices, then count),
and by brute-force enumeration of all spanning trees.  The three tables
must agree exactly, which is the whole point of this package.
"""

from treecensus import (
    census_formula,
    census_mtt,
    census_oracle,
    count_uprooted_all_roots,
    delete_edges,
    complete_graph,
)

def show(family, grain, **params):
    formula = census_formula(family, grain, **params)
    mtt = census_mtt(family, grain, **params)
    oracle = census_oracle(family, grain, **params)
    agree = formula.entries == mtt.entries == oracle.entries
    print(f"{family} {params} by {grain}:")
    print(f"  formula: {formula.entries}")
    print(f"  mtt:     {mtt.entries}")
    print(f"  oracle:  {oracle.entries}")
    print(f"  total {formula.total}, three-way agreement: {agree}")
    assert agree
    print()

show("kn", "root", n=5)
show("kn", "root+highest-child", n=4)
show("kmn", "root+highest-child", m=2, n=3)
show("kn-minus-edge", "root", n=5)

print("Totals recover the classical counts:")
print(f"  K_5 uprooted total   = {census_formula('kn', 'root', n=5).total} "
      f"= (5-1)^(5-1) = {4 ** 4}")
print(f"  K_5-e uprooted total = {census_formula('kn-minus-edge', 'root', n=5).total} "
      f"= (5-1)^(5-3) (5-2)^2 = {4 ** 2 * 3 ** 2}")

print()
print("The same root-restriction device works on any simple graph:")
wheel_ish = delete_edges(complete_graph(5), [(1, 5), (2, 4)])
print(f"  K_5 minus two edges, census by root: "
      f"{count_uprooted_all_roots(wheel_ish).entries}")
