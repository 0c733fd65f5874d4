"""Verifying the census identities in exact rational arithmetic.

Summing a census over all of its cells must reproduce the total count, which
yields a family of combinatorial identities.  Two of them generalize: the
vertex count on one side can be replaced by a free rational parameter a, and
the identity still holds for every a outside a couple of excluded points.

fractions.Fraction keeps every comparison exact; there is no tolerance.
"""

from fractions import Fraction

from treecensus import verify_all, verify_general_a, verify_identity1

report = verify_identity1(6)
print("Root census of K_6 sums to the uprooted total:")
print(f"  lhs {report.lhs} = rhs {report.rhs} -> holds={report.holds}")

print()
print("The parametric version at a few awkward rationals:")
for a in (Fraction(-2), Fraction(3, 2), Fraction(22, 7)):
    r = verify_general_a(6, a)
    print(f"  a={a}: both sides {r.lhs} -> holds={r.holds}")

print()
print("Full sweep over every identity, n up to 30, m up to 12:")
reports = verify_all(30, 12, [Fraction(-2), Fraction(3, 2), Fraction(7, 3), 9])
by_name: dict[str, int] = {}
for r in reports:
    by_name[r.identity] = by_name.get(r.identity, 0) + 1
for name, count in by_name.items():
    print(f"  {name}: {count} parameter points")
print(f"  all hold: {all(r.holds for r in reports)}")
assert all(r.holds for r in reports)
