"""
Derived involutions
===================

From the grid of a pair (sigma, e) with e even, the mod-4 parity split of
the h-grading produces a second, always inner, involution; composing with
sigma gives a third.  Both are identified in the catalog by their IBN
Satake signature.  The demo reproduces the trickier worked cases: both
parities of the hermitian pairs of so_2n, the diagram-involution triples,
the principal-involution exceptions, and the maximal-rank pair of so_13
where the two classes differ in dimension by exactly 2.
"""

from nilorbits.gradings import (check_4k2, decompose, grading_grid, upsilon)
from nilorbits.involutions import maximal_rank, pair_by_descriptor, \
    pi_involution
from nilorbits.roots import SimpleType, all_simple_types

print("hermitian pairs of so_2n (both parities):")
for n in (5, 6):
    pair = pair_by_descriptor(SimpleType("D", n), f"gl{n}")
    u = upsilon(decompose(pair))
    print(f"  so{2 * n}/gl{n}: derived {u.sigma_check.descriptor}, "
          f"product {u.sigma_sigma_check.descriptor}")

print()
print("triples from diagram involutions (sigma, derived, product):")
for ts, g0 in [("A5", "sp6"), ("D6", "so11"), ("E6", "F4")]:
    pair = pair_by_descriptor(SimpleType.parse(ts), g0)
    u = upsilon(decompose(pair))
    print(f"  {str(pair):14s} -> {u.sigma_check.g0_str:16s} "
          f"and {u.sigma_sigma_check.g0_str}")

print()
print("the map on principal inner involutions (rank <= 8):")
for t in all_simple_types(8):
    if str(t) == "A1":
        continue
    pair = pi_involution(t)
    pd = decompose(pair)
    if not pd.e_is_even:
        print(f"  {t}: excluded (regular e not even in g)")
        continue
    u = upsilon(pd)
    mark = "~ PI" if u.sigma_check.descriptor == pair.descriptor else \
        f"-> {u.sigma_check.descriptor}"
    print(f"  {t}: {pair.descriptor:10s} {mark}")

print()
t = SimpleType("B", 6)
pair = maximal_rank(t)
pd = decompose(pair)
mg = grading_grid(pd)
u = upsilon(pd)
print(f"{pair}: derived class {u.sigma_check.descriptor} (same), but the "
      f"product is {u.sigma_sigma_check.descriptor}")
print(f"  the 4k+2 layers tie: {check_4k2(mg)} "
      f"(d0(6) = {mg.d(0, 6)} vs d1(6) = {mg.d(1, 6)})")
print(f"  dim g^product - dim g^sigma = "
      f"{u.sigma_sigma_check.dim_g0 - pair.dim_g0}")
