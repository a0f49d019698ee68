"""
The matrix oracle
=================

Everything the combinatorial layers compute can be recomputed from
explicit integer matrices: triples from Jordan strings, involutions as
conjugations or form twists, centralisers as kernels of ad e.  The demo
runs both paths side by side and finishes with the search that fills the
one gap without a closed form: half-orbits in sp_2n.
"""

from nilorbits.gradings import decompose, grading_grid
from nilorbits.involutions import pair_by_descriptor
from nilorbits.orbits import (ClassicalOrbit, Partition, centralizer_dims,
                              valid_partitions, is_divisible)
from nilorbits.oracle import (centralizer_dim, ker_ad_squared, oracle_grid,
                              sp_half_partition, triple_from_partition)
from nilorbits.roots import SimpleType

lam = Partition.parse("(5,3,1)")
t = triple_from_partition("so", 9, lam)
print(f"so9 {lam}: triple relations hold: {t.check_relations()}")
print(f"  h eigenvalues: {t.h_diagonal}")
print(f"  dim z(e): matrix rank -> {centralizer_dim(t)}, "
      f"partition formula -> {centralizer_dims(ClassicalOrbit('so', 9, lam))[0]}")

print()
lam = Partition.parse("(5,1)")
t = triple_from_partition("sl", 6, lam)
half = Partition.parse("(3,2,1)")
print(f"sl6 {lam}: dim ker(ad e)^2 = {ker_ad_squared(t)} agrees with "
      f"dim z of the half-orbit {half} = "
      f"{centralizer_dims(ClassicalOrbit('sl', 6, half))[0]}")

print()
pair = pair_by_descriptor(SimpleType("D", 5), "gl5")
print(f"{pair}: matrix grid equals the module-theoretic grid: "
      f"{oracle_grid(pair) == grading_grid(decompose(pair))}")

print()
print("sp half-orbits, recovered by matching halved weight strings:")
for n in (6, 8):
    for o in valid_partitions("sp", n):
        if is_divisible(o):
            half = sp_half_partition(o.partition, n)
            print(f"  sp{n} {o.partition} -> {half}")
