"""
sl2-module multiset arithmetic
==============================

Modules are multisets of highest weights; R(k) has dimension k+1.  The
demo multiplies characters the Clebsch-Gordan way, takes symmetric and
exterior squares, and reads off eigenvalue dimensions and the signed
counts used to identify derived involutions.
"""

from nilorbits.sl2 import R, SL2Module, alt2, sym2, tensor

print("Clebsch-Gordan products:")
print(f"  R2 x R2 = {tensor(R(2), R(2))}")
print(f"  R4 x R2 = {tensor(R(4), R(2))}")

print()
print("squares:")
print(f"  Sym2 R2 = {sym2(R(2))}   Alt2 R2 = {alt2(R(2))}")
print(f"  Alt2(R4 + R2) = {alt2(SL2Module.parse('R4+R2'))}")

print()
m0 = SL2Module.parse("R2+R6+R10+R14")   # fixed part for the C4 pair of E6
m1 = SL2Module.parse("R4+R8+R10+R16")
print(f"M0 = {m0} (dim {m0.dim}),  M1 = {m1} (dim {m1.dim})")
print("eigenvalue dimensions d(i) of M0:",
      [m0.eigen_dim(i) for i in range(0, 16, 2)])
print("eigenvalue dimensions d(i) of M1:",
      [m1.eigen_dim(i) for i in range(0, 18, 2)])

print()
print("signed counts over R(2k):")
print(f"  M0 with (-1)^k      -> {m0.signed_count('even_plus')}")
print(f"  M1 with (-1)^k      -> {m1.signed_count('even_plus')}")
print(f"  M1 with (-1)^(k+1)  -> {m1.signed_count('odd_flip')}")
