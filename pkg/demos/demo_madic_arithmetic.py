"""Exact arithmetic in the m-adic completion at finite precision.

An element is a single residue mod m^n; the residues it induces at
shallower levels are automatically coherent.  Everything below is exact
integer arithmetic, including the inversion of 1 - x by a finite
geometric sum.
"""

from madic_heisenberg import madic

m, n = 2, 5
x = madic.from_integer(-1, m, n)
print(f"-1 in the 2-adic completion at precision 5: {x}")
print("its coherent residue ladder:",
      [madic.truncate(x, j).value for j in range(1, n + 1)])

print("\nbuilding from residues validates coherence:")
y = madic.from_residues(2, [(1, 1), (2, 3), (3, 3)])
print(f"  [(1,1), (2,3), (3,3)] -> {y}")
try:
    madic.from_residues(2, [(1, 0), (2, 1)])
except Exception as err:
    print(f"  [(1,0), (2,1)] -> {type(err).__name__}: {err}")

print("\nunits invert by extended Euclid:")
u = madic.from_integer(2, 5, 3)
w = madic.invert_unit(u)
print(f"  ({u})^-1 = {w}; check: {u * w}")

print("\n1 - x inverts by a geometric sum when x is divisible by m:")
for mm, nn, xv in ((2, 5, 2), (3, 3, 3)):
    xx = madic.from_integer(xv, mm, nn)
    s = madic.geom_inverse_one_minus(xx)
    one = madic.one(mm, nn)
    print(f"  m={mm}, n={nn}, x={xv}: sum = {s.value}; (1 - x) * sum = {(one - xx) * s}")

print("\nthe zero residue only bounds a valuation from below:")
print(f"  valuation(0 mod 3^4) = {madic.valuation(madic.zero(3, 4))}")
print(f"  valuation(12 mod 2^5) = {madic.valuation(madic.from_integer(12, 2, 5))}")
