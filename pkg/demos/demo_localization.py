"""Rings of fractions with a decidable equality oracle.

Localizing Z or Z/kZ at a multiplicative set S gives formal fractions
a/s with equality (a t - b s) v = 0 for some v in S.  Over Z/kZ zero
divisors make distinct-looking fractions collapse; the oracle handles
that honestly by searching the finite closure of S.
"""

from madic_heisenberg import localization as loc
from madic_heisenberg.hmodule import BilinearForm

Z = loc.BaseRing.integers()
S2 = loc.MultSet.generated(Z, [2])

print("over Z at S = powers of 2 (the dyadic rationals):")
a = loc.Fraction(ring=Z, mult_set=S2, num=1, den=2)
b = loc.Fraction(ring=Z, mult_set=S2, num=2, den=4)
print(f"  1/2 = 2/4: {loc.frac_equal(a, b)}")
s = loc.frac_add(a, a)
print(f"  1/2 + 1/2 = {s} (kept unreduced), equal to 1/1: "
      f"{loc.frac_equal(s, loc.canonical_hom(1, S2))}")

print("\nover Z/6 at S = {1, 3}, zero divisors matter:")
Z6 = loc.BaseRing.integers_mod(6)
S63 = loc.MultSet.generated(Z6, [3])
print(f"  closure of S: {sorted(S63.closure())}")
two = loc.Fraction(ring=Z6, mult_set=S63, num=2, den=1)
zero = loc.Fraction(ring=Z6, mult_set=S63, num=0, den=1)
print(f"  2/1 = 0/1: {loc.frac_equal(two, zero)}  (since 2 * 3 = 0 in Z/6)")
print(f"  the canonical map kills 2, witness: {loc.kernel_witness(2, S63)}")
print(f"  over Z the map is injective: witness for 3 is "
      f"{loc.kernel_witness(3, S2)}")

print("\nS = 1 + 4Z is multiplicative without being generator-built:")
S14 = loc.MultSet.one_plus_ideal(4)
print(f"  contains 5, 9, 25: {S14.contains(5)}, {S14.contains(9)}, "
      f"{S14.contains(25)}; contains 7: {S14.contains(7)}")

print("\nthe Heisenberg group localizes too: (x, s) -> (x/1, s/1) is a")
print("homomorphism and intertwines dilations:")
form = BilinearForm.from_rows([[0, 1], [0, 0]])
g = loc.heis_frac_hom((1, 0), 0, S2)
h = loc.heis_frac_hom((0, 1), 0, S2)
prod = loc.frac_heis_mul(form, g, h)
print(f"  hom(g) <> hom(h) has central part {prod.s}")
half = loc.Fraction(ring=Z, mult_set=S2, num=1, den=2)
shrunk = loc.frac_heis_dilate(half, prod)
print(f"  delta_(1/2) divides the center by 4: {shrunk.s}")
