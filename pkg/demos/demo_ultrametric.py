"""Ideal chains on Z and the ultrametrics they induce.

The chain m^j Z assigns every integer a valuation (how deep in the chain
it sits) and a radius profile turns valuations into exact rational
distances.  Balls nest or are disjoint; there are no partial overlaps.
"""

from fractions import Fraction

from madic_heisenberg import tower

chain = tower.ChainSpec.ideal_power(2)
profile = tower.RadiusProfile.geometric(Fraction(1, 2))

print("valuations along the 2-adic chain:")
for x in (12, 40, 5, 0):
    print(f"  j({x}) = {tower.valuation(x, chain)}")

print("\ndistances d(x, y) = r_{j(x - y)}:")
for x, y in ((5, 13), (0, 1), (7, 7)):
    d = tower.distance(x, y, chain, profile)
    print(f"  d({x}, {y}) = {d.radius}  (valuation {d.valuation})")

print("\nthe ultrametric inequality is strict nesting, not a tolerance:")
x, y, z = 3, 11, 35
dxz = tower.distance(x, z, chain, profile).radius
dxy = tower.distance(x, y, chain, profile).radius
dyz = tower.distance(y, z, chain, profile).radius
print(f"  d({x},{z}) = {dxz} <= max(d({x},{y}) = {dxy}, d({y},{z}) = {dyz})")

print("\ntwo chains are topologically equivalent when each level of one")
print("contains a level of the other.  2-adic vs 4-adic, depth 6:")
rep = tower.check_chain_equivalence(chain, tower.ChainSpec.ideal_power(4), 6)
print(f"  verdict: {rep.to_json()['verdict']}")
print(f"  forward witnesses (4^l Z inside 2^j Z): {rep.forward}")
print(f"  backward witnesses (2^n Z inside 4^k Z): {rep.backward}")

print("\n2-adic vs 6-adic fails: no power of 2 is divisible by 3:")
rep = tower.check_chain_equivalence(chain, tower.ChainSpec.ideal_power(6), 8)
print(f"  verdict: {rep.to_json()['verdict']}, "
      f"failing direction {rep.failing_direction}")
