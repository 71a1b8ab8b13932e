"""The Heisenberg group law over the m-adic completion.

Pairs (x, s) multiply by (x, s) <> (y, t) = (x + y, s + t + B(x, y)).
An asymmetric B makes the group noncommutative; the chain subgroups H_j
and G_j give it a fractal geometry compatible with dilations.
"""

from madic_heisenberg.heisenberg import ChainFamily, HeisenbergContext
from madic_heisenberg.hmodule import BilinearForm

H, G = ChainFamily.H, ChainFamily.G

ctx = HeisenbergContext(m=3, rank=2,
                        form=BilinearForm.from_rows([[0, 1], [0, 0]]),
                        precision=4)
g = ctx.point((1, 0), 0)
h = ctx.point((0, 1), 0)

print("noncommutativity from the twist term B(x, y):")
print(f"  g <> h = {ctx.mul(g, h).values()}")
print(f"  h <> g = {ctx.mul(h, g).values()}")

print("\nconjugation only shifts the center, by B(x,y) - B(y,x):")
print(f"  g h g^-1 = {ctx.conjugate(g, h).values()}")

print("\ndilations scale the vector part by r and the center by r^2:")
k = ctx.point((1, 2), 1)
print(f"  delta_3({k.values()}) = {ctx.dilate(3, k).values()}")
print(f"  delta_2(delta_3(k)) == delta_6(k): "
      f"{ctx.dilate(2, ctx.dilate(3, k)) == ctx.dilate(6, k)}")

print("\nchain membership (H_j has central depth j, G_j has depth 2j):")
ctx2 = HeisenbergContext(m=2, rank=1, form=BilinearForm.from_rows([[1]]),
                         precision=5)
p = ctx2.point((4,), 8)
for fam, j in ((G, 2), (H, 2)):
    print(f"  ((4), 8) in {fam.value}_{j}: {ctx2.chain_member(p, fam, j)}")
print(f"  membership past the precision is honest: "
      f"{ctx2.chain_member(ctx2.identity(), G, 3)} (inconclusive)")

print("\nnormality differs between the families (finite-quotient certificates):")
print(f"  H_2 in G/H_4: {ctx2.check_normality(H, 2, 4).to_json()['verdict']}")
ctx3 = HeisenbergContext(m=2, rank=2,
                         form=BilinearForm.from_rows([[0, 1], [0, 0]]),
                         precision=6)
rep = ctx3.check_normality(G, 1, 4)
a, w = rep.witness
print(f"  G_1 in G/H_4: {rep.to_json()['verdict']}, witness: conjugating "
      f"{w.values()} by {a.values()} escapes")

print("\nbut G_j is weakly normal: some deeper level always fits inside "
      "the conjugate:")
wrep = ctx3.check_weak_normality(G, a, 1, 2, 4)
print(f"  G_{wrep.level} sits inside a G_1 a^-1 for that same a")
