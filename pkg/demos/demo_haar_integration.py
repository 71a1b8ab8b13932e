"""Exact Haar integration by coset averaging.

Cylinder functions factor through a finite quotient, so their invariant
integral is a finite average of exact rationals.  No limits, no floats;
the average is already stable at the function's own level.
"""

import random
from fractions import Fraction

from madic_heisenberg.haar import (
    CylinderFunction,
    enumerate_cosets,
    integrate,
    pushforward_table,
    translate,
)
from madic_heisenberg.heisenberg import ChainFamily, HeisenbergContext
from madic_heisenberg.hmodule import BilinearForm

G = ChainFamily.G
ctx = HeisenbergContext(m=2, rank=1, form=BilinearForm.from_rows([[1]]),
                        precision=4)

reps = enumerate_cosets(ctx, G, 1)
print(f"G/G_1 at m=2, N=1 has {len(reps.reps)} cosets:")
print(" ", [r.values() for r in reps.reps])

print("\nthe constant 1 integrates to 1 (probability normalization):")
print(" ", integrate(ctx, CylinderFunction.constant(ctx, G, 1, 1)))

ind = CylinderFunction.indicator(ctx, G, 1, ctx.identity())
print("\nan indicator integrates to one part in the coset count:")
print(f"  integral of 1_(identity coset) = {integrate(ctx, ind)}")

rng = random.Random(2)
f = CylinderFunction(level=1, family=G, table={
    ctx.coset_key(r, G, 1): Fraction(rng.randrange(-5, 6), rng.randrange(1, 5))
    for r in reps.reps
})
base = integrate(ctx, f)
print(f"\na random rational table integrates to {base}, and the deeper")
print(f"average agrees exactly: level 2 gives {integrate(ctx, f, 2)}")

print("\nleft translation never moves the integral:")
a = ctx.point((1,), 3)
print(f"  integral after left translation by {a.values()}: "
      f"{integrate(ctx, translate(ctx, f, a, 'left'))}")

print("\nright translation for the dilation chain G re-tabulates at level "
      "2l (G_1 is not normal), and the integral still agrees:")
right = translate(ctx, f, a, "right")
print(f"  new level {right.level}, integral {integrate(ctx, right)}")

lifted = pushforward_table(ctx, f, 2)
print(f"\nre-tabulating at level 2 multiplies the table size "
      f"({len(f.table)} -> {len(lifted.table)}) and preserves the integral: "
      f"{integrate(ctx, lifted)}")
