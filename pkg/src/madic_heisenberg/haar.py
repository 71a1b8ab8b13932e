"""Exact Haar integration on the compact Heisenberg group.

Integrable functions are cylinder functions: exact-rational tables over
the cosets of a chain subgroup at some level.  The invariant integral of
such a function is its average over coset representatives, computed
exactly; no limits are taken numerically because the averages stabilize
at the function's own level.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, PrecisionExceeded
from .heisenberg import ChainFamily, HeisenbergContext, HPoint
from .tower import format_rational, parse_rational


def quotient_size(ctx: HeisenbergContext, family: ChainFamily, level: int) -> int:
    """Index of the level subgroup: m^(level*(N+1)) for H, m^(level*(N+2)) for G."""
    return ctx.m ** (level * (ctx.rank + family.central_exponent))


@dataclass(frozen=True)
class CosetReps:
    level: int
    family: ChainFamily
    reps: tuple[HPoint, ...]


def enumerate_cosets(ctx: HeisenbergContext, family: ChainFamily, n: int) -> CosetReps:
    """Canonical coset representatives at level n, lexicographic in digits:
    vector digits below m^n, central digit below m^(c*n)."""
    c = family.central_exponent
    if n < 0:
        raise DomainError("level must be nonnegative")
    if c * n > ctx.precision:
        raise PrecisionExceeded(f"level {n} needs precision >= {c * n}")
    if n == 0:
        return CosetReps(level=0, family=family, reps=(ctx.identity(),))
    mn = ctx.m ** n
    mcn = ctx.m ** (c * n)
    reps = tuple(
        ctx.point(xs, s)
        for xs in itertools.product(range(mn), repeat=ctx.rank)
        for s in range(mcn)
    )
    return CosetReps(level=n, family=family, reps=reps)


@dataclass(frozen=True)
class CylinderFunction:
    """Level-l table of exact rationals over the cosets of the level-l
    subgroup, keyed by canonical digits ((x_1, ..., x_N), s)."""

    level: int
    family: ChainFamily
    table: dict

    def __post_init__(self):
        object.__setattr__(
            self, "table", {k: Fraction(v) for k, v in self.table.items()}
        )

    def value_at(self, ctx: HeisenbergContext, g: HPoint) -> Fraction:
        return self.table[ctx.coset_key(g, self.family, self.level)]

    @classmethod
    def constant(cls, ctx: HeisenbergContext, family: ChainFamily, level: int,
                 value) -> "CylinderFunction":
        reps = enumerate_cosets(ctx, family, level)
        value = Fraction(value)
        return cls(level=level, family=family, table={
            ctx.coset_key(r, family, level): value for r in reps.reps
        })

    @classmethod
    def indicator(cls, ctx: HeisenbergContext, family: ChainFamily, level: int,
                  of: HPoint) -> "CylinderFunction":
        """Indicator of the coset containing `of`."""
        target = ctx.coset_key(of, family, level)
        reps = enumerate_cosets(ctx, family, level)
        return cls(level=level, family=family, table={
            (k := ctx.coset_key(r, family, level)): Fraction(1 if k == target else 0)
            for r in reps.reps
        })

    def check_complete(self, ctx: HeisenbergContext):
        expected = quotient_size(ctx, self.family, self.level)
        if len(self.table) != expected:
            raise DomainError(
                f"table has {len(self.table)} entries, quotient has {expected} cosets"
            )

    def __add__(self, other: "CylinderFunction") -> "CylinderFunction":
        if (self.level, self.family) != (other.level, other.family):
            raise DomainError("can only add cylinder functions at the same level and family")
        return CylinderFunction(
            level=self.level, family=self.family,
            table={k: v + other.table[k] for k, v in self.table.items()},
        )

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "family": self.family.value,
            "entries": [
                {"rep": {"x": list(k[0]), "s": k[1]}, "value": format_rational(v)}
                for k, v in sorted(self.table.items())
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CylinderFunction":
        table = {
            (tuple(e["rep"]["x"]), e["rep"]["s"]): parse_rational(e["value"])
            for e in obj["entries"]
        }
        return cls(level=obj["level"], family=ChainFamily(obj["family"]), table=table)


def average_over(ctx: HeisenbergContext, f: CylinderFunction, points) -> Fraction:
    """Exact average of f over an arbitrary finite set of points."""
    points = list(points)
    return sum((f.value_at(ctx, g) for g in points), Fraction(0)) / len(points)


def integrate(ctx: HeisenbergContext, f: CylinderFunction, n: int | None = None) -> Fraction:
    """Invariant integral: the average of the table.

    When asked at a deeper level n the average over level-n representatives
    is computed and checked against the level-l value; they agree exactly
    because every level-l coset splits into equally many level-n cosets.
    """
    f.check_complete(ctx)
    base = sum(f.table.values(), Fraction(0)) / len(f.table)
    if n is None or n == f.level:
        return base
    if n < f.level:
        raise DomainError(f"integration level {n} below function level {f.level}")
    deep = average_over(ctx, f, enumerate_cosets(ctx, f.family, n).reps)
    assert deep == base, "coset average failed to stabilize"
    return base


def translate(ctx: HeisenbergContext, f: CylinderFunction, a: HPoint,
              side: str) -> CylinderFunction:
    """Translate of f by a: left sends g to f(a <> g) at the same level;
    right sends g to f(g <> a), re-tabulated at level 2l for family G
    (where it is only a level-2l cylinder function) and at level l for
    the normal family H."""
    f.check_complete(ctx)
    if side == "left":
        new_level = f.level
        compose = lambda g: ctx.mul(a, g)
    elif side == "right":
        new_level = f.level if f.family is ChainFamily.H else 2 * f.level
        compose = lambda g: ctx.mul(g, a)
    else:
        raise DomainError(f"side must be 'left' or 'right', got {side!r}")
    reps = enumerate_cosets(ctx, f.family, new_level)
    return CylinderFunction(
        level=new_level, family=f.family,
        table={
            ctx.coset_key(r, f.family, new_level): f.value_at(ctx, compose(r))
            for r in reps.reps
        },
    )


def pushforward_table(ctx: HeisenbergContext, f: CylinderFunction,
                      n: int) -> CylinderFunction:
    """The same function re-tabulated at a deeper level n > l; the
    integral is preserved exactly."""
    if n <= f.level:
        raise DomainError(f"target level {n} must exceed function level {f.level}")
    reps = enumerate_cosets(ctx, f.family, n)
    return CylinderFunction(
        level=n, family=f.family,
        table={
            ctx.coset_key(r, f.family, n): f.value_at(ctx, r) for r in reps.reps
        },
    )
