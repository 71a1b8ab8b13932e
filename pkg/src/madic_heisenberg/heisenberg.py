"""The Heisenberg group over the m-adic completion and its chain geometry.

Elements are pairs (x, s) with x a vector and s a central scalar, under
(x, s) <> (y, t) = (x + y, s + t + B(x, y)).  Two chain families are
supported: H_j (vector and central coordinates both at depth j; normal)
and G_j (central depth 2j; compatible with dilations, generally not
normal).  Normality-style checks are exhaustive searches in the finite
quotient G/H_L and certify only the image there; the reports say so.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import madic
from .errors import (
    ContextMismatch,
    DomainError,
    LevelTooShallow,
    PrecisionExceeded,
)
from .hmodule import BilinearForm, ModuleVec, bilinear_eval
from .madic import MadicInt
from .tower import DEFAULT_PROFILE, RadiusProfile


class ChainFamily(Enum):
    H = "H"
    G = "G"

    @property
    def central_exponent(self) -> int:
        """Depth multiplier for the central coordinate at level j."""
        return 1 if self is ChainFamily.H else 2


@dataclass(frozen=True)
class HPoint:
    x: ModuleVec
    s: MadicInt

    def __post_init__(self):
        if self.x.m != self.s.m or self.x.n != self.s.n:
            raise ContextMismatch("vector and central coordinates disagree on (m, n)")

    def values(self) -> tuple[tuple[int, ...], int]:
        return self.x.values(), self.s.value

    def to_json(self) -> dict:
        return {"x": self.x.to_json(), "s": self.s.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "HPoint":
        return cls(x=ModuleVec.from_json(obj["x"]), s=MadicInt.from_json(obj["s"]))


@dataclass(frozen=True)
class GroupDistance:
    """Left-invariant distance at finite precision.

    exact means the valuation was determined below the precision cap; an
    inexact result only certifies valuation >= the reported value, and its
    radius is 0 when the displacement is trivial to full precision.
    """

    valuation: int
    radius: Fraction
    exact: bool


@dataclass(frozen=True)
class NormalityReport:
    normal: bool
    family: ChainFamily
    j: int
    quotient_level: int
    witness: tuple[HPoint, HPoint] | None
    certificate_scope: str

    def to_json(self) -> dict:
        out = {
            "verdict": "Normal" if self.normal else "NotNormal",
            "family": self.family.value,
            "j": self.j,
            "level": self.quotient_level,
            "certificate_scope": self.certificate_scope,
        }
        if self.witness is not None:
            a, h = self.witness
            out["witness"] = {"a": a.to_json(), "h": h.to_json()}
        else:
            out["witness"] = None
        return out


@dataclass(frozen=True)
class WeakNormalityReport:
    found: bool
    level: int | None
    family: ChainFamily
    j: int
    depth: int
    quotient_level: int

    def to_json(self) -> dict:
        return {
            "verdict": "FoundLevel" if self.found else "NotFoundUpToDepth",
            "level": self.level,
            "family": self.family.value,
            "j": self.j,
            "depth": self.depth,
            "quotient_level": self.quotient_level,
        }


@dataclass(frozen=True)
class HeisenbergContext:
    """Fixes one group: modulus, rank, bilinear form, radius profile,
    working precision.  All elements built through a context share them."""

    m: int
    rank: int
    form: BilinearForm
    precision: int
    profile: RadiusProfile = DEFAULT_PROFILE

    def __post_init__(self):
        if self.form.rank != self.rank:
            raise ContextMismatch(f"form rank {self.form.rank} != context rank {self.rank}")
        if self.m < 2 or self.precision < 1:
            raise DomainError("need modulus >= 2 and precision >= 1")

    def point(self, xs, s: int) -> HPoint:
        if len(tuple(xs)) != self.rank:
            raise ContextMismatch(f"expected {self.rank} vector coordinates")
        return HPoint(
            x=ModuleVec.from_integers(xs, self.m, self.precision),
            s=madic.from_integer(s, self.m, self.precision),
        )

    def identity(self) -> HPoint:
        return self.point((0,) * self.rank, 0)

    def at_precision(self, j: int) -> "HeisenbergContext":
        if not (1 <= j <= self.precision):
            raise PrecisionExceeded(f"precision {j} outside 1..{self.precision}")
        return HeisenbergContext(m=self.m, rank=self.rank, form=self.form,
                                 precision=j, profile=self.profile)

    def _check(self, *points: HPoint):
        for g in points:
            if g.x.rank != self.rank or g.x.m != self.m or g.x.n != self.precision:
                raise ContextMismatch(f"point {g} does not belong to this context")

    # group law ------------------------------------------------------------

    def mul(self, g: HPoint, h: HPoint) -> HPoint:
        self._check(g, h)
        return HPoint(x=g.x + h.x, s=g.s + h.s + bilinear_eval(self.form, g.x, h.x))

    def inv(self, g: HPoint) -> HPoint:
        self._check(g)
        return HPoint(x=-g.x, s=-g.s + bilinear_eval(self.form, g.x, g.x))

    def conjugate(self, g: HPoint, h: HPoint) -> HPoint:
        """(g <> h) <> g^-1, checked against the closed form
        (y, t + B(x, y) - B(y, x))."""
        self._check(g, h)
        direct = self.mul(self.mul(g, h), self.inv(g))
        skew = bilinear_eval(self.form, g.x, h.x) - bilinear_eval(self.form, h.x, g.x)
        closed = HPoint(x=h.x, s=h.s + skew)
        assert direct == closed, "conjugation closed form violated"
        return direct

    def dilate(self, r: int, g: HPoint) -> HPoint:
        self._check(g)
        return HPoint(x=g.x.scale(r), s=madic.scale(r * r, g.s))

    # chains ---------------------------------------------------------------

    def chain_member(self, g: HPoint, family: ChainFamily, j: int) -> bool | None:
        """Membership of g in the level-j subgroup; None when the required
        depth exceeds the precision (inconclusive at this precision)."""
        self._check(g)
        if j < 0:
            raise DomainError("chain level must be nonnegative")
        c = family.central_exponent
        if j > self.precision or c * j > self.precision:
            return None
        mj = self.m ** j
        mcj = self.m ** (c * j)
        return all(v % mj == 0 for v in g.x.values()) and g.s.value % mcj == 0

    def _membership_cap(self, family: ChainFamily) -> int:
        return self.precision // family.central_exponent

    def group_distance(self, g: HPoint, h: HPoint,
                       family: ChainFamily = ChainFamily.H) -> GroupDistance:
        """d(g, h) = rho(h^-1 <> g) with rho from the family chain.

        The valuation is capped at the deepest level decidable at this
        precision; hitting the cap yields an inexact (lower bound) result.
        """
        self._check(g, h)
        z = self.mul(self.inv(h), g)
        cap = self._membership_cap(family)
        depth = 0
        while depth < cap and self.chain_member(z, family, depth + 1):
            depth += 1
        if depth == cap:
            trivial = all(v == 0 for v in z.x.values()) and z.s.value == 0
            radius = Fraction(0) if trivial else self.profile.radius(cap)
            return GroupDistance(valuation=cap, radius=radius, exact=False)
        return GroupDistance(valuation=depth, radius=self.profile.radius(depth), exact=True)

    # finite quotients -----------------------------------------------------

    def coset_key(self, g: HPoint, family: ChainFamily, level: int):
        """Canonical digits of the left coset of g at the given level:
        vector digits below m^level, central digit below m^(c*level)."""
        self._check(g)
        c = family.central_exponent
        if level < 0 or c * level > self.precision:
            raise PrecisionExceeded(f"level {level} needs precision >= {c * level}")
        if level == 0:
            return ((0,) * self.rank, 0)
        ml = self.m ** level
        mcl = self.m ** (c * level)
        xs = g.x.values()
        x0 = tuple(v % ml for v in xs)
        correction = self.form.eval_ints(x0, tuple(a - b for a, b in zip(x0, xs)))
        s0 = (g.s.value + correction) % mcl
        return (x0, s0)

    def point_from_key(self, key) -> HPoint:
        x0, s0 = key
        return self.point(x0, s0)

    def project(self, g: HPoint, j: int) -> HPoint:
        """Quotient projection with kernel H_j, realized as truncation to
        precision j; operate on the result through at_precision(j)."""
        self._check(g)
        if not (1 <= j <= self.precision):
            raise PrecisionExceeded(f"level {j} outside 1..{self.precision}")
        return HPoint(x=g.x.truncate(j), s=madic.truncate(g.s, j))

    def _quotient_reps(self, level: int):
        """Canonical representatives of G/H_level, lexicographic in digits."""
        if level > self.precision:
            raise PrecisionExceeded(f"quotient level {level} > precision {self.precision}")
        ml = self.m ** level
        for xs in itertools.product(range(ml), repeat=self.rank):
            for s in range(ml):
                yield self.point(xs, s)

    def _subgroup_reps(self, family: ChainFamily, j: int, level: int):
        """Representatives of the level-j subgroup inside G/H_level."""
        c = family.central_exponent
        mj = self.m ** j
        mcj = self.m ** (c * j)
        ml = self.m ** level
        for xs in itertools.product(range(0, ml, mj), repeat=self.rank):
            for s in range(0, ml, mcj):
                yield self.point(xs, s)

    def _member_mod(self, g: HPoint, family: ChainFamily, j: int) -> bool:
        """Membership of the coset g*H_L in the image of the level-j
        subgroup, which reduces to plain digit divisibility."""
        c = family.central_exponent
        mj = self.m ** j
        mcj = self.m ** (c * j)
        return all(v % mj == 0 for v in g.x.values()) and g.s.value % mcj == 0

    def check_normality(self, family: ChainFamily, j: int,
                        quotient_level: int) -> NormalityReport:
        """Conjugate every subgroup representative by every quotient
        representative; the first escaping conjugate (in canonical order)
        is the witness.  A Normal verdict certifies the image in G/H_L only.
        """
        c = family.central_exponent
        if c * j > quotient_level:
            raise LevelTooShallow(
                f"level {quotient_level} cannot see the family-{family.value} subgroup at j={j}"
            )
        if quotient_level > self.precision:
            raise PrecisionExceeded(
                f"quotient level {quotient_level} > precision {self.precision}"
            )
        scope = f"image in G/H_{quotient_level} only (finite-quotient certificate)"
        if j == 0:
            return NormalityReport(True, family, j, quotient_level, None, scope)
        subgroup = list(self._subgroup_reps(family, j, quotient_level))
        for a in self._quotient_reps(quotient_level):
            for h in subgroup:
                if not self._member_mod(self.conjugate(a, h), family, j):
                    return NormalityReport(False, family, j, quotient_level, (a, h), scope)
        return NormalityReport(True, family, j, quotient_level, None, scope)

    def check_weak_normality(self, family: ChainFamily, a: HPoint, j: int,
                             depth: int, quotient_level: int) -> WeakNormalityReport:
        """Search l <= depth with family_l contained in a <> family_j <> a^-1,
        verified on finite-quotient representatives."""
        self._check(a)
        c = family.central_exponent
        if c * j > quotient_level or c * depth > quotient_level:
            raise LevelTooShallow(
                f"level {quotient_level} cannot see family-{family.value} depths up to {depth}"
            )
        if quotient_level > self.precision:
            raise PrecisionExceeded(
                f"quotient level {quotient_level} > precision {self.precision}"
            )
        a_inv = self.inv(a)
        for l in range(depth + 1):
            ok = all(
                self._member_mod(self.mul(self.mul(a_inv, h), a), family, j)
                for h in self._subgroup_reps(family, l, quotient_level)
            )
            if ok:
                return WeakNormalityReport(True, l, family, j, depth, quotient_level)
        return WeakNormalityReport(False, None, family, j, depth, quotient_level)
