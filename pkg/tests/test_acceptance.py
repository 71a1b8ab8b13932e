"""Acceptance gate: one test per criterion, all checks exact (zero
tolerance), fixed seeds, one PASS/FAIL line printed per criterion."""

import itertools
import json
import math
import random
import subprocess
import sys
from fractions import Fraction as Rational

from madic_heisenberg import localization as loc
from madic_heisenberg import madic, tower
from madic_heisenberg.haar import (
    CylinderFunction,
    average_over,
    enumerate_cosets,
    integrate,
    translate,
)
from madic_heisenberg.heisenberg import ChainFamily, HeisenbergContext, HPoint
from madic_heisenberg.hmodule import BilinearForm

H, G = ChainFamily.H, ChainFamily.G
GEO = tower.DEFAULT_PROFILE


def _report(number, title, body):
    try:
        body()
    except BaseException:
        print(f"FAIL criterion {number}: {title}")
        raise
    print(f"PASS criterion {number}: {title}")


def test_criterion_1_ultrametric():
    def body():
        rng = random.Random(101)
        for m in (2, 3, 10):
            chain = tower.ChainSpec.ideal_power(m)
            for _ in range(10_000):
                x, y, z = (rng.randrange(-10**9, 10**9) for _ in range(3))
                dxy = tower.distance(x, y, chain, GEO)
                dyz = tower.distance(y, z, chain, GEO)
                dxz = tower.distance(x, z, chain, GEO)
                assert dxz.radius <= max(dxy.radius, dyz.radius)
                assert dxy == tower.distance(y, x, chain, GEO)
                assert dxy == tower.distance(x - z, y - z, chain, GEO)

    _report(1, "ultrametric triangle inequality, symmetry, translation "
               "invariance for m in {2, 3, 10}, 10^4 triples each", body)


def test_criterion_2_completion_ring():
    def body():
        rng = random.Random(102)
        for m, n in ((2, 6), (3, 4), (10, 3)):
            top = m ** n
            one = madic.one(m, n)
            for _ in range(10_000):
                a, b, c = (madic.MadicInt(m, n, rng.randrange(top)) for _ in range(3))
                assert a + b == b + a and a * b == b * a
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c
                j = rng.randrange(1, n + 1)
                assert madic.truncate(a * b, j) == \
                    madic.truncate(a, j) * madic.truncate(b, j)
                assert madic.truncate(a + b, j) == \
                    madic.truncate(a, j) + madic.truncate(b, j)
            for _ in range(34):
                x = madic.scale(m, madic.MadicInt(m, n, rng.randrange(top)))
                s = madic.geom_inverse_one_minus(x)
                assert (one - x) * s == one
        assert madic.geom_inverse_one_minus(madic.from_integer(2, 2, 5)).value == 31
        assert madic.geom_inverse_one_minus(madic.from_integer(3, 3, 3)).value == 13

    _report(2, "ring axioms and truncation homomorphisms at (2,6), (3,4), "
               "(10,3) on 10^4 triples each; geometric inversion verified by "
               "multiplication, worked values 31 and 13", body)


def _quotient_key_table(ctx, family, level):
    reps = enumerate_cosets(ctx, family, level).reps
    return {ctx.coset_key(r, family, level): r for r in reps}


def test_criterion_3_group_suite():
    def body():
        rng = random.Random(103)
        forms = [BilinearForm.from_rows([[1]]),
                 BilinearForm.from_rows([[0, 1], [0, 0]]),
                 BilinearForm.from_rows([[0, 1], [-1, 0]])]
        for form, m in itertools.product(forms, (2, 3)):
            ctx = HeisenbergContext(m=m, rank=form.rank, form=form, precision=6)
            top = m ** 6
            e = ctx.identity()

            def sample():
                return ctx.point(tuple(rng.randrange(top) for _ in range(form.rank)),
                                 rng.randrange(top))

            for _ in range(10_000 // 6 + 1):
                g, h, k = sample(), sample(), sample()
                assert ctx.mul(ctx.mul(g, h), k) == ctx.mul(g, ctx.mul(h, k))
                assert ctx.mul(g, e) == g == ctx.mul(e, g)
                inv = ctx.inv(g)
                assert inv.x == -g.x
                assert inv.s == -g.s + madic.from_integer(
                    form.eval_ints(g.x.values(), g.x.values()), m, 6)
                assert ctx.mul(g, inv) == e == ctx.mul(inv, g)
                conj = ctx.conjugate(g, h)  # closed form asserted internally
                skew = form.eval_ints(g.x.values(), h.x.values()) - \
                    form.eval_ints(h.x.values(), g.x.values())
                assert conj.x == h.x
                assert conj.s == h.s + madic.from_integer(skew, m, 6)

        # exhaustive level-1 quotient, m=2, N=1 (8 cosets of G_1, 64 pairs)
        ctx = HeisenbergContext(m=2, rank=1,
                                form=BilinearForm.from_rows([[1]]), precision=6)
        table = _quotient_key_table(ctx, G, 1)
        keys = list(table)

        def qmul(ka, kb):
            return ctx.coset_key(ctx.mul(table[ka], table[kb]), G, 1)

        # well-definedness: moving a factor inside its coset keeps the product
        perturb = ctx.point((2,), 4)  # an element of G_1
        for ka, kb in itertools.product(keys, repeat=2):
            assert qmul(ka, kb) == ctx.coset_key(
                ctx.mul(ctx.mul(table[ka], perturb), table[kb]), G, 1)
        ek = ctx.coset_key(ctx.identity(), G, 1)
        for ka in keys:
            assert qmul(ka, ek) == ka == qmul(ek, ka)
            assert qmul(ka, ctx.coset_key(ctx.inv(table[ka]), G, 1)) == ek
        for ka, kb, kc in itertools.product(keys, repeat=3):
            assert qmul(qmul(ka, kb), kc) == qmul(ka, qmul(kb, kc))

    _report(3, "group axioms, inverse and conjugation closed forms for three "
               "bilinear forms at m in {2, 3}, n=6, 10^4 samples, plus the "
               "exhaustive level-1 quotient at m=2, N=1", body)


def test_criterion_4_chain_suite():
    def body():
        rng = random.Random(104)
        form = BilinearForm.from_rows([[0, 1], [0, 0]])
        for m in (2, 3):
            n = 6
            ctx = HeisenbergContext(m=m, rank=2, form=form, precision=n)
            top = m ** n
            for j in range(0, n + 1):
                for l in range(0, n + 1):
                    if 2 * (j + l) > n:
                        continue
                    for _ in range(200):
                        # a generic element of H_{2j}
                        h2j = ctx.point(
                            tuple(m ** (2 * j) * rng.randrange(top) for _ in range(2)),
                            m ** (2 * j) * rng.randrange(top))
                        assert ctx.chain_member(h2j, G, j) is True
                        # a generic element of G_j
                        gj = ctx.point(
                            tuple(m ** j * rng.randrange(top) for _ in range(2)),
                            m ** (2 * j) * rng.randrange(top))
                        assert ctx.chain_member(gj, H, j) is True
                        # dilation by r = m^l pushes G_j into G_{j+l}
                        assert ctx.chain_member(ctx.dilate(m ** l, gj), G, j + l) is True

    _report(4, "sandwich H_2j within G_j within H_j and dilation "
               "compatibility for all j, l with 2(j+l) <= n", body)


def test_criterion_5_normality():
    def body():
        ctx1 = HeisenbergContext(m=2, rank=1,
                                 form=BilinearForm.from_rows([[1]]), precision=6)
        for j in (0, 1, 2):
            rep = ctx1.check_normality(H, j, 4)
            assert rep.normal and rep.witness is None

        ctx2 = HeisenbergContext(m=2, rank=2,
                                 form=BilinearForm.from_rows([[0, 1], [0, 0]]),
                                 precision=6)
        rep = ctx2.check_normality(G, 1, 4)
        assert not rep.normal and rep.witness is not None
        a, h = rep.witness
        assert ctx2._member_mod(h, G, 1)
        assert not ctx2._member_mod(ctx2.conjugate(a, h), G, 1)

        # weak normality: some l <= 2j works for every a in the level-2 quotient
        j = 1
        for a in ctx2._quotient_reps(2):
            wrep = ctx2.check_weak_normality(G, a, j, 2 * j, 4)
            assert wrep.found and wrep.level <= 2 * j

    _report(5, "Normal certificate for family H (j <= 2, L=4), NotNormal "
               "with replayed witness for family G (j=1), weak normality "
               "l <= 2j across the level-2 quotient", body)


def test_criterion_6_haar():
    def body():
        rng = random.Random(106)
        cases = [
            (HeisenbergContext(m=2, rank=1, form=BilinearForm.from_rows([[1]]),
                               precision=4), G, 8),
            (HeisenbergContext(m=3, rank=2,
                               form=BilinearForm.from_rows([[0, 1], [0, 0]]),
                               precision=2), H, 27),
        ]
        for ctx, fam, count in cases:
            reps = enumerate_cosets(ctx, fam, 1).reps
            assert len(reps) == count
            assert integrate(ctx, CylinderFunction.constant(ctx, fam, 1, 1)) == 1
            ind = CylinderFunction.indicator(ctx, fam, 1, reps[count // 2])
            assert integrate(ctx, ind) == Rational(1, count)

            f = CylinderFunction(level=1, family=fam, table={
                ctx.coset_key(r, fam, 1): Rational(rng.randrange(-9, 10),
                                                   rng.randrange(1, 8))
                for r in reps
            })
            base = integrate(ctx, f)
            assert integrate(ctx, f, 2) == base  # level-independence at n = l+1

            translators = enumerate_cosets(ctx, fam, 2).reps if fam is H \
                else enumerate_cosets(ctx, fam, 1).reps
            for a in translators:
                assert integrate(ctx, translate(ctx, f, a, "left")) == base
                assert integrate(ctx, translate(ctx, f, a, "right")) == base

            # representative independence: push every representative right
            # by a fixed element of the level subgroup
            c = fam.central_exponent
            perturb = ctx.point(tuple([ctx.m] * ctx.rank), ctx.m ** c)
            moved = [ctx.mul(r, perturb) for r in reps]
            assert average_over(ctx, f, moved) == base

    _report(6, "Haar: total mass 1, indicator mass 1/|G/G_l|, level "
               "independence, left invariance for all translators, right "
               "invariance, representative independence (8 and 27 cosets)", body)


def test_criterion_7_isometry():
    def body():
        rng = random.Random(107)
        ctx = HeisenbergContext(m=2, rank=1,
                                form=BilinearForm.from_rows([[1]]), precision=5)
        for _ in range(1_000):
            g = ctx.point((rng.randrange(32),), rng.randrange(32))
            h = ctx.point((rng.randrange(32),), rng.randrange(32))
            d = ctx.group_distance(g, h, H)
            agree = 0
            for j in range(1, 6):
                if ctx.project(g, j) != ctx.project(h, j):
                    break
                agree = j
            assert d.valuation == agree

    _report(7, "group distance valuation equals the first disagreement of "
               "the projection sequences on 10^3 pairs (family H, m=2, N=1, "
               "n=5)", body)


def test_criterion_8_fractions():
    def body():
        rng = random.Random(108)
        Z = loc.BaseRing.integers()
        S2 = loc.MultSet.generated(Z, [2])
        for _ in range(10_000):
            a = loc.Fraction(ring=Z, mult_set=S2, num=rng.randrange(-99, 100),
                             den=2 ** rng.randrange(6))
            b = loc.Fraction(ring=Z, mult_set=S2, num=rng.randrange(-99, 100),
                             den=2 ** rng.randrange(6))
            ra, rb = loc.frac_to_rational(a), loc.frac_to_rational(b)
            assert loc.frac_to_rational(loc.frac_add(a, b)) == ra + rb
            assert loc.frac_to_rational(loc.frac_mul(a, b)) == ra * rb
            assert loc.frac_equal(a, b) == (ra == rb)

        Z6 = loc.BaseRing.integers_mod(6)
        S63 = loc.MultSet.generated(Z6, [3])
        assert S63.closure() == frozenset({1, 3})
        fracs = [loc.Fraction(ring=Z6, mult_set=S63, num=a, den=s)
                 for a in range(6) for s in (1, 3)]
        for x, y, z in itertools.product(fracs, repeat=3):
            if loc.frac_equal(x, y) and loc.frac_equal(y, z):
                assert loc.frac_equal(x, z)
        assert loc.kernel_witness(2, S63) == 3

        form = BilinearForm.from_rows([[0, 1], [0, 0]])
        for _ in range(1_000):
            xs = tuple(rng.randrange(-9, 10) for _ in range(2))
            ys = tuple(rng.randrange(-9, 10) for _ in range(2))
            s, t = rng.randrange(-9, 10), rng.randrange(-9, 10)
            r = rng.randrange(-6, 7)
            prod = (tuple(p + q for p, q in zip(xs, ys)),
                    s + t + form.eval_ints(xs, ys))
            assert loc.frac_hpoint_equal(
                loc.heis_frac_hom(*prod, S2),
                loc.frac_heis_mul(form, loc.heis_frac_hom(xs, s, S2),
                                  loc.heis_frac_hom(ys, t, S2)))
            assert loc.frac_hpoint_equal(
                loc.heis_frac_hom(tuple(r * v for v in xs), r * r * s, S2),
                loc.frac_heis_dilate(loc.canonical_hom(r, S2),
                                     loc.heis_frac_hom(xs, s, S2)))

    _report(8, "fraction arithmetic matches exact rationals on 10^4 ops, "
               "transitivity over Z/6 exhaustive, kernel_witness(2)=3, "
               "Heisenberg fraction homomorphism and dilation intertwining "
               "on 10^3 pairs", body)


def test_criterion_9_cli():
    def body():
        def run_cli(*args):
            return subprocess.run(
                [sys.executable, "-m", "madic_heisenberg.cli", *args],
                capture_output=True)

        out = run_cli("dist", "--m", "2", "--x", "5", "--y", "13")
        assert out.returncode == 0
        assert out.stdout == b'{"valuation": 3, "radius": "1/8"}\n'

        out = run_cli("haar", "--m", "2", "--N", "1", "--b", "[[1]]",
                      "--level", "1", "--function", "const1")
        assert out.returncode == 0
        assert out.stdout == b'{"integral": "1/1"}\n'

        out = run_cli("mul", "--m", "2", "--N", "1", "--b", "[[1]]",
                      "--g", '{"x": [0], "s": 0}', "--h", '{"x": [5], "s": 9}')
        assert json.loads(out.stdout) == {"x": [5], "s": 9, "m": 2, "n": 6}

        for case in (
            ("check-normal", "--m", "2", "--N", "2", "--b", "[[0,1],[0,0]]",
             "--family", "G", "--j", "1", "--level", "4"),
            ("haar", "--m", "3", "--N", "2", "--b", "[[0,1],[0,0]]", "--n", "2",
             "--family", "H", "--level", "1",
             "--function", 'indicator:{"x": [1, 2], "s": 0}'),
        ):
            assert run_cli(*case).stdout == run_cli(*case).stdout

        out = run_cli("selftest")
        assert out.returncode == 0

    _report(9, "documented CLI invocations are byte-identical to their "
               "documented outputs and reruns; selftest passes", body)
