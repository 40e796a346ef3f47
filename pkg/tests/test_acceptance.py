"""End-to-end acceptance run, one printed pass/fail line per criterion.

Run `pytest -s tests/test_acceptance.py` to see the report lines as they
happen.  Every identity is checked with exact rational arithmetic; the time
budgets are generous bounds for an ordinary laptop.  Criterion 3 checks all
25^3 basis triples when SUPERSPACE_FULL is set and a 2000-triple sample
otherwise.
"""

import io
import os
import time
from contextlib import redirect_stderr, redirect_stdout
from itertools import product
from random import Random

import helpers
from superspace import cli, conformal, geometry, ratmat, realform, superflag
from superspace.conformal import AlgebraElement, bracket
from superspace.geometry import PoincareElement
from superspace.grassmann import GaussianRational, GrassmannAlgebra
from superspace.realform import ConjugationConfig
from superspace.sampling import (
    random_bigcell_point,
    random_even,
    random_even_block,
    random_gaussian,
    random_invertible_matrix,
    random_invertible_supermatrix,
    random_matrix,
    random_odd,
    random_odd_block,
    random_plane,
    random_poincare,
    random_sl2,
    random_special_supermatrix,
    random_supernumber,
    random_superpoincare,
)
from superspace.supermatrix import (
    EVEN,
    SuperMatrix,
    block_add,
    block_dagger,
    block_eq,
    block_is_zero,
    block_mul,
    block_scale_left,
    block_zero,
)

_T0 = time.perf_counter()


def _report(num: int, label: str, fn, budget: float | None = None) -> None:
    t0 = time.perf_counter()
    try:
        fn()
    except BaseException:
        print(f"FAIL criterion {num}: {label}")
        raise
    dt = time.perf_counter() - t0
    if budget is not None and dt >= budget:
        print(f"FAIL criterion {num}: {label} ({dt:.2f}s over the {budget:.0f}s budget)")
        raise AssertionError(f"criterion {num} exceeded its time budget")
    timing = f"{dt:.2f}s" + (f" < {budget:.0f}s" if budget is not None else "")
    print(f"PASS criterion {num}: {label} ({timing})")


def test_c01_grassmann_ring_axioms():
    """Supercommutativity, associativity, distributivity, bar involution."""

    def run():
        small = [GrassmannAlgebra(q) for q in range(4)] + [GrassmannAlgebra.paired(2)]
        for alg in small:
            monos = [alg.from_mask(m) for m in alg.monomial_masks()]
            degree = [bin(m).count("1") for m in alg.monomial_masks()]
            for a, pa in zip(monos, degree):
                assert (a.bar().bar() - a).is_zero()
                for b, pb in zip(monos, degree):
                    sign = -1 if (pa & 1) and (pb & 1) else 1
                    assert (a * b - sign * (b * a)).is_zero()
                    assert ((a * b).bar() - a.bar() * b.bar()).is_zero()
            for a in monos:
                for b in monos:
                    for c in monos:
                        assert ((a * b) * c - a * (b * c)).is_zero()
                        assert (a * (b + c) - (a * b + a * c)).is_zero()
        alg8 = GrassmannAlgebra.paired(4)
        rng = Random(101)
        for _ in range(500):
            x = random_supernumber(rng, alg8)
            y = random_supernumber(rng, alg8)
            z = random_supernumber(rng, alg8)
            assert ((x * y) * z - x * (y * z)).is_zero()
            assert (x * (y + z) - (x * y + x * z)).is_zero()
            assert ((x * y).bar() - x.bar() * y.bar()).is_zero()
            assert (x.bar().bar() - x).is_zero()
            for xh, px in ((x.even_part(), 0), (x.odd_part(), 1)):
                for yh, py in ((y.even_part(), 0), (y.odd_part(), 1)):
                    sign = -1 if px and py else 1
                    assert (xh * yh - sign * (yh * xh)).is_zero()

    _report(1, "grassmann ring axioms, exhaustive small and sampled q=8", run, 5)


def test_c02_berezinian_multiplicative():
    """Ber(gh) = Ber(g)Ber(h); the single-determinant variant fails."""

    def run():
        cases = [((1, 1), 8), ((2, 1), 8), ((2, 2), 8), ((4, 1), 4)]
        for (m, n), q in cases:
            alg = GrassmannAlgebra.paired(q // 2)
            rng = Random(200 + 10 * m + n)
            for _ in range(200):
                g = random_invertible_supermatrix(rng, alg, m, n)
                h = random_invertible_supermatrix(rng, alg, m, n)
                lhs = (g @ h).berezinian()
                assert (lhs - g.berezinian() * h.berezinian()).is_zero()
        alg = GrassmannAlgebra(4)
        x1, x2, x3, x4 = (alg.gen(k) for k in range(1, 5))
        one, two = alg.one(), alg.scalar(2)
        g = SuperMatrix((1, 1), ((one, x1), (x2, two)), EVEN)
        h = SuperMatrix((1, 1), ((one, x3), (x4, two)), EVEN)
        wrong = (g @ h)._berezinian_qsr() - g._berezinian_qsr() * h._berezinian_qsr()
        assert not wrong.is_zero()

    _report(2, "berezinian multiplicative on four shapes, variant rejected", run, 30)


def test_c03_super_jacobi():
    """Graded Jacobi identity for the 5x5 matrix superbracket."""

    def run():
        positions = [(i, j) for i in range(5) for j in range(5)]
        basis = {pos: AlgebraElement.basis_element(*pos) for pos in positions}
        par = {(i, j): 1 if (i == 4) != (j == 4) else 0 for i, j in positions}
        sign = lambda a, b: -1 if (a and b) else 1
        if os.environ.get("SUPERSPACE_FULL"):
            triples = product(positions, repeat=3)
        else:
            rng = Random(307)
            triples = (
                tuple(positions[rng.randrange(25)] for _ in range(3))
                for _ in range(2000)
            )
        for pa, pb, pc in triples:
            x, y, z = basis[pa], basis[pb], basis[pc]
            px, py, pz = par[pa], par[pb], par[pc]
            defect = (
                sign(px, pz) * bracket(x, bracket(y, z))
                + sign(py, px) * bracket(y, bracket(z, x))
                + sign(pz, py) * bracket(z, bracket(x, y))
            )
            assert defect.is_zero(), (pa, pb, pc)

    _report(3, "super jacobi identity on basis triples", run, 60)


def test_c04_parabolic_translation_split():
    """The 16|8 algebra splits as 12|4 + 4|4 with an abelian-even summand."""

    def run():
        sl = conformal.sl_basis()
        evens = [b for b in sl if b.odd_part().is_zero()]
        odds = [b for b in sl if b.even_part().is_zero()]
        assert (len(evens), len(odds)) == (16, 8)
        assert len(evens) + len(odds) == len(sl)
        assert conformal.pattern_dimensions("p") == (12, 4)
        assert conformal.pattern_dimensions("n") == (4, 4)
        for name in ("p", "n"):
            basis = conformal.pattern_basis(name)
            for a in basis:
                for b in basis:
                    assert conformal.subspace_membership(bracket(a, b), name)
        n0 = conformal.pattern_basis("n0")
        n1 = conformal.pattern_basis("n1")
        for a in n0:
            for b in n0:
                assert bracket(a, b).is_zero()
            for b in n1:
                assert bracket(a, b).is_zero()
        nonzero = 0
        for a in n1:
            for b in n1:
                pair = bracket(a, b)
                assert conformal.subspace_membership(pair, "n0")
                nonzero += not pair.is_zero()
        assert nonzero > 0
        for x in sl:
            p_part, n_part = conformal.split_pn(x)
            assert p_part + n_part == x
            assert conformal.subspace_membership(p_part, "p")
            assert conformal.subspace_membership(n_part, "n")
        report = conformal.verify_translation_algebra("n")
        assert report.ok

    _report(4, "parabolic plus translation decomposition, exhaustive", run, 5)


def test_c05_lorentz_action():
    """Unimodular pairs act compatibly and preserve the quadratic form."""

    def run():
        rng = Random(503)
        for _ in range(100):
            x1, y1 = random_sl2(rng), random_sl2(rng)
            x2, y2 = random_sl2(rng), random_sl2(rng)
            gv, dv = random_matrix(rng, 2, 1), random_matrix(rng, 1, 2)
            gw, dw = random_matrix(rng, 2, 1), random_matrix(rng, 1, 2)
            # composing two actions equals acting by the products
            step = conformal.lorentz_act(x1, y1, gv, dv)
            twice = conformal.lorentz_act(x2, y2, *step)
            combined = conformal.lorentz_act(
                ratmat.mul(x2, x1), ratmat.mul(y2, y1), gv, dv
            )
            assert ratmat.eq(twice[0], combined[0])
            assert ratmat.eq(twice[1], combined[1])
            v = conformal.from_n1_components(gv, dv)
            w = conformal.from_n1_components(gw, dw)
            before = conformal.a_block(conformal.odd_pair(v, w))
            va = conformal.from_n1_components(*conformal.lorentz_act(x1, y1, gv, dv))
            wa = conformal.from_n1_components(*conformal.lorentz_act(x1, y1, gw, dw))
            after = conformal.a_block(conformal.odd_pair(va, wa))
            assert ratmat.eq(
                after, ratmat.mul(ratmat.mul(x1, before), ratmat.inverse(y1))
            )
            assert conformal.q_form(after) == conformal.q_form(before)

    _report(5, "lorentz pairs: group action and invariant form", run)


def test_c06_sigma_properties():
    """Antilinear involution preserving bracket, parity and both summands."""

    def run():
        basis = conformal.gl_basis()
        i_unit = GaussianRational(0, 1)
        for b in basis:
            assert realform.sigma(realform.sigma(b)) == b
            assert realform.sigma(i_unit * b) == (-i_unit) * realform.sigma(b)
            image = realform.sigma(b)
            if b.odd_part().is_zero():
                assert image.odd_part().is_zero()
            else:
                assert image.even_part().is_zero()
        for a in basis:
            for b in basis:
                assert realform.sigma(bracket(a, b)) == bracket(
                    realform.sigma(a), realform.sigma(b)
                )
        for name in ("p", "n"):
            for b in conformal.pattern_basis(name):
                assert conformal.subspace_membership(realform.sigma(b), name)
        fixed = realform.sigma_fixed_basis()
        assert fixed.dimensions == (16, 8)
        # with vanishing odd coordinates the fixed big-cell points are
        # exactly the skew-hermitian chart blocks
        alg = GrassmannAlgebra.paired(2)
        rng = Random(601)
        no_alpha = block_zero(alg, 1, 2)
        no_beta = block_zero(alg, 2, 1)
        fixed_seen = 0
        for k in range(40):
            if k % 2:
                a = helpers.skew_even_block(rng, alg)
            else:
                a = random_even_block(rng, alg, 2)
            pt = superflag.BigCellPoint(a, no_alpha, no_beta)
            skew = block_is_zero(block_add(a, block_dagger(a)))
            assert (superflag.xi_bigcell(pt) == pt) == skew
            fixed_seen += skew
        assert 0 < fixed_seen < 40

    _report(6, "conjugation symmetry of the algebra and its fixed sets", run)


def test_c07_group_conjugations():
    """Conjugations reverse products, square to one and keep Ber = 1."""
    sign = realform.resolve_j_sign()

    def run():
        assert sign == realform.DEFAULT_J_SIGN
        cfg = ConjugationConfig(sign)
        for b in conformal.gl_basis():
            assert realform.xi_differential(b, cfg) == realform.sigma(b)
        alg4 = GrassmannAlgebra.paired(2)
        rng = Random(701)
        for _ in range(100):
            g = random_invertible_supermatrix(rng, alg4, 4, 1)
            h = random_invertible_supermatrix(rng, alg4, 4, 1)
            assert realform.theta_group(g @ h, cfg) == (
                realform.theta_group(h, cfg) @ realform.theta_group(g, cfg)
            )
        alg2 = GrassmannAlgebra.paired(1)
        rng2 = Random(709)
        for _ in range(100):
            g = random_invertible_supermatrix(rng2, alg2, 4, 1)
            assert realform.xi_group(realform.xi_group(g, cfg), cfg) == g
        for _ in range(25):
            g = random_special_supermatrix(rng, alg4)
            moved = realform.xi_group(g, cfg)
            assert (moved.berezinian() - alg4.one()).is_zero()

    _report(7, f"group conjugations with pinned sign j = {sign}", run)


def test_c08_classical_geometry():
    """Quadric coordinates, big-cell chart and the affine subgroup."""

    def run():
        rng = Random(809)
        for _ in range(500):
            point = geometry.plucker(random_plane(rng))
            assert geometry.klein_form(point.y).is_zero()
        grid = (0, 1, -1, 2)
        for a00, a01, a10, a11 in product(grid, repeat=4):
            a = ((GaussianRational(a00), GaussianRational(a01)),
                 (GaussianRational(a10), GaussianRational(a11)))
            y = geometry.from_chart(a).y
            det = a[0][0] * a[1][1] - a[0][1] * a[1][0]
            assert y == (GaussianRational(1), -a[0][0], -a[0][1],
                         a[1][1], -a[1][0], det)
            assert ratmat.eq(geometry.chart(geometry.from_chart(a)), a)
        for _ in range(100):
            a = random_matrix(rng, 2, 2)
            roundtrip = geometry.chart(geometry.from_chart(a))
            assert ratmat.eq(roundtrip, a)
        for _ in range(100):
            g = random_invertible_matrix(rng, 4)
            y = tuple(random_gaussian(rng) for _ in range(6))
            moved = geometry.wedge_act_vector(g, y)
            assert geometry.klein_form(moved) == ratmat.det(g) * geometry.klein_form(y)
        assert geometry.real_klein_signature() == (4, 2)
        for _ in range(50):
            h = random_poincare(rng)
            a = random_matrix(rng, 2, 2)
            big = geometry.from_chart(a)
            via_chart = geometry.poincare_act(h, a)
            via_wedge = geometry.wedge_act(h.matrix(), big)
            assert geometry.cone_region(via_wedge) == "big_cell"
            assert ratmat.eq(geometry.chart(via_wedge), via_chart)

    _report(8, "plucker quadric, chart formulas and affine action", run, 10)


def _stabilizer_sample(rng: Random, algebra: GrassmannAlgebra) -> SuperMatrix:
    # invertible, zero exactly where the base point's stabilizer demands
    rows = [[algebra.zero() for _ in range(5)] for _ in range(5)]
    upper = random_even_block(rng, algebra, 2, invertible=True)
    lower = random_even_block(rng, algebra, 2, invertible=True)
    for i in range(2):
        for j in range(2):
            rows[i][j] = upper[i][j]
            rows[2 + i][2 + j] = lower[i][j]
            rows[i][2 + j] = random_even(rng, algebra)
    rows[4][4] = random_even(rng, algebra, invertible=True)
    for i, j in ((0, 4), (1, 4), (4, 2), (4, 3)):
        rows[i][j] = random_odd(rng, algebra)
    return SuperMatrix((4, 1), tuple(tuple(r) for r in rows), EVEN)


def test_c09_super_flag():
    """Chart, twistor relation, equivariance and the chart differential."""

    def run():
        alg = GrassmannAlgebra.paired(4)
        rng = Random(907)
        for _ in range(25):
            g = helpers.bigcell_group_element(rng, alg)
            assert superflag.twistor_check(g)
            charts = superflag.flag_charts(g)
            pt = superflag.pi_chart(g)
            recombined = block_add(charts.b_block, block_mul(pt.beta, pt.alpha))
            assert block_eq(pt.a_block, recombined)
        for _ in range(50):
            h = random_superpoincare(rng, alg)
            g = helpers.bigcell_group_element(rng, alg)
            assert superflag.pi_chart(h.matrix() @ g) == superflag.superpoincare_act(
                h, superflag.pi_chart(g)
            )
        origin = helpers.origin_point(alg)
        for _ in range(20):
            member = _stabilizer_sample(rng, alg)
            assert superflag.stabilizer_membership(member)
            assert superflag.pi_chart(member) == origin
        for _ in range(20):
            h = random_superpoincare(rng, alg)
            pt = random_bigcell_point(rng, alg)
            moved = superflag.superpoincare_act(h, pt)
            classical = PoincareElement(
                helpers.body_matrix(h.l_block),
                helpers.body_matrix(h.r_block),
                helpers.body_matrix(h.translation),
            )
            reduced = geometry.poincare_act(
                classical, helpers.body_matrix(pt.a_block)
            )
            assert ratmat.eq(helpers.body_matrix(moved.a_block), reduced)
        differential = superflag.pi_differential_matrix()
        assert superflag.pi_differential_is_bijective()
        assert ratmat.shape(differential) == (8, 8)
        for row in differential:
            assert sum(1 for c in row if not c.is_zero()) == 1
        for col in zip(*differential):
            assert sum(1 for c in col if not c.is_zero()) == 1

    _report(9, "super flag chart: twistor, equivariance, differential", run, 60)


def test_c10_real_superspace():
    """Fixed points of the point conjugation carry skew real coordinates."""

    def run():
        cfg = ConjugationConfig(realform.DEFAULT_J_SIGN)
        alg4 = GrassmannAlgebra.paired(2)
        rng = Random(1009)
        for _ in range(10):
            pt = random_bigcell_point(rng, alg4)
            assert superflag.xi_bigcell(superflag.xi_bigcell(pt, cfg), cfg) == pt
        alg8 = GrassmannAlgebra.paired(4)
        j = alg8.scalar(cfg.j)
        for _ in range(100):
            a_prime = helpers.skew_even_block(rng, alg8)
            alpha = random_odd_block(rng, alg8, 1, 2)
            pt = superflag.point_from_real_coordinates(a_prime, alpha, cfg)
            assert superflag.xi_bigcell(pt, cfg) == pt
            alpha_pair = block_mul(block_dagger(pt.alpha), pt.alpha)
            residue = block_add(
                block_add(pt.a_block, block_dagger(pt.a_block)),
                block_scale_left(j, alpha_pair),
            )
            assert block_is_zero(residue)
            assert block_is_zero(
                block_add(pt.beta, block_scale_left(j, block_dagger(pt.alpha)))
            )
            shifted = superflag.real_coordinates(pt, cfg)
            assert block_eq(shifted, a_prime)
            assert block_is_zero(block_add(shifted, block_dagger(shifted)))
            report = superflag.reality_report(pt, cfg)
            assert report.fixed_by_xi and report.consistent

    _report(10, "real superspace: involution and coordinate reality", run)


def test_c11_cli_end_to_end():
    """Golden stdout for every subcommand and a clean full verification."""

    def run():
        import test_cli

        for name, argv, want_code in test_cli.CASES:
            out, err = io.StringIO(), io.StringIO()
            with redirect_stdout(out), redirect_stderr(err):
                code = cli.main(test_cli.expand(argv))
            assert code == want_code, name
            assert out.getvalue() == (test_cli.GOLDEN / f"{name}.out").read_text(), name
        out = io.StringIO()
        with redirect_stdout(out):
            assert cli.main(["verify", "all"]) == 0
        assert out.getvalue().strip().splitlines()[-1].endswith(", 0 failed")
        assert time.perf_counter() - _T0 < 300

    _report(11, "command line golden files and full verification", run, 300)
