"""Big cell of the 2|0 in 2|1 flag: chart, affine action, conjugation."""

from random import Random

import pytest

import helpers
from superspace import ratmat
from superspace.errors import (
    AlgebraMismatchError,
    NotInBigCellError,
    NotInvertibleError,
    ParityError,
    PatternError,
    ShapeMismatchError,
)
from superspace.geometry import PoincareElement, poincare_act
from superspace.grassmann import GrassmannAlgebra
from superspace.realform import ConjugationConfig, DEFAULT_CONFIG
from superspace.sampling import (
    random_bigcell_point,
    random_even,
    random_even_block,
    random_odd_block,
    random_superpoincare,
)
from superspace.superflag import (
    BigCellPoint,
    SuperPoincareElement,
    big_cell_escape_witness,
    flag_charts,
    pi_chart,
    pi_differential_is_bijective,
    pi_differential_matrix,
    point_from_real_coordinates,
    real_coordinates,
    reality_report,
    stabilizer_membership,
    superpoincare_act,
    twistor_check,
    xi_bigcell,
)
from superspace.supermatrix import EVEN, SuperMatrix, block_eq

ALG = GrassmannAlgebra.paired(4)
SMALL = GrassmannAlgebra.paired(2)


def test_embed_projects_back():
    rng = Random(269)
    for _ in range(30):
        pt = random_bigcell_point(rng, ALG)
        assert pi_chart(pt.embed()) == pt


def test_embed_of_origin_is_identity():
    alg = GrassmannAlgebra(2)
    assert helpers.origin_point(alg).embed() == SuperMatrix.identity(alg, 4, 1)


def test_pi_chart_invariant_under_flag_basis_change():
    """The chart only sees the flag, not the basis chosen for it.

    Right factors keeping span(cols 1,2) and span(cols 1,2,5) each inside
    themselves: first two columns supported on rows 1,2, fifth column on
    rows 1,2,5.
    """
    rng = Random(271)
    one = ALG.one()
    zero = ALG.zero()
    for _ in range(10):
        g = helpers.bigcell_group_element(rng, ALG)
        z_h = random_even_block(rng, ALG, 2, invertible=True)
        tau1_h = random_odd_block(rng, ALG, 2, 1)
        g55_h = random_even(rng, ALG, invertible=True)
        rows = [
            tuple(z_h[0]) + (zero, zero, tau1_h[0][0]),
            tuple(z_h[1]) + (zero, zero, tau1_h[1][0]),
            (zero, zero, one, zero, zero),
            (zero, zero, zero, one, zero),
            (zero, zero, zero, zero, g55_h),
        ]
        h = SuperMatrix((4, 1), rows, EVEN)
        assert pi_chart(g @ h) == pi_chart(g)


def test_pi_chart_preconditions():
    alg = GrassmannAlgebra(2)
    g, pt = big_cell_escape_witness(alg)
    with pytest.raises(NotInBigCellError):
        pi_chart(g @ pt.embed())
    rows = [list(r) for r in SuperMatrix.identity(alg, 4, 1).entries]
    rows[4][4] = alg.gen(1) * alg.gen(2)
    with pytest.raises(NotInvertibleError):
        pi_chart(SuperMatrix((4, 1), rows, EVEN))
    with pytest.raises(ShapeMismatchError):
        pi_chart(SuperMatrix.identity(alg, 2, 1))


def test_action_equivariance():
    """pi(h g) = h . pi(g) for the affine subgroup."""
    rng = Random(277)
    for _ in range(20):
        h = random_superpoincare(rng, ALG)
        g = helpers.bigcell_group_element(rng, ALG)
        assert pi_chart(h.matrix() @ g) == superpoincare_act(h, pi_chart(g))


def test_action_composes():
    rng = Random(281)
    for _ in range(10):
        h1 = random_superpoincare(rng, ALG)
        h2 = random_superpoincare(rng, ALG)
        pt = random_bigcell_point(rng, ALG)
        assert superpoincare_act(h2, superpoincare_act(h1, pt)) == superpoincare_act(
            h2.compose(h1), pt
        )
    ident = SuperPoincareElement.identity(ALG)
    pt = random_bigcell_point(rng, ALG)
    assert superpoincare_act(ident, pt) == pt


def test_action_algebra_mismatch():
    rng = Random(283)
    h = random_superpoincare(rng, ALG)
    with pytest.raises(AlgebraMismatchError):
        superpoincare_act(h, helpers.origin_point(GrassmannAlgebra(2)))


def test_twistor_relation():
    """The one-space chart and the flag chart differ by beta alpha."""
    rng = Random(293)
    for _ in range(20):
        g = helpers.bigcell_group_element(rng, ALG)
        assert twistor_check(g)
        pt = pi_chart(g)
        fc = flag_charts(g)
        lift = tuple(
            tuple(
                fc.b_block[i][j] + (pt.beta[i][0] * pt.alpha[0][j])
                for j in range(2)
            )
            for i in range(2)
        )
        assert block_eq(lift, pt.a_block)


def test_stabilizer_characterization():
    rng = Random(307)
    origin = helpers.origin_point(ALG)
    # affine elements with zero translation, chi, varphi fix the origin
    for _ in range(10):
        h = random_superpoincare(rng, ALG)
        fixing = SuperPoincareElement(
            h.l_block,
            h.r_block,
            ((ALG.zero(),) * 2,) * 2,
            ((ALG.zero(),), (ALG.zero(),)),
            ((ALG.zero(), ALG.zero()),),
            h.d,
        )
        assert stabilizer_membership(fixing.matrix())
        assert superpoincare_act(fixing, origin) == origin
    # the full stabilizer is larger: upper right blocks are unconstrained
    member = helpers.bigcell_group_element(rng, ALG)
    rows = [list(r) for r in member.entries]
    for i, j in ((2, 0), (2, 1), (3, 0), (3, 1), (2, 4), (3, 4), (4, 0), (4, 1)):
        rows[i][j] = ALG.zero()
    g = SuperMatrix((4, 1), rows, EVEN)
    assert stabilizer_membership(g)
    assert pi_chart(g @ origin.embed()) == origin
    # while a genuine translation moves it
    mover = random_superpoincare(rng, ALG)
    if block_eq(mover.translation, ((ALG.zero(),) * 2,) * 2):
        mover = SuperPoincareElement(
            mover.l_block,
            mover.r_block,
            ((ALG.one(), ALG.zero()), (ALG.zero(), ALG.one())),
            mover.chi,
            mover.varphi,
            mover.d,
        )
    assert not stabilizer_membership(mover.matrix())
    assert superpoincare_act(mover, origin) != origin


def test_stabilizer_needs_invertible():
    alg = GrassmannAlgebra(0)
    with pytest.raises(NotInvertibleError):
        stabilizer_membership(SuperMatrix.zeros(alg, 4, 1))


def test_classical_reduction():
    """Bodies of the affine action reproduce the plain 2x2 chart action."""
    rng = Random(311)
    for _ in range(20):
        h = random_superpoincare(rng, ALG)
        pt = random_bigcell_point(rng, ALG)
        moved = superpoincare_act(h, pt)
        classical = PoincareElement(
            helpers.body_matrix(h.l_block),
            helpers.body_matrix(h.r_block),
            helpers.body_matrix(h.translation),
        )
        assert ratmat.eq(
            helpers.body_matrix(moved.a_block),
            poincare_act(classical, helpers.body_matrix(pt.a_block)),
        )


def test_pi_differential_is_a_permutation():
    """Chart coordinates pick up the tangent directions crosswise.

    The even block is the identity; the odd tangent directions in the
    fifth column drive beta and those in the fifth row drive alpha.
    """
    m = pi_differential_matrix()
    perm = [
        [1, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 0],
    ]
    assert ratmat.eq(m, ratmat.mat(perm))
    assert pi_differential_is_bijective()


def test_escape_witness():
    for algebra in (None, GrassmannAlgebra(2), ALG):
        g, pt = big_cell_escape_witness(algebra)
        # g is invertible, so this is a genuine group translate
        assert not g.berezinian().is_zero()
        with pytest.raises(NotInBigCellError):
            pi_chart(g @ pt.embed())


def test_xi_bigcell_involution():
    rng = Random(313)
    for _ in range(8):
        pt = random_bigcell_point(rng, SMALL)
        assert xi_bigcell(xi_bigcell(pt)) == pt


def test_real_coordinate_roundtrip_hits_fixed_locus():
    """Skew shifted chart plus free alpha parametrizes the fixed points."""
    rng = Random(317)
    for _ in range(20):
        a_prime = helpers.skew_even_block(rng, SMALL)
        alpha = random_odd_block(rng, SMALL, 1, 2)
        pt = point_from_real_coordinates(a_prime, alpha)
        assert xi_bigcell(pt) == pt
        assert block_eq(real_coordinates(pt), a_prime)
        report = reality_report(pt)
        assert report.fixed_by_xi
        assert report.a_prime_skew
        assert report.beta_condition
        assert report.consistent


def test_reality_report_consistent_everywhere():
    rng = Random(331)
    for _ in range(12):
        pt = random_bigcell_point(rng, SMALL)
        assert reality_report(pt).consistent
    # generic points are not fixed
    moved = [pt for pt in (random_bigcell_point(rng, SMALL) for _ in range(6))
             if not reality_report(pt).fixed_by_xi]
    assert moved


def test_reality_depends_on_sign():
    rng = Random(337)
    flipped = ConjugationConfig("+i")
    broken = 0
    for _ in range(6):
        a_prime = helpers.skew_even_block(rng, SMALL)
        alpha = random_odd_block(rng, SMALL, 1, 2)
        pt = point_from_real_coordinates(a_prime, alpha, DEFAULT_CONFIG)
        if not reality_report(pt, flipped).fixed_by_xi:
            broken += 1
        assert reality_report(pt, flipped).consistent
    assert broken > 0


def test_superpoincare_from_matrix_roundtrip():
    rng = Random(347)
    for _ in range(10):
        h = random_superpoincare(rng, ALG)
        assert SuperPoincareElement.from_matrix(h.matrix()) == h
        assert h.compose(h.inverse()) == SuperPoincareElement.identity(ALG)


def test_superpoincare_berezinian():
    rng = Random(349)
    for _ in range(10):
        h = random_superpoincare(rng, ALG)
        k = random_superpoincare(rng, ALG)
        assert h.compose(k).berezinian() == h.berezinian() * k.berezinian()
    ident = SuperPoincareElement.identity(ALG)
    assert ident.is_special()


def test_superpoincare_validation():
    alg = GrassmannAlgebra(2)
    x1 = alg.gen(1)
    one = alg.one()
    zero = alg.zero()
    eye = ((one, zero), (zero, one))
    z22 = ((zero, zero), (zero, zero))
    z21 = ((zero,), (zero,))
    z12 = ((zero, zero),)
    with pytest.raises(NotInvertibleError):
        SuperPoincareElement(z22, eye, z22, z21, z12, one)
    with pytest.raises(ParityError):
        SuperPoincareElement(eye, eye, z22, ((one,), (zero,)), z12, one)
    with pytest.raises(ParityError):
        SuperPoincareElement(eye, eye, z22, z21, z12, x1)
    with pytest.raises(ShapeMismatchError):
        SuperPoincareElement(eye, eye, z22, z21, z12, 1)
    # from_matrix enforces the vanishing pattern
    rows = [list(r) for r in SuperMatrix.identity(alg, 4, 1).entries]
    rows[0][4] = x1
    with pytest.raises(PatternError):
        SuperPoincareElement.from_matrix(SuperMatrix((4, 1), rows, EVEN))


def test_bigcell_point_validation():
    alg = GrassmannAlgebra(2)
    x1 = alg.gen(1)
    one = alg.one()
    zero = alg.zero()
    with pytest.raises(ParityError):
        BigCellPoint(((one, x1), (zero, one)), ((zero, zero),), ((zero,), (zero,)))
    with pytest.raises(ParityError):
        BigCellPoint(((one, zero), (zero, one)), ((one, zero),), ((zero,), (zero,)))
    with pytest.raises(ShapeMismatchError):
        BigCellPoint(((one,),), ((zero, zero),), ((zero,), (zero,)))
