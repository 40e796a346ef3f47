"""Self-check suites behind the `verify` subcommand.

Each suite re-derives a family of identities with seeded random samples
and exact arithmetic, and returns one CheckResult per identity.  These
are smoke checks sized for interactive use; the test suite runs the same
properties at larger sample counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Callable

from . import conformal, geometry, ratmat, realform, superflag
from .conformal import AlgebraElement, bracket, gl_basis, sl_basis
from .errors import NotInBigCellError
from .grassmann import GaussianRational, GrassmannAlgebra
from .realform import ConjugationConfig, sigma, xi_differential, xi_group
from .sampling import (
    random_algebra_element,
    random_bigcell_point,
    random_even,
    random_even_block,
    random_gaussian,
    random_hermitian,
    random_invertible_matrix,
    random_invertible_supermatrix,
    random_matrix,
    random_odd_block,
    random_plane,
    random_poincare,
    random_real_poincare,
    random_sl2,
    random_special_element,
    random_special_supermatrix,
    random_supermatrix,
    random_supernumber,
    random_superpoincare,
)
from .supermatrix import (
    EVEN,
    SuperMatrix,
    block_dagger,
    block_eq,
    block_inverse_even,
    block_mul,
    block_scale_left,
    block_sub,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


class _Suite:
    def __init__(self):
        self.results: list[CheckResult] = []

    def check(self, name: str, fn: Callable[[], bool], detail: str = "") -> None:
        try:
            passed = bool(fn())
            note = detail
        except Exception as exc:
            passed = False
            note = f"{type(exc).__name__}: {exc}"
        self.results.append(CheckResult(name, passed, note))


def _repeat(n: int, fn: Callable[[], bool]) -> bool:
    return all(fn() for _ in range(n))


# ---------------------------------------------------------------------------


def suite_grassmann(rng: Random, algebra: GrassmannAlgebra,
                    cfg: ConjugationConfig, full: bool) -> list[CheckResult]:
    s = _Suite()
    gens = algebra.gens()

    def axioms() -> bool:
        x = random_supernumber(rng, algebra)
        y = random_supernumber(rng, algebra)
        z = random_supernumber(rng, algebra)
        return (
            ((x * y) * z - x * (y * z)).is_zero()
            and (x * (y + z) - x * y - x * z).is_zero()
            and ((x + y) * z - x * z - y * z).is_zero()
        )

    s.check("product is associative and distributive", lambda: _repeat(8, axioms))
    s.check(
        "generators anticommute and square to zero",
        lambda: all((g * h + h * g).is_zero() for g in gens for h in gens),
    )

    def parity_mult() -> bool:
        a = random_supernumber(rng, algebra)
        b = random_supernumber(rng, algebra)
        prod = a * b
        ee = a.even_part() * b.even_part() + a.odd_part() * b.odd_part()
        return (prod.even_part() - ee).is_zero()

    s.check("parity is multiplicative", lambda: _repeat(8, parity_mult))

    def inverse_ok() -> bool:
        x = random_supernumber(rng, algebra)
        if x.body.is_zero():
            x = x + algebra.one()
        return (x * x.inverse() - 1).is_zero() and (x.inverse() * x - 1).is_zero()

    s.check("neumann series inverts anything with a body", lambda: _repeat(8, inverse_ok))

    def bar_props() -> bool:
        x = random_supernumber(rng, algebra)
        y = random_supernumber(rng, algebra)
        return (
            (x.bar().bar() - x).is_zero()
            and ((x * y).bar() - x.bar() * y.bar()).is_zero()
            and ((x + y).bar() - x.bar() - y.bar()).is_zero()
        )

    s.check("conjugation is an involutive ring map", lambda: _repeat(8, bar_props))

    def soul_nilpotent() -> bool:
        x = random_supernumber(rng, algebra)
        p = x.soul()
        power = algebra.one()
        for _ in range(algebra.q + 1):
            power = power * p
        return power.is_zero() and (x - x.body - p).is_zero()

    s.check("souls are nilpotent of order q+1", lambda: _repeat(4, soul_nilpotent))
    return s.results


def suite_berezinian(rng: Random, algebra: GrassmannAlgebra,
                     cfg: ConjugationConfig, full: bool) -> list[CheckResult]:
    s = _Suite()
    shapes = ((1, 1), (2, 1), (2, 2), (4, 1))

    def multiplicative(m: int, n: int) -> bool:
        g = random_invertible_supermatrix(rng, algebra, m, n)
        h = random_invertible_supermatrix(rng, algebra, m, n)
        return ((g @ h).berezinian() - g.berezinian() * h.berezinian()).is_zero()

    for m, n in shapes:
        s.check(
            f"berezinian is multiplicative at shape {m}|{n}",
            lambda m=m, n=n: _repeat(4, lambda: multiplicative(m, n)),
        )

    def inverse_ok() -> bool:
        g = random_invertible_supermatrix(rng, algebra, 2, 1)
        gi = g.inverse()
        eye = SuperMatrix.identity(algebra, 2, 1)
        return (
            (g @ gi) == eye
            and (gi @ g) == eye
            and (gi.berezinian() - g.berezinian().inverse()).is_zero()
        )

    s.check("inverse is two sided and inverts the berezinian", lambda: _repeat(4, inverse_ok))

    def schur_witness() -> bool:
        # the witness needs a lower right block away from +-1 so that the
        # correct Schur term det(p - q s^-1 r) and the wrong det(p - q s r)
        # actually differ
        wit = GrassmannAlgebra(4)
        x1, x2, x3, x4 = wit.gens()
        two = wit.scalar(2)
        one = wit.one()
        g = SuperMatrix((1, 1), ((one, x1), (x2, two)), EVEN)
        h = SuperMatrix((1, 1), ((one, x3), (x4, two)), EVEN)
        good = ((g @ h).berezinian() - g.berezinian() * h.berezinian()).is_zero()
        bad = (
            (g @ h)._berezinian_qsr() - g._berezinian_qsr() * h._berezinian_qsr()
        ).is_zero()
        differs = not (g.berezinian() - g._berezinian_qsr()).is_zero()
        return good and not bad and differs

    s.check("schur complement requires the inverse of the odd-odd block", schur_witness)

    def supertrace_of_commutator() -> bool:
        a = random_supermatrix(rng, algebra, 2, 1, EVEN)
        b = random_supermatrix(rng, algebra, 2, 1, EVEN)
        return (a @ b - b @ a).supertrace().is_zero()

    s.check("supertrace kills commutators", lambda: _repeat(6, supertrace_of_commutator))
    return s.results


# ---------------------------------------------------------------------------


def _parity_bit(x: AlgebraElement) -> int:
    return 0 if x.odd_part().is_zero() else 1


def _jacobi_holds(x: AlgebraElement, y: AlgebraElement, z: AlgebraElement) -> bool:
    px, py, pz = _parity_bit(x), _parity_bit(y), _parity_bit(z)
    total = AlgebraElement.zero(x.algebra)
    for a, b, c, sign_bit in (
        (x, y, z, px * pz),
        (y, z, x, py * px),
        (z, x, y, pz * py),
    ):
        term = bracket(a, bracket(b, c))
        total = total + (-term if sign_bit & 1 else term)
    return total.is_zero()


def suite_liesuper(rng: Random, algebra: GrassmannAlgebra,
                   cfg: ConjugationConfig, full: bool) -> list[CheckResult]:
    s = _Suite()
    basis = sl_basis()

    def antisymmetry() -> bool:
        a = rng.choice(basis)
        b = rng.choice(basis)
        lhs = bracket(a, b)
        rhs = bracket(b, a)
        if _parity_bit(a) and _parity_bit(b):
            return (lhs - rhs).is_zero()
        return (lhs + rhs).is_zero()

    s.check("bracket is super anticommutative", lambda: _repeat(30, antisymmetry))

    if full:
        units = gl_basis()
        s.check(
            "jacobi identity over every basis triple",
            lambda: all(
                _jacobi_holds(a, b, c) for a in units for b in units for c in units
            ),
        )
    else:
        s.check(
            "jacobi identity on sampled basis triples",
            lambda: _repeat(
                150,
                lambda: _jacobi_holds(rng.choice(basis), rng.choice(basis), rng.choice(basis)),
            ),
        )

    s.check(
        "supertrace-zero algebra has dimension 16|8",
        lambda: (
            sum(1 for b in basis if _parity_bit(b) == 0) == 16
            and sum(1 for b in basis if _parity_bit(b) == 1) == 8
        ),
    )
    s.check(
        "bracket lands back in the supertrace-zero algebra",
        lambda: all(bracket(a, b).is_special() for a in basis for b in basis),
    )

    def split_roundtrip() -> bool:
        x = random_special_element(rng)
        p_part, n_part = conformal.split_pn(x)
        return (
            (p_part + n_part - x).is_zero()
            and conformal.subspace_membership(p_part, "p")
            and conformal.subspace_membership(n_part, "n")
        )

    s.check("parabolic and translation parts tile the algebra", lambda: _repeat(10, split_roundtrip))

    def closure(name: str) -> bool:
        bs = conformal.pattern_basis(name)
        return all(
            conformal.subspace_membership(bracket(a, b), name) for a in bs for b in bs
        )

    s.check("parabolic pattern closes under the bracket", lambda: closure("p"))
    s.check("translation pattern closes under the bracket", lambda: closure("n"))
    s.check(
        "translation superalgebra has the abelian 4|4 structure",
        lambda: conformal.verify_translation_algebra("n").ok,
    )
    s.check(
        "parabolic and translation subspaces have dimension 12|4 and 4|4",
        lambda: (
            conformal.pattern_dimensions("p") == (12, 4)
            and conformal.pattern_dimensions("n") == (4, 4)
        ),
    )
    s.check(
        "root lists carry 12 parabolic and 8 translation roots",
        lambda: (
            len(conformal.pattern_roots("p")) == 12
            and len(conformal.pattern_roots("n")) == 8
            and not (conformal.pattern_roots("p") & conformal.pattern_roots("n"))
        ),
    )

    def lorentz_invariance() -> bool:
        x = random_sl2(rng)
        y = random_sl2(rng)
        gamma = random_matrix(rng, 2, 1)
        delta = random_matrix(rng, 1, 2)
        gamma2 = random_matrix(rng, 2, 1)
        delta2 = random_matrix(rng, 1, 2)
        v = conformal.from_n1_components(gamma, delta)
        w = conformal.from_n1_components(gamma2, delta2)
        before = conformal.a_block(conformal.odd_pair(v, w))
        va = conformal.from_n1_components(*conformal.lorentz_act(x, y, gamma, delta))
        wa = conformal.from_n1_components(*conformal.lorentz_act(x, y, gamma2, delta2))
        after = conformal.a_block(conformal.odd_pair(va, wa))
        transported = ratmat.mul(ratmat.mul(x, before), ratmat.inverse(y))
        return ratmat.eq(after, transported) and conformal.q_form(after) == conformal.q_form(before)

    s.check(
        "unimodular pairs preserve the translation pairing form",
        lambda: _repeat(15, lorentz_invariance),
    )
    return s.results


# ---------------------------------------------------------------------------


def suite_realform(rng: Random, algebra: GrassmannAlgebra,
                   cfg: ConjugationConfig, full: bool) -> list[CheckResult]:
    s = _Suite()

    def sigma_involution() -> bool:
        x = random_algebra_element(rng)
        i_unit = GaussianRational(0, 1)
        return (
            sigma(sigma(x)) == x
            and sigma(i_unit * x) == (-i_unit) * sigma(x)
        )

    s.check("sigma is an antilinear involution", lambda: _repeat(10, sigma_involution))

    def sigma_bracket() -> bool:
        x = random_algebra_element(rng)
        y = random_algebra_element(rng)
        return sigma(bracket(x, y)) == bracket(sigma(x), sigma(y))

    s.check("sigma preserves the superbracket", lambda: _repeat(10, sigma_bracket))
    s.check(
        "sigma preserves the parabolic and translation patterns",
        lambda: all(
            conformal.subspace_membership(sigma(b), name)
            for name in ("p", "n")
            for b in conformal.pattern_basis(name)
        ),
    )

    fixed = realform.sigma_fixed_basis()
    s.check(
        "sigma fixed points have real dimension 16|8",
        lambda: fixed.dimensions == (16, 8),
    )
    s.check(
        "sigma fixed points close under the bracket",
        lambda: all(
            sigma(bracket(a, b)) == bracket(a, b)
            for a in fixed.even + fixed.odd
            for b in fixed.even + fixed.odd
        ),
    )

    def theta_reverses() -> bool:
        g = random_invertible_supermatrix(rng, algebra, 4, 1)
        h = random_invertible_supermatrix(rng, algebra, 4, 1)
        return realform.theta_group(g @ h, cfg) == (
            realform.theta_group(h, cfg) @ realform.theta_group(g, cfg)
        )

    s.check("theta reverses products", lambda: _repeat(6, theta_reverses))

    def xi_homomorphism() -> bool:
        g = random_invertible_supermatrix(rng, algebra, 4, 1)
        h = random_invertible_supermatrix(rng, algebra, 4, 1)
        return (
            xi_group(g @ h, cfg) == xi_group(g, cfg) @ xi_group(h, cfg)
            and xi_group(xi_group(g, cfg), cfg) == g
        )

    s.check("xi is an involutive homomorphism", lambda: _repeat(6, xi_homomorphism))

    def xi_preserves_special() -> bool:
        g = random_special_supermatrix(rng, algebra)
        return (xi_group(g, cfg).berezinian() - 1).is_zero()

    s.check("xi preserves berezinian one", lambda: _repeat(4, xi_preserves_special))

    resolved = {}

    def resolve() -> bool:
        resolved["sign"] = realform.resolve_j_sign()
        return True

    s.check("exactly one sign makes the xi differential match sigma", resolve)
    s.check(
        "resolved conjugation sign is -i",
        lambda: resolved.get("sign") == "-i",
        detail=f"resolved j = {resolved.get('sign')}",
    )
    s.check(
        "configured sign reproduces sigma as the xi differential",
        lambda: all(xi_differential(b, cfg) == sigma(b) for b in gl_basis()),
        detail=f"configured j = {cfg.j_sign}",
    )

    def real_poincare_sample(d_scalar) -> SuperMatrix:
        j = algebra.scalar(cfg.j)
        half_j = algebra.scalar(cfg.j * Fraction(1, 2))
        l_blk = random_even_block(rng, algebra, 2, invertible=True)
        phi = random_odd_block(rng, algebra, 1, 2)
        seed_blk = random_even_block(rng, algebra, 2, invertible=False)
        skew = block_sub(seed_blk, block_dagger(seed_blk))
        l_inv = block_inverse_even(l_blk)
        l_dag_inv = block_inverse_even(block_dagger(l_blk))
        pencil = block_mul(block_mul(l_dag_inv, block_mul(block_dagger(phi), phi)), l_inv)
        k_blk = block_sub(skew, block_scale_left(half_j, pencil))
        m_blk = block_mul(k_blk, l_blk)
        r_blk = l_dag_inv
        chi = block_scale_left(-j, block_dagger(phi))
        d = algebra.scalar(d_scalar)
        zero = algebra.zero()
        r_chi = block_mul(r_blk, chi)
        d_phi = block_scale_left(d, phi)
        rows = [
            tuple(l_blk[0]) + (zero, zero, zero),
            tuple(l_blk[1]) + (zero, zero, zero),
            tuple(m_blk[0]) + tuple(r_blk[0]) + (r_chi[0][0],),
            tuple(m_blk[1]) + tuple(r_blk[1]) + (r_chi[1][0],),
            tuple(d_phi[0]) + (zero, zero, d),
        ]
        return SuperMatrix((4, 1), rows, EVEN)

    def reality_fixed() -> bool:
        g = real_poincare_sample(rng.choice([1, GaussianRational(Fraction(3, 5), Fraction(4, 5))]))
        report = realform.reality_conditions_poincare(g, cfg)
        return report.holds and report.shifted_m_skew and xi_group(g, cfg) == g

    s.check(
        "reality conditions cut out the xi fixed points",
        lambda: _repeat(5, reality_fixed),
    )

    def reality_modulus() -> bool:
        g = real_poincare_sample(2)
        report = realform.reality_conditions_poincare(g, cfg)
        return report.holds and xi_group(g, cfg) != g

    s.check(
        "corner scalars need unit modulus on top of the reality conditions",
        lambda: _repeat(3, reality_modulus),
    )

    def shifted_equivalence() -> bool:
        l_blk = random_even_block(rng, algebra, 2, invertible=True)
        r_blk = random_even_block(rng, algebra, 2, invertible=True)
        m_blk = random_even_block(rng, algebra, 2, invertible=False)
        chi = random_odd_block(rng, algebra, 2, 1)
        phi = random_odd_block(rng, algebra, 1, 2)
        d = algebra.scalar(1)
        zero = algebra.zero()
        r_chi = block_mul(r_blk, chi)
        rows = [
            tuple(l_blk[0]) + (zero, zero, zero),
            tuple(l_blk[1]) + (zero, zero, zero),
            tuple(m_blk[0]) + tuple(r_blk[0]) + (r_chi[0][0],),
            tuple(m_blk[1]) + tuple(r_blk[1]) + (r_chi[1][0],),
            tuple(phi[0]) + (zero, zero, d),
        ]
        g = SuperMatrix((4, 1), rows, EVEN)
        report = realform.reality_conditions_poincare(g, cfg)
        return report.m_condition == report.shifted_m_skew

    s.check(
        "shifted translation block is skew exactly when the direct condition holds",
        lambda: _repeat(6, shifted_equivalence),
    )
    return s.results


# ---------------------------------------------------------------------------


def suite_geometry(rng: Random, algebra: GrassmannAlgebra,
                   cfg: ConjugationConfig, full: bool) -> list[CheckResult]:
    s = _Suite()

    s.check(
        "plucker coordinates satisfy the quadric relation",
        lambda: _repeat(
            15, lambda: geometry.klein_form(geometry.plucker(random_plane(rng)).y).is_zero()
        ),
    )

    def chart_roundtrip() -> bool:
        a = random_matrix(rng, 2, 2)
        p = geometry.from_chart(a)
        return ratmat.eq(geometry.chart(p), a) and geometry.projective_equal(
            geometry.plucker(geometry.plane_from_chart(a)), p
        )

    s.check("big-cell chart inverts the point construction", lambda: _repeat(10, chart_roundtrip))

    def span_vs_point() -> bool:
        p1 = random_plane(rng)
        recomb = random_invertible_matrix(rng, 2)
        p2 = geometry.Plane(ratmat.mul(p1.entries, recomb))
        p3 = random_plane(rng)
        same = geometry.projective_equal(geometry.plucker(p1), geometry.plucker(p2))
        other = geometry.plane_span_equal(p1, p3) == geometry.projective_equal(
            geometry.plucker(p1), geometry.plucker(p3)
        )
        return same and geometry.plane_span_equal(p1, p2) and other

    s.check("plucker separates plane spans", lambda: _repeat(10, span_vs_point))

    def det_scaling() -> bool:
        g = random_matrix(rng, 4, 4)
        v = tuple(random_gaussian(rng) for _ in range(6))
        lhs = geometry.klein_form(geometry.wedge_act_vector(g, v))
        return lhs == ratmat.det(g) * geometry.klein_form(v)

    s.check("wedge action scales the quadric form by the determinant", lambda: _repeat(15, det_scaling))

    def chart_action_matches() -> bool:
        h = random_poincare(rng)
        a = random_matrix(rng, 2, 2)
        moved = geometry.wedge_act(h.matrix(), geometry.from_chart(a))
        return geometry.projective_equal(
            moved, geometry.from_chart(geometry.poincare_act(h, a))
        )

    s.check("affine chart action matches the wedge action", lambda: _repeat(10, chart_action_matches))

    def action_composes() -> bool:
        h1 = random_poincare(rng)
        h2 = random_poincare(rng)
        a = random_matrix(rng, 2, 2)
        return ratmat.eq(
            geometry.poincare_act(h1, geometry.poincare_act(h2, a)),
            geometry.poincare_act(h1.compose(h2), a),
        )

    s.check("chart action composes along the group law", lambda: _repeat(10, action_composes))

    def conjugation_dagger() -> bool:
        a = random_matrix(rng, 2, 2)
        p = geometry.from_chart(a)
        q = geometry.theta_point(p)
        return (
            ratmat.eq(geometry.chart(q), ratmat.dagger(a))
            and geometry.theta_point(q) == p
        )

    s.check("conjugation acts on big-cell charts as the dagger", lambda: _repeat(10, conjugation_dagger))

    s.check(
        "real quadric signature is (4,2)",
        lambda: geometry.real_klein_signature() == (4, 2),
    )

    def hermitian_preserved() -> bool:
        h = random_real_poincare(rng)
        a = random_hermitian(rng)
        return ratmat.is_hermitian(geometry.real_poincare_act(h, a))

    s.check("real action preserves hermitian charts", lambda: _repeat(10, hermitian_preserved))
    return s.results


# ---------------------------------------------------------------------------


def _random_bigcell_group(rng: Random, algebra: GrassmannAlgebra) -> SuperMatrix:
    while True:
        g = random_invertible_supermatrix(rng, algebra, 4, 1)
        z_body = tuple(tuple(g.entries[i][j].body for j in (0, 1)) for i in (0, 1))
        if not ratmat.det(z_body).is_zero():
            return g


def suite_superflag(rng: Random, algebra: GrassmannAlgebra,
                    cfg: ConjugationConfig, full: bool) -> list[CheckResult]:
    s = _Suite()

    def embed_roundtrip() -> bool:
        pt = random_bigcell_point(rng, algebra)
        return superflag.pi_chart(pt.embed()) == pt

    s.check("chart of the embedding returns the point", lambda: _repeat(6, embed_roundtrip))

    def equivariance() -> bool:
        g = _random_bigcell_group(rng, algebra)
        h = random_superpoincare(rng, algebra)
        return superflag.pi_chart(h.matrix() @ g) == superflag.superpoincare_act(
            h, superflag.pi_chart(g)
        )

    s.check("chart intertwines the affine action", lambda: _repeat(5, equivariance))

    s.check(
        "the two flag charts differ by beta alpha",
        lambda: _repeat(5, lambda: superflag.twistor_check(_random_bigcell_group(rng, algebra))),
    )

    def action_composes() -> bool:
        h1 = random_superpoincare(rng, algebra)
        h2 = random_superpoincare(rng, algebra)
        pt = random_bigcell_point(rng, algebra)
        return superflag.superpoincare_act(
            h1, superflag.superpoincare_act(h2, pt)
        ) == superflag.superpoincare_act(h1.compose(h2), pt)

    s.check("big-cell action composes along the group law", lambda: _repeat(4, action_composes))

    def stabilizer_both_ways() -> bool:
        g = _random_bigcell_group(rng, algebra)
        origin = superflag.BigCellPoint.origin(algebra)
        generic_ok = superflag.stabilizer_membership(g) == (superflag.pi_chart(g) == origin)
        # a member may carry anything above the marked zeros
        z_blk = random_even_block(rng, algebra, 2, invertible=True)
        r_blk = random_even_block(rng, algebra, 2, invertible=True)
        q_blk = random_even_block(rng, algebra, 2, invertible=False)
        tau1 = random_odd_block(rng, algebra, 2, 1)
        s_row = random_odd_block(rng, algebra, 1, 2)
        g55 = random_even(rng, algebra, invertible=True)
        zero = algebra.zero()
        rows = [
            tuple(z_blk[0]) + tuple(q_blk[0]) + (tau1[0][0],),
            tuple(z_blk[1]) + tuple(q_blk[1]) + (tau1[1][0],),
            (zero, zero) + tuple(r_blk[0]) + (zero,),
            (zero, zero) + tuple(r_blk[1]) + (zero,),
            (zero, zero) + tuple(s_row[0]) + (g55,),
        ]
        member = SuperMatrix((4, 1), rows, EVEN)
        member_ok = superflag.stabilizer_membership(member) and (
            superflag.pi_chart(member) == origin
        )
        return generic_ok and member_ok

    s.check("origin stabilizer is the vanishing pattern", lambda: _repeat(5, stabilizer_both_ways))

    s.check(
        "xi restricts to an involution of the big cell",
        lambda: _repeat(
            4,
            lambda: (lambda pt: superflag.xi_bigcell(superflag.xi_bigcell(pt, cfg), cfg) == pt)(
                random_bigcell_point(rng, algebra)
            ),
        ),
    )

    def reality_consistent() -> bool:
        generic = superflag.reality_report(random_bigcell_point(rng, algebra), cfg)
        seed_blk = random_even_block(rng, algebra, 2, invertible=False)
        a_prime = block_sub(seed_blk, block_dagger(seed_blk))
        alpha = random_odd_block(rng, algebra, 1, 2)
        fixed_pt = superflag.point_from_real_coordinates(a_prime, alpha, cfg)
        fixed = superflag.reality_report(fixed_pt, cfg)
        return (
            generic.consistent
            and fixed.consistent
            and fixed.fixed_by_xi
            and superflag.xi_bigcell(fixed_pt, cfg) == fixed_pt
        )

    s.check("xi fixed points are the real coordinate locus", lambda: _repeat(4, reality_consistent))

    def classical_reduction() -> bool:
        zero = algebra.zero()
        l_blk = random_even_block(rng, algebra, 2, invertible=True, soul_terms=0)
        r_blk = random_even_block(rng, algebra, 2, invertible=True, soul_terms=0)
        n_blk = random_even_block(rng, algebra, 2, invertible=False, soul_terms=0)
        a_blk = random_even_block(rng, algebra, 2, invertible=False, soul_terms=0)
        h = superflag.SuperPoincareElement(
            l_blk, r_blk, n_blk, ((zero,), (zero,)), ((zero, zero),), algebra.one()
        )
        pt = superflag.BigCellPoint(a_blk, ((zero, zero),), ((zero,), (zero,)))
        moved = superflag.superpoincare_act(h, pt)
        to_rat = lambda blk: tuple(tuple(e.body for e in row) for row in blk)
        classical = geometry.poincare_act(
            geometry.PoincareElement(to_rat(l_blk), to_rat(r_blk), to_rat(n_blk)),
            to_rat(a_blk),
        )
        lifted = tuple(tuple(algebra.scalar(c) for c in row) for row in classical)
        return (
            block_eq(moved.a_block, lifted)
            and all(e.is_zero() for row in moved.alpha for e in row)
            and all(e.is_zero() for row in moved.beta for e in row)
        )

    s.check(
        "action with vanishing odd part reduces to the classical chart action",
        lambda: _repeat(5, classical_reduction),
    )

    s.check("chart is etale at the identity", superflag.pi_differential_is_bijective)

    def escape() -> bool:
        g, pt = superflag.big_cell_escape_witness(algebra)
        try:
            superflag.pi_chart(g @ pt.embed())
        except NotInBigCellError:
            return True
        return False

    s.check("general elements can leave the big cell", escape)
    return s.results


# ---------------------------------------------------------------------------


SUITES: dict[str, Callable] = {
    "grassmann": suite_grassmann,
    "berezinian": suite_berezinian,
    "liesuper": suite_liesuper,
    "realform": suite_realform,
    "geometry": suite_geometry,
    "superflag": suite_superflag,
}

SUITE_ORDER = tuple(SUITES)


def run_suites(
    names: list[str],
    seed: int = 0,
    algebra_q: int = 8,
    j_sign: str = "-i",
    full: bool = False,
) -> list[tuple[str, list[CheckResult]]]:
    algebra = GrassmannAlgebra.paired(algebra_q // 2)
    cfg = ConjugationConfig(j_sign)
    out = []
    for name in names:
        rng = Random(seed)
        out.append((name, SUITES[name](rng, algebra, cfg, full)))
    return out
