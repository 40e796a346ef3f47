"""Shared sampling shortcuts for the test suite.

Everything random goes through a seeded Random instance created by the
test that uses it, so failures replay exactly.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from superspace import ratmat, superflag
from superspace.grassmann import GaussianRational, GrassmannAlgebra
from superspace.realform import ConjugationConfig
from superspace.sampling import (
    random_even,
    random_even_block,
    random_invertible_supermatrix,
    random_odd_block,
)
from superspace.supermatrix import (
    EVEN,
    SuperMatrix,
    block_dagger,
    block_inverse_even,
    block_mul,
    block_scale_left,
    block_sub,
)

ALG0 = GrassmannAlgebra(0)


def paired_algebra(q: int) -> GrassmannAlgebra:
    return GrassmannAlgebra.paired(q // 2)


def skew_even_block(rng: Random, algebra: GrassmannAlgebra, n: int = 2):
    """Random skew-hermitian even block, S - dagger(S)."""
    seed = random_even_block(rng, algebra, n, invertible=False)
    return block_sub(seed, block_dagger(seed))


def bigcell_group_element(rng: Random, algebra: GrassmannAlgebra) -> SuperMatrix:
    """Invertible even 4|1 matrix whose upper left 2x2 body is invertible."""
    while True:
        g = random_invertible_supermatrix(rng, algebra, 4, 1)
        z_body = tuple(tuple(g.entries[i][j].body for j in (0, 1)) for i in (0, 1))
        if not ratmat.det(z_body).is_zero():
            return g


def unit_modulus_scalar(rng: Random) -> GaussianRational:
    """A Gaussian rational with c * conj(c) = 1."""
    return rng.choice(
        [
            GaussianRational(1),
            GaussianRational(-1),
            GaussianRational(0, 1),
            GaussianRational(Fraction(3, 5), Fraction(4, 5)),
            GaussianRational(Fraction(-3, 5), Fraction(4, 5)),
        ]
    )


def real_poincare_supermatrix(
    rng: Random,
    algebra: GrassmannAlgebra,
    cfg: ConjugationConfig,
    corner: GaussianRational | int = 1,
) -> SuperMatrix:
    """Affine-patterned matrix built to satisfy the reality conditions.

    L is free invertible, R = dagger(L)^-1, chi = -j dagger(varphi), and
    M L^-1 = (skew part) - (j/2) dagger(L)^-1 dagger(phi) phi L^-1.
    """
    j = algebra.scalar(cfg.j)
    half_j = algebra.scalar(cfg.j * Fraction(1, 2))
    l_blk = random_even_block(rng, algebra, 2, invertible=True)
    phi = random_odd_block(rng, algebra, 1, 2)
    skew = skew_even_block(rng, algebra)
    l_inv = block_inverse_even(l_blk)
    l_dag_inv = block_inverse_even(block_dagger(l_blk))
    pencil = block_mul(block_mul(l_dag_inv, block_mul(block_dagger(phi), phi)), l_inv)
    k_blk = block_sub(skew, block_scale_left(half_j, pencil))
    m_blk = block_mul(k_blk, l_blk)
    r_blk = l_dag_inv
    chi = block_scale_left(-j, block_dagger(phi))
    d = algebra.scalar(corner)
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


def poincare_pattern_supermatrix(rng: Random, algebra: GrassmannAlgebra) -> SuperMatrix:
    """Generic matrix with the affine vanishing pattern, no reality imposed."""
    l_blk = random_even_block(rng, algebra, 2, invertible=True)
    r_blk = random_even_block(rng, algebra, 2, invertible=True)
    m_blk = random_even_block(rng, algebra, 2, invertible=False)
    tau2 = random_odd_block(rng, algebra, 2, 1)
    rho = random_odd_block(rng, algebra, 1, 2)
    d = random_even(rng, algebra, invertible=True)
    zero = algebra.zero()
    rows = [
        tuple(l_blk[0]) + (zero, zero, zero),
        tuple(l_blk[1]) + (zero, zero, zero),
        tuple(m_blk[0]) + tuple(r_blk[0]) + (tau2[0][0],),
        tuple(m_blk[1]) + tuple(r_blk[1]) + (tau2[1][0],),
        tuple(rho[0]) + (zero, zero, d),
    ]
    return SuperMatrix((4, 1), rows, EVEN)


def body_matrix(block) -> ratmat.Matrix:
    return tuple(tuple(e.body for e in row) for row in block)


def origin_point(algebra: GrassmannAlgebra) -> superflag.BigCellPoint:
    return superflag.BigCellPoint.origin(algebra)
