"""Seeded random values for property checks.

Every function takes a random.Random so callers control reproducibility.
Coefficients are drawn from small pools of Gaussian rationals; souls get
few terms to keep exact arithmetic fast at q around 8.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from random import Random

from . import ratmat
from .conformal import SHAPE, SIZE, AlgebraElement
from .errors import DegeneratePlaneError
from .geometry import Plane, PluckerPoint, PoincareElement, RealPoincareElement, plucker
from .grassmann import GaussianRational, GrassmannAlgebra, SuperNumber
from .superflag import BigCellPoint, SuperPoincareElement
from .supermatrix import EVEN, ODD, Block, SuperMatrix

_SMALL = (
    Fraction(-2), Fraction(-1), Fraction(-1, 2), Fraction(0),
    Fraction(1, 2), Fraction(1), Fraction(2),
)
_NONZERO = tuple(f for f in _SMALL if f != 0)


def random_fraction(rng: Random, nonzero: bool = False) -> Fraction:
    return rng.choice(_NONZERO if nonzero else _SMALL)


def random_gaussian(rng: Random, nonzero: bool = False) -> GaussianRational:
    while True:
        c = GaussianRational(rng.choice(_SMALL), rng.choice(_SMALL))
        if not (nonzero and c.is_zero()):
            return c


@lru_cache(maxsize=None)
def _parity_masks(q: int, odd: bool) -> tuple[int, ...]:
    return tuple(
        m for m in range(1, 1 << q) if (m.bit_count() & 1) == (1 if odd else 0)
    )


def random_soul(rng: Random, algebra: GrassmannAlgebra, odd: bool, terms: int = 2) -> SuperNumber:
    """Nilpotent element of the requested parity (zero when q is too small)."""
    pool = _parity_masks(algebra.q, odd)
    if not pool:
        return algebra.zero()
    out = algebra.zero()
    for mask in rng.sample(pool, min(terms, len(pool))):
        out = out + algebra.from_mask(mask, random_gaussian(rng, nonzero=True))
    return out


def random_even(rng: Random, algebra: GrassmannAlgebra, invertible: bool = False,
                soul_terms: int = 1) -> SuperNumber:
    body = random_gaussian(rng, nonzero=invertible)
    return algebra.scalar(body) + random_soul(rng, algebra, odd=False, terms=soul_terms)


def random_odd(rng: Random, algebra: GrassmannAlgebra, terms: int = 2) -> SuperNumber:
    return random_soul(rng, algebra, odd=True, terms=terms)


def random_supernumber(rng: Random, algebra: GrassmannAlgebra, terms: int = 3) -> SuperNumber:
    """Inhomogeneous element: a body plus a few arbitrary monomials."""
    out = algebra.scalar(random_gaussian(rng))
    masks = list(range(1, 1 << algebra.q))
    if masks:
        for mask in rng.sample(masks, min(terms, len(masks))):
            out = out + algebra.from_mask(mask, random_gaussian(rng))
    return out


def _random_invertible_body(rng: Random, n: int) -> ratmat.Matrix:
    while True:
        m = tuple(
            tuple(random_gaussian(rng) for _ in range(n)) for _ in range(n)
        )
        if not ratmat.det(m).is_zero():
            return m


def random_even_block(rng: Random, algebra: GrassmannAlgebra, n: int,
                      invertible: bool = True, soul_terms: int = 1) -> Block:
    """n x n block of even supernumbers, invertible body by default."""
    body = _random_invertible_body(rng, n) if invertible else tuple(
        tuple(random_gaussian(rng) for _ in range(n)) for _ in range(n)
    )
    return tuple(
        tuple(
            algebra.scalar(body[i][j])
            + random_soul(rng, algebra, odd=False, terms=soul_terms)
            for j in range(n)
        )
        for i in range(n)
    )


def random_odd_block(rng: Random, algebra: GrassmannAlgebra, r: int, c: int,
                     terms: int = 1) -> Block:
    return tuple(
        tuple(random_odd(rng, algebra, terms=terms) for _ in range(c)) for _ in range(r)
    )


def random_supermatrix(rng: Random, algebra: GrassmannAlgebra, m: int, n: int,
                       parity: str = EVEN, terms: int = 1) -> SuperMatrix:
    """Homogeneous supermatrix with small entries; not necessarily invertible."""
    size = m + n
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            slot_odd = (i >= m) != (j >= m)
            if parity == ODD:
                slot_odd = not slot_odd
            if slot_odd:
                row.append(random_odd(rng, algebra, terms=terms))
            else:
                row.append(random_even(rng, algebra, soul_terms=terms))
        rows.append(row)
    return SuperMatrix((m, n), rows, parity)


def random_invertible_supermatrix(rng: Random, algebra: GrassmannAlgebra,
                                  m: int, n: int, terms: int = 1) -> SuperMatrix:
    """Even supermatrix whose diagonal blocks have invertible bodies."""
    p = random_even_block(rng, algebra, m, invertible=True, soul_terms=terms)
    s = random_even_block(rng, algebra, n, invertible=True, soul_terms=terms)
    q = random_odd_block(rng, algebra, m, n, terms=terms)
    r = random_odd_block(rng, algebra, n, m, terms=terms)
    return SuperMatrix.from_blocks((m, n), p, q, r, s, EVEN)


def random_special_supermatrix(rng: Random, algebra: GrassmannAlgebra,
                               terms: int = 1) -> SuperMatrix:
    """Invertible 4|1 supermatrix with Berezinian exactly one.

    Scaling the bottom row by an invertible even c divides the Berezinian
    by c (the Schur complement is unchanged and det(s) picks up c), so
    scaling by the Berezinian itself lands on the special subgroup.
    """
    g = random_invertible_supermatrix(rng, algebra, 4, 1, terms=terms)
    ber = g.berezinian()
    rows = [list(row) for row in g.entries]
    rows[4] = [ber * e for e in rows[4]]
    return SuperMatrix(SHAPE, rows, EVEN)


# -- classical samplers


def random_invertible_matrix(rng: Random, n: int) -> ratmat.Matrix:
    return _random_invertible_body(rng, n)


def random_matrix(rng: Random, r: int, c: int) -> ratmat.Matrix:
    return tuple(tuple(random_gaussian(rng) for _ in range(c)) for _ in range(r))


def random_sl2(rng: Random) -> ratmat.Matrix:
    """Determinant-one 2x2 matrix built from elementary factors."""
    a = random_gaussian(rng)
    b = random_gaussian(rng)
    c = random_gaussian(rng, nonzero=True)
    upper = ratmat.mat([[1, a], [0, 1]])
    lower = ratmat.mat([[1, 0], [b, 1]])
    diag = ratmat.mat([[c, 0], [0, c.inverse()]])
    return ratmat.mul(ratmat.mul(upper, lower), diag)


def random_hermitian(rng: Random, n: int = 2) -> ratmat.Matrix:
    rows = [[GaussianRational(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = GaussianRational(random_fraction(rng))
        for j in range(i + 1, n):
            c = random_gaussian(rng)
            rows[i][j] = c
            rows[j][i] = c.conjugate()
    return tuple(tuple(row) for row in rows)


def random_skew_hermitian(rng: Random, n: int = 2) -> ratmat.Matrix:
    rows = [[GaussianRational(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = GaussianRational(0, random_fraction(rng))
        for j in range(i + 1, n):
            c = random_gaussian(rng)
            rows[i][j] = c
            rows[j][i] = -c.conjugate()
    return tuple(tuple(row) for row in rows)


def random_plane(rng: Random) -> Plane:
    while True:
        m = random_matrix(rng, 4, 2)
        try:
            return Plane(m)
        except DegeneratePlaneError:
            continue


def random_plucker_point(rng: Random) -> PluckerPoint:
    return plucker(random_plane(rng))


def random_poincare(rng: Random) -> PoincareElement:
    return PoincareElement(
        random_invertible_matrix(rng, 2),
        random_invertible_matrix(rng, 2),
        random_matrix(rng, 2, 2),
    )


def random_real_poincare(rng: Random) -> RealPoincareElement:
    return RealPoincareElement(random_invertible_matrix(rng, 2), random_hermitian(rng))


# -- superalgebra and flag samplers


def random_algebra_element(rng: Random) -> AlgebraElement:
    rows = [[random_gaussian(rng) for _ in range(SIZE)] for _ in range(SIZE)]
    return AlgebraElement.from_rational(rows)


def random_special_element(rng: Random) -> AlgebraElement:
    """Random supertrace-zero element."""
    rows = [[random_gaussian(rng) for _ in range(SIZE)] for _ in range(SIZE)]
    rows[4][4] = sum((rows[i][i] for i in range(4)), GaussianRational(0))
    return AlgebraElement.from_rational(rows)


def random_bigcell_point(rng: Random, algebra: GrassmannAlgebra,
                         terms: int = 1) -> BigCellPoint:
    a_blk = random_even_block(rng, algebra, 2, invertible=False, soul_terms=terms)
    alpha = random_odd_block(rng, algebra, 1, 2, terms=terms)
    beta = random_odd_block(rng, algebra, 2, 1, terms=terms)
    return BigCellPoint(a_blk, alpha, beta)


def random_superpoincare(rng: Random, algebra: GrassmannAlgebra,
                         terms: int = 1) -> SuperPoincareElement:
    return SuperPoincareElement(
        random_even_block(rng, algebra, 2, invertible=True, soul_terms=terms),
        random_even_block(rng, algebra, 2, invertible=True, soul_terms=terms),
        random_even_block(rng, algebra, 2, invertible=False, soul_terms=terms),
        random_odd_block(rng, algebra, 2, 1, terms=terms),
        random_odd_block(rng, algebra, 1, 2, terms=terms),
        random_even(rng, algebra, invertible=True, soul_terms=terms),
    )
