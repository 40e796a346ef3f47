"""Big cell of the flag of 2|0 planes inside 2|1 spaces of a 4|1 space.

A point of the big cell is a triple (A, alpha, beta): A is a 2x2
even-entry block, alpha a 1x2 odd row, beta a 2x1 odd column.  It embeds
as the unipotent matrix

    [[I, 0, 0   ],
     [A, I, beta],
     [alpha, 0, 1]]

whose first two columns span the 2|0 plane and whose first two plus last
columns span the 2|1 space.  pi_chart recovers the triple from any group
element whose upper left 2x2 block has invertible body; twistor relation:
the 2|1 chart B differs from A by beta alpha.

Block lower triangular elements (L, R, N, chi, varphi, d) act on the big
cell by

    A -> R (A + chi alpha) L^-1 + N,
    alpha -> d (alpha + varphi) L^-1,
    beta -> d^-1 R (beta + chi),

and pi_chart intertwines this action with left matrix multiplication.
The conjugation xi restricts to the big cell; its fixed points are cut
out by beta = -j alpha~ together with skew hermitian A + (j/2) alpha~ alpha.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import ratmat
from .conformal import SHAPE, SIZE
from .errors import (
    AlgebraMismatchError,
    NotInBigCellError,
    NotInvertibleError,
    ParityError,
    PatternError,
    ShapeMismatchError,
)
from .grassmann import GrassmannAlgebra, Parity, SuperNumber, same_algebra
from .realform import DEFAULT_CONFIG, ConjugationConfig, xi_group
from .supermatrix import (
    EVEN,
    Block,
    SuperMatrix,
    block_add,
    block_dagger,
    block_det,
    block_eq,
    block_inverse_even,
    block_mul,
    block_neg,
    block_scale_left,
    block_scale_right,
    block_sub,
)

# tangent directions at the identity that pi_chart sees, 0-based
FLAG_TANGENT_EVEN = ((2, 0), (2, 1), (3, 0), (3, 1))
FLAG_TANGENT_ODD = ((2, 4), (3, 4), (4, 0), (4, 1))

# vanishing pattern of the block lower triangular subgroup
_AFFINE_ZERO = (
    (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (4, 2), (4, 3),
)

# vanishing pattern of the stabilizer of the origin
STABILIZER_ZERO = (
    (2, 0), (2, 1), (3, 0), (3, 1), (2, 4), (3, 4), (4, 0), (4, 1),
)


def _check_block(rows: Sequence[Sequence[SuperNumber]], r: int, c: int,
                 odd: bool, what: str) -> Block:
    out = tuple(tuple(row) for row in rows)
    if len(out) != r or any(len(row) != c for row in out):
        raise ShapeMismatchError(f"{what} must be {r}x{c}")
    for row in out:
        for e in row:
            p = e.parity()
            if odd:
                if not (e.is_zero() or p is Parity.ODD):
                    raise ParityError(f"{what} entries must be odd")
            elif p is not Parity.EVEN:
                raise ParityError(f"{what} entries must be even")
    return out


class BigCellPoint:
    """Chart triple (A, alpha, beta) of a big-cell point."""

    __slots__ = ("a_block", "alpha", "beta")

    def __init__(
        self,
        a_block: Sequence[Sequence[SuperNumber]],
        alpha: Sequence[Sequence[SuperNumber]],
        beta: Sequence[Sequence[SuperNumber]],
    ):
        self.a_block = _check_block(a_block, 2, 2, False, "A")
        self.alpha = _check_block(alpha, 1, 2, True, "alpha")
        self.beta = _check_block(beta, 2, 1, True, "beta")
        same_algebra(
            [e for blk in (self.a_block, self.alpha, self.beta) for row in blk for e in row]
        )

    @classmethod
    def origin(cls, algebra: GrassmannAlgebra) -> "BigCellPoint":
        z = algebra.zero()
        return cls(((z, z), (z, z)), ((z, z),), ((z,), (z,)))

    @property
    def algebra(self) -> GrassmannAlgebra:
        return self.a_block[0][0].algebra

    def embed(self) -> SuperMatrix:
        """Unipotent group element projecting back to this point."""
        alg = self.algebra
        one = alg.one()
        zero = alg.zero()
        a = self.a_block
        rows = [
            (one, zero, zero, zero, zero),
            (zero, one, zero, zero, zero),
            (a[0][0], a[0][1], one, zero, self.beta[0][0]),
            (a[1][0], a[1][1], zero, one, self.beta[1][0]),
            (self.alpha[0][0], self.alpha[0][1], zero, zero, one),
        ]
        return SuperMatrix(SHAPE, rows, EVEN)

    def __eq__(self, other):
        if not isinstance(other, BigCellPoint):
            return NotImplemented
        return (
            block_eq(self.a_block, other.a_block)
            and block_eq(self.alpha, other.alpha)
            and block_eq(self.beta, other.beta)
        )

    def __hash__(self):
        return hash((self.a_block, self.alpha, self.beta))

    def __repr__(self):
        return (
            f"BigCellPoint(A={[[str(e) for e in r] for r in self.a_block]}, "
            f"alpha={[str(e) for e in self.alpha[0]]}, "
            f"beta={[str(r[0]) for r in self.beta]})"
        )


def _require_even_group(g: SuperMatrix) -> None:
    if g.shape != SHAPE:
        raise ShapeMismatchError("expected shape 4|1")
    if g.parity != EVEN:
        raise ParityError("expected an even supermatrix")


def pi_chart(g: SuperMatrix) -> BigCellPoint:
    """Chart triple of the flag spanned by columns (1,2) and (1,2,5) of g.

    Requires the upper left 2x2 block Z to have invertible body; then
    A = W Z^-1, alpha = rho Z^-1 and beta = (tau2 - A tau1) d with
    d = (g55 - rho Z^-1 tau1)^-1.
    """
    _require_even_group(g)
    z_blk = g.sub((0, 1), (0, 1))
    w_blk = g.sub((2, 3), (0, 1))
    rho = g.sub((4,), (0, 1))
    tau1 = g.sub((0, 1), (4,))
    tau2 = g.sub((2, 3), (4,))
    g55 = g[4, 4]
    if g55.body.is_zero():
        raise NotInvertibleError("corner entry has no invertible body")
    if block_det(z_blk).body.is_zero():
        raise NotInBigCellError("upper left block has singular body")
    z_inv = block_inverse_even(z_blk)
    a_blk = block_mul(w_blk, z_inv)
    alpha = block_mul(rho, z_inv)
    schur = g55 - block_mul(alpha, tau1)[0][0]
    d = schur.inverse()
    beta = block_scale_right(block_sub(tau2, block_mul(a_blk, tau1)), d)
    return BigCellPoint(a_blk, alpha, beta)


@dataclass(frozen=True)
class FlagChart:
    """Chart (B, beta) of the 2|1 member of the flag alone."""

    b_block: Block
    beta: Block


def flag_charts(g: SuperMatrix) -> FlagChart:
    """Chart of the 2|1 space of g, normalized through its own corner.

    With Y = Z - g55^-1 tau1 rho and V = W - g55^-1 tau2 rho this is
    B = V Y^-1 and beta = (tau2 - B tau1) g55^-1.
    """
    _require_even_group(g)
    z_blk = g.sub((0, 1), (0, 1))
    w_blk = g.sub((2, 3), (0, 1))
    rho = g.sub((4,), (0, 1))
    tau1 = g.sub((0, 1), (4,))
    tau2 = g.sub((2, 3), (4,))
    g55 = g[4, 4]
    if g55.body.is_zero():
        raise NotInvertibleError("corner entry has no invertible body")
    c = g55.inverse()
    y_blk = block_sub(z_blk, block_scale_left(c, block_mul(tau1, rho)))
    v_blk = block_sub(w_blk, block_scale_left(c, block_mul(tau2, rho)))
    if block_det(y_blk).body.is_zero():
        raise NotInBigCellError("upper left block has singular body")
    b_blk = block_mul(v_blk, block_inverse_even(y_blk))
    beta = block_scale_right(block_sub(tau2, block_mul(b_blk, tau1)), c)
    return FlagChart(b_block=b_blk, beta=beta)


def twistor_check(g: SuperMatrix) -> bool:
    """The two charts of the same flag differ by A = B + beta alpha."""
    pt = pi_chart(g)
    fc = flag_charts(g)
    return block_eq(pt.a_block, block_add(fc.b_block, block_mul(pt.beta, pt.alpha)))


# ---------------------------------------------------------------------------
# the block lower triangular subgroup and its action


class SuperPoincareElement:
    """Group element [[L,0,0],[NL,R,R chi],[d varphi,0,d]]."""

    __slots__ = ("l_block", "r_block", "translation", "chi", "varphi", "d")

    def __init__(self, l_block, r_block, translation, chi, varphi, d: SuperNumber):
        self.l_block = _check_block(l_block, 2, 2, False, "L")
        self.r_block = _check_block(r_block, 2, 2, False, "R")
        self.translation = _check_block(translation, 2, 2, False, "N")
        self.chi = _check_block(chi, 2, 1, True, "chi")
        self.varphi = _check_block(varphi, 1, 2, True, "varphi")
        if not isinstance(d, SuperNumber):
            raise ShapeMismatchError("d must be a supernumber")
        if d.parity() is not Parity.EVEN:
            raise ParityError("d must be even")
        self.d = d
        same_algebra(
            [
                e
                for blk in (self.l_block, self.r_block, self.translation, self.chi, self.varphi)
                for row in blk
                for e in row
            ]
            + [d]
        )
        if (
            block_det(self.l_block).body.is_zero()
            or block_det(self.r_block).body.is_zero()
            or d.body.is_zero()
        ):
            raise NotInvertibleError("L, R and d must have invertible bodies")

    @property
    def algebra(self) -> GrassmannAlgebra:
        return self.d.algebra

    @classmethod
    def identity(cls, algebra: GrassmannAlgebra) -> "SuperPoincareElement":
        one = algebra.one()
        zero = algebra.zero()
        eye = ((one, zero), (zero, one))
        z22 = ((zero, zero), (zero, zero))
        return cls(eye, eye, z22, ((zero,), (zero,)), ((zero, zero),), one)

    def matrix(self) -> SuperMatrix:
        alg = self.algebra
        zero = alg.zero()
        nl = block_mul(self.translation, self.l_block)
        r_chi = block_mul(self.r_block, self.chi)
        d_phi = block_scale_left(self.d, self.varphi)
        rows = [
            tuple(self.l_block[0]) + (zero, zero, zero),
            tuple(self.l_block[1]) + (zero, zero, zero),
            tuple(nl[0]) + tuple(self.r_block[0]) + (r_chi[0][0],),
            tuple(nl[1]) + tuple(self.r_block[1]) + (r_chi[1][0],),
            tuple(d_phi[0]) + (zero, zero, self.d),
        ]
        return SuperMatrix(SHAPE, rows, EVEN)

    @classmethod
    def from_matrix(cls, g: SuperMatrix) -> "SuperPoincareElement":
        _require_even_group(g)
        for i, j in _AFFINE_ZERO:
            if not g.entries[i][j].is_zero():
                raise PatternError(f"entry ({i},{j}) must vanish")
        l_blk = g.sub((0, 1), (0, 1))
        r_blk = g.sub((2, 3), (2, 3))
        d = g[4, 4]
        if (
            block_det(l_blk).body.is_zero()
            or block_det(r_blk).body.is_zero()
            or d.body.is_zero()
        ):
            raise NotInvertibleError("L, R and d must have invertible bodies")
        translation = block_mul(g.sub((2, 3), (0, 1)), block_inverse_even(l_blk))
        chi = block_mul(block_inverse_even(r_blk), g.sub((2, 3), (4,)))
        varphi = block_scale_left(d.inverse(), g.sub((4,), (0, 1)))
        return cls(l_blk, r_blk, translation, chi, varphi, d)

    def compose(self, other: "SuperPoincareElement") -> "SuperPoincareElement":
        return SuperPoincareElement.from_matrix(self.matrix() @ other.matrix())

    def inverse(self) -> "SuperPoincareElement":
        return SuperPoincareElement.from_matrix(self.matrix().inverse())

    def berezinian(self) -> SuperNumber:
        return self.matrix().berezinian()

    def is_special(self) -> bool:
        return (self.berezinian() - 1).is_zero()

    def __eq__(self, other):
        if not isinstance(other, SuperPoincareElement):
            return NotImplemented
        return (
            block_eq(self.l_block, other.l_block)
            and block_eq(self.r_block, other.r_block)
            and block_eq(self.translation, other.translation)
            and block_eq(self.chi, other.chi)
            and block_eq(self.varphi, other.varphi)
            and (self.d - other.d).is_zero()
        )

    def __hash__(self):
        return hash((self.l_block, self.r_block, self.translation, self.chi, self.varphi, self.d))


def superpoincare_act(h: SuperPoincareElement, pt: BigCellPoint) -> BigCellPoint:
    """Left action on the big cell, in chart form."""
    if h.algebra != pt.algebra:
        raise AlgebraMismatchError("group element and point live in different algebras")
    l_inv = block_inverse_even(h.l_block)
    a_new = block_add(
        block_mul(
            block_mul(h.r_block, block_add(pt.a_block, block_mul(h.chi, pt.alpha))),
            l_inv,
        ),
        h.translation,
    )
    alpha_new = block_scale_left(h.d, block_mul(block_add(pt.alpha, h.varphi), l_inv))
    beta_new = block_scale_left(
        h.d.inverse(), block_mul(h.r_block, block_add(pt.beta, h.chi))
    )
    return BigCellPoint(a_new, alpha_new, beta_new)


def stabilizer_membership(g: SuperMatrix) -> bool:
    """Whether an invertible even g fixes the origin of the big cell.

    Equivalent to the vanishing pattern: W, rho and tau2 all zero.
    """
    _require_even_group(g)
    body = [[g.entries[i][j].body for j in range(4)] for i in range(4)]
    if ratmat.det(tuple(tuple(r) for r in body)).is_zero() or g[4, 4].body.is_zero():
        raise NotInvertibleError("stabilizer test needs an invertible element")
    return all(g.entries[i][j].is_zero() for i, j in STABILIZER_ZERO)


def big_cell_escape_witness(
    algebra: GrassmannAlgebra | None = None,
) -> tuple[SuperMatrix, BigCellPoint]:
    """An invertible g and big-cell point whose translate leaves the big cell.

    The general linear supergroup does not preserve the cell: here
    g pt.embed() has upper left block I + A = 0.
    """
    alg = algebra if algebra is not None else GrassmannAlgebra(0)
    one = alg.one()
    zero = alg.zero()
    rows = [
        (one, zero, one, zero, zero),
        (zero, one, zero, one, zero),
        (zero, zero, one, zero, zero),
        (zero, zero, zero, one, zero),
        (zero, zero, zero, zero, one),
    ]
    g = SuperMatrix(SHAPE, rows, EVEN)
    minus_one = alg.scalar(-1)
    pt = BigCellPoint(
        ((minus_one, zero), (zero, minus_one)),
        ((zero, zero),),
        ((zero,), (zero,)),
    )
    return g, pt


# ---------------------------------------------------------------------------
# the conjugation on the big cell


def xi_bigcell(pt: BigCellPoint, cfg: ConjugationConfig = DEFAULT_CONFIG) -> BigCellPoint:
    """Transport xi through embed and the chart; involutive on the cell."""
    return pi_chart(xi_group(pt.embed(), cfg))


def real_coordinates(pt: BigCellPoint, cfg: ConjugationConfig = DEFAULT_CONFIG) -> Block:
    """Shifted even chart A + (j/2) alpha~ alpha.

    On xi-fixed points this block is skew hermitian, and together with
    alpha it freely parametrizes the fixed locus.
    """
    half_j = pt.algebra.scalar(cfg.j * Fraction(1, 2))
    return block_add(
        pt.a_block,
        block_scale_left(half_j, block_mul(block_dagger(pt.alpha), pt.alpha)),
    )


def point_from_real_coordinates(
    a_prime: Sequence[Sequence[SuperNumber]],
    alpha: Sequence[Sequence[SuperNumber]],
    cfg: ConjugationConfig = DEFAULT_CONFIG,
) -> BigCellPoint:
    """Rebuild the xi-fixed point with the given shifted chart and alpha."""
    alpha_blk = _check_block(alpha, 1, 2, True, "alpha")
    a_prime_blk = _check_block(a_prime, 2, 2, False, "A'")
    alg = same_algebra([e for blk in (a_prime_blk, alpha_blk) for row in blk for e in row])
    half_j = alg.scalar(cfg.j * Fraction(1, 2))
    minus_j = alg.scalar(-cfg.j)
    a_blk = block_sub(
        a_prime_blk,
        block_scale_left(half_j, block_mul(block_dagger(alpha_blk), alpha_blk)),
    )
    beta = block_scale_left(minus_j, block_dagger(alpha_blk))
    return BigCellPoint(a_blk, alpha_blk, beta)


@dataclass(frozen=True)
class SuperRealityReport:
    """Fixed-point test for xi on the big cell, two ways: directly, and
    through the coordinate conditions it is equivalent to."""

    fixed_by_xi: bool
    a_prime_skew: bool
    beta_condition: bool

    @property
    def consistent(self) -> bool:
        return self.fixed_by_xi == (self.a_prime_skew and self.beta_condition)


def reality_report(
    pt: BigCellPoint, cfg: ConjugationConfig = DEFAULT_CONFIG
) -> SuperRealityReport:
    a_prime = real_coordinates(pt, cfg)
    minus_j = pt.algebra.scalar(-cfg.j)
    return SuperRealityReport(
        fixed_by_xi=xi_bigcell(pt, cfg) == pt,
        a_prime_skew=block_eq(a_prime, block_neg(block_dagger(a_prime))),
        beta_condition=block_eq(
            pt.beta, block_scale_left(minus_j, block_dagger(pt.alpha))
        ),
    )


# ---------------------------------------------------------------------------
# differential of the chart at the identity


def pi_differential_matrix() -> ratmat.Matrix:
    """Matrix of the differential of pi_chart at the identity.

    Feeds each tangent direction through the chart with a nilpotent
    parameter and reads off first-order coefficients.  Rows are the chart
    coordinates (A entries, alpha entries, beta entries), columns the
    eight tangent directions in pattern order; the result is a permutation
    matrix, so the chart is etale at the identity.
    """
    ext = GrassmannAlgebra(3)
    eps = ext.gen(1) * ext.gen(2)
    eps_mask = 0b011
    tau = ext.gen(3)
    tau_mask = 0b100
    one = ext.one()
    zero = ext.zero()

    columns = []
    directions = [(pos, eps, eps_mask) for pos in FLAG_TANGENT_EVEN]
    directions += [(pos, tau, tau_mask) for pos in FLAG_TANGENT_ODD]
    for (di, dj), param, mask in directions:
        rows = [
            [one if i == j else zero for j in range(SIZE)] for i in range(SIZE)
        ]
        rows[di][dj] = rows[di][dj] + param
        pt = pi_chart(SuperMatrix(SHAPE, rows, EVEN))
        coords = [
            pt.a_block[0][0], pt.a_block[0][1], pt.a_block[1][0], pt.a_block[1][1],
            pt.alpha[0][0], pt.alpha[0][1],
            pt.beta[0][0], pt.beta[1][0],
        ]
        columns.append([c.coefficient(mask) for c in coords])
    return tuple(tuple(columns[k][i] for k in range(8)) for i in range(8))


def pi_differential_is_bijective() -> bool:
    return ratmat.rank(pi_differential_matrix()) == 8
