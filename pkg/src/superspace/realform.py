"""Real structures: the algebra conjugation sigma and the group conjugations.

sigma is the antilinear involution on 4|1 matrices
    (X, mu; nu, x)  ->  (-F X~ F, i F nu~, i mu~ F, -conj(x)),
where ~ is the conjugate transpose and F swaps the two 2x2 halves of the
even block.  Its fixed points form a real superalgebra of dimension 16|8.

At group level theta sends (D, tau; rho, d) to (D~, j rho~; j tau~, conj(d))
and reverses products; xi(g) = L theta(g)^-1 L with L = diag(F, 1) is an
involutive group conjugation.  The sign j is i or -i; the differential of
xi at the identity, computed exactly with a nilpotent parameter, agrees
with sigma for exactly one choice, and resolve_j_sign() recomputes which.
That bootstrap pins the default "-i".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import ratmat
from .conformal import SHAPE, SIZE, AlgebraElement, gl_basis, sl_basis
from .errors import (
    NotInvertibleError,
    ParityError,
    PatternError,
    ShapeMismatchError,
    StructureError,
)
from .grassmann import GaussianRational, GrassmannAlgebra, SuperNumber
from .supermatrix import (
    EVEN,
    Block,
    SuperMatrix,
    block_add,
    block_dagger,
    block_eq,
    block_identity,
    block_inverse_even,
    block_mul,
    block_neg,
    block_scale_left,
    block_sub,
)

DEFAULT_J_SIGN = "-i"
_J_VALUES = {"+i": GaussianRational(0, 1), "-i": GaussianRational(0, -1)}


@dataclass(frozen=True)
class ConjugationConfig:
    """Choice of the sign j in the group conjugations."""

    j_sign: str = DEFAULT_J_SIGN

    def __post_init__(self):
        if self.j_sign not in _J_VALUES:
            raise StructureError("j_sign must be '+i' or '-i'")

    @property
    def j(self) -> GaussianRational:
        return _J_VALUES[self.j_sign]


DEFAULT_CONFIG = ConjugationConfig()

F_RAT: ratmat.Matrix = ratmat.mat(
    [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]
)


def f_block(algebra: GrassmannAlgebra) -> Block:
    return tuple(
        tuple(algebra.scalar(v) for v in row) for row in F_RAT
    )


def l_matrix(algebra: GrassmannAlgebra) -> SuperMatrix:
    """diag(F, 1): the involution implementing the half swap at group level."""
    rows = [[algebra.scalar(v) for v in row] + [algebra.zero()] for row in F_RAT]
    rows.append([algebra.zero()] * 4 + [algebra.one()])
    return SuperMatrix(SHAPE, rows, EVEN)


# ---------------------------------------------------------------------------
# sigma on the superalgebra


def sigma(x: AlgebraElement) -> AlgebraElement:
    """The antilinear involution preserving the superbracket."""
    body = x.body_matrix()
    X = tuple(row[:4] for row in body[:4])
    mu = tuple((body[i][4],) for i in range(4))
    nu = (tuple(body[4][j] for j in range(4)),)
    corner = body[4][4]
    i_unit = GaussianRational(0, 1)
    new_X = ratmat.neg(ratmat.mul(ratmat.mul(F_RAT, ratmat.dagger(X)), F_RAT))
    new_mu = ratmat.scale(i_unit, ratmat.mul(F_RAT, ratmat.dagger(nu)))
    new_nu = ratmat.scale(i_unit, ratmat.mul(ratmat.dagger(mu), F_RAT))
    rows = [list(new_X[i]) + [new_mu[i][0]] for i in range(4)]
    rows.append(list(new_nu[0]) + [-corner.conjugate()])
    return AlgebraElement.from_rational(rows, x.algebra)


def _flatten(x: AlgebraElement) -> list[Fraction]:
    out: list[Fraction] = []
    for i in range(SIZE):
        for j in range(SIZE):
            c = x.entry(i, j)
            out.append(c.re)
            out.append(c.im)
    return out


def _echelon_filter(candidates: list[AlgebraElement]) -> list[AlgebraElement]:
    # keep candidates whose coordinate vectors are rationally independent
    rows: list[tuple[int, list[Fraction]]] = []
    chosen: list[AlgebraElement] = []
    for cand in candidates:
        vec = _flatten(cand)
        for pivot, row in rows:
            f = vec[pivot]
            if f != 0:
                vec = [a - f * b for a, b in zip(vec, row)]
        pivot = next((k for k, v in enumerate(vec) if v != 0), None)
        if pivot is None:
            continue
        inv = 1 / vec[pivot]
        vec = [v * inv for v in vec]
        rows.append((pivot, vec))
        chosen.append(cand)
    return chosen


@dataclass(frozen=True)
class FixedBasis:
    even: tuple[AlgebraElement, ...]
    odd: tuple[AlgebraElement, ...]

    @property
    def dimensions(self) -> tuple[int, int]:
        return (len(self.even), len(self.odd))


def sigma_fixed_basis() -> FixedBasis:
    """Real basis of the sigma fixed points in the supertrace-zero algebra.

    For each complex basis vector B both B + sigma(B) and i(B - sigma(B))
    are fixed; a rational echelon pass extracts an independent set.  The
    result has real dimension 16|8.
    """
    i_unit = GaussianRational(0, 1)
    even_cands: list[AlgebraElement] = []
    odd_cands: list[AlgebraElement] = []
    for b in sl_basis():
        for cand in (b + sigma(b), i_unit * (b - sigma(b))):
            if cand.is_zero():
                continue
            if cand.odd_part().is_zero():
                even_cands.append(cand)
            else:
                odd_cands.append(cand)
    return FixedBasis(
        even=tuple(_echelon_filter(even_cands)),
        odd=tuple(_echelon_filter(odd_cands)),
    )


# ---------------------------------------------------------------------------
# group conjugations


def _group_blocks(g: SuperMatrix) -> tuple[Block, Block, Block, SuperNumber]:
    d_block, tau, rho, corner = g.four_blocks()
    return d_block, tau, rho, corner[0][0]


def _require_group_element(g: SuperMatrix) -> None:
    if g.shape != SHAPE:
        raise ShapeMismatchError("group conjugations expect shape 4|1")
    if g.parity != EVEN:
        raise ParityError("group conjugations expect an even supermatrix")


def theta_group(g: SuperMatrix, cfg: ConjugationConfig = DEFAULT_CONFIG) -> SuperMatrix:
    """(D, tau; rho, d) -> (D~, j rho~; j tau~, conj(d)); reverses products."""
    _require_group_element(g)
    from .supermatrix import block_det

    D, tau, rho, d = _group_blocks(g)
    if block_det(D).body.is_zero() or d.body.is_zero():
        raise NotInvertibleError("group conjugation of a non-invertible element")
    algebra = g.algebra
    j = algebra.scalar(cfg.j)
    new_q = block_scale_left(j, block_dagger(rho))
    new_r = block_scale_left(j, block_dagger(tau))
    return SuperMatrix.from_blocks(
        SHAPE, block_dagger(D), new_q, new_r, ((d.bar(),),), EVEN
    )


def xi_group(g: SuperMatrix, cfg: ConjugationConfig = DEFAULT_CONFIG) -> SuperMatrix:
    """xi(g) = L theta(g)^-1 L; an involutive group homomorphism."""
    L = l_matrix(g.algebra)
    return L @ theta_group(g, cfg).inverse() @ L


def xi_differential(
    x: AlgebraElement, cfg: ConjugationConfig = DEFAULT_CONFIG
) -> AlgebraElement:
    """Differential of xi at the identity, exactly.

    Evaluates xi on 1 + t x with a nilpotent parameter t adjoined to the
    algebra (a product of two fresh self-paired generators for the even
    part, a single fresh generator for the odd part; either way t^2 = 0 and
    bar(t) = t) and reads off the first-order coefficient.  No finite
    differences, no truncation error.
    """
    base = x.algebra
    ext = base.extend(3)
    k = base.q
    eps = ext.gen(k + 1) * ext.gen(k + 2)
    eps_mask = (1 << k) | (1 << (k + 1))
    tau = ext.gen(k + 3)
    tau_mask = 1 << (k + 2)

    out_rows = [[GaussianRational(0)] * SIZE for _ in range(SIZE)]
    for part, param, mask in (
        (x.even_part(), eps, eps_mask),
        (x.odd_part(), tau, tau_mask),
    ):
        if part.is_zero():
            continue
        rows = []
        for i in range(SIZE):
            row = []
            for j in range(SIZE):
                e = param * part.entry(i, j)
                if i == j:
                    e = e + ext.one()
                row.append(e)
            rows.append(tuple(row))
        g = SuperMatrix(SHAPE, tuple(rows), EVEN)
        image = xi_group(g, cfg)
        for i in range(SIZE):
            for j in range(SIZE):
                c = image.entries[i][j].coefficient(mask)
                out_rows[i][j] = out_rows[i][j] + c
    return AlgebraElement.from_rational(out_rows, base)


def resolve_j_sign() -> str:
    """Recompute which sign makes the differential of xi coincide with sigma.

    Exactly one of the two candidates matches on the full matrix basis;
    anything else would mean the conventions drifted, and raises.
    """
    matches = []
    for sign in ("+i", "-i"):
        cfg = ConjugationConfig(sign)
        if all(xi_differential(b, cfg) == sigma(b) for b in gl_basis()):
            matches.append(sign)
    if len(matches) != 1:
        raise StructureError(f"differential matched sigma for {matches!r}")
    return matches[0]


# ---------------------------------------------------------------------------
# reality conditions for the affine supergroup pattern

_POINCARE_ZERO = {(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (4, 2), (4, 3)}


@dataclass(frozen=True)
class PoincareRealityReport:
    """Outcome of the three fixed-point conditions for xi on the pattern
    [[L,0,0],[M,R,R chi],[d phi,0,d]], plus the equivalent statement that
    M L^-1 + (j/2) L~^-1 phi~ phi L^-1 is skew hermitian."""

    l_condition: bool
    chi_condition: bool
    m_condition: bool
    shifted_m_skew: bool

    @property
    def holds(self) -> bool:
        return self.l_condition and self.chi_condition and self.m_condition


def reality_conditions_poincare(
    g: SuperMatrix, cfg: ConjugationConfig = DEFAULT_CONFIG
) -> PoincareRealityReport:
    _require_group_element(g)
    for (i, j) in _POINCARE_ZERO:
        if not g.entries[i][j].is_zero():
            raise PatternError("matrix is not in the affine supergroup pattern")
    algebra = g.algebra
    L = g.sub((0, 1), (0, 1))
    M = g.sub((2, 3), (0, 1))
    R = g.sub((2, 3), (2, 3))
    r_chi = g.sub((2, 3), (4,))
    d_phi = g.sub((4,), (0, 1))
    d = g.entries[4][4]

    ident = block_identity(algebra, 2)
    j = algebra.scalar(cfg.j)
    half_j = algebra.scalar(cfg.j * Fraction(1, 2))

    chi = block_mul(block_inverse_even(R), r_chi)
    phi = block_scale_left(d.inverse(), d_phi)

    l_condition = block_eq(block_mul(L, block_dagger(R)), ident)

    chi_condition = block_eq(
        chi, block_scale_left(-j, block_dagger(phi))
    )

    l_inv = block_inverse_even(L)
    l_dag_inv = block_inverse_even(block_dagger(L))
    K = block_mul(M, l_inv)
    P = block_mul(block_mul(l_dag_inv, block_mul(block_dagger(phi), phi)), l_inv)
    m_condition = block_eq(
        K,
        block_sub(block_neg(block_dagger(K)), block_scale_left(j, P)),
    )

    shifted = block_add(K, block_scale_left(half_j, P))
    shifted_m_skew = block_eq(shifted, block_neg(block_dagger(shifted)))

    return PoincareRealityReport(
        l_condition=l_condition,
        chi_condition=chi_condition,
        m_condition=m_condition,
        shifted_m_skew=shifted_m_skew,
    )
