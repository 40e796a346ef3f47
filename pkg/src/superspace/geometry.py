"""Planes in C^4, their Plucker coordinates, and the Klein quadric.

A plane is the column span of a rank-2 complex 4x2 matrix.  Its six
Plucker coordinates, taken in the order

    (y12, y23, y31, y14, y24, y34),

satisfy the Klein relation y12 y34 + y23 y14 + y31 y24 = 0, and every
nonzero solution arises from a plane.  The locus y12 != 0 is the big
cell; it carries a 2x2 matrix chart A, and lower triangular group
elements [[L, 0], [NL, R]] act on it by A -> N + R A L^-1.  The
conjugation swapping y31 with y24 restricts on the big cell to A -> A~
(conjugate transpose), so its fixed charts are the hermitian matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import ratmat
from .errors import (
    DegeneratePlaneError,
    InvalidPointError,
    NotInBigCellError,
    NotInvertibleError,
    NonHermitianTranslationError,
    PatternError,
    ShapeMismatchError,
)
from .grassmann import GaussianRational

COORD_LABELS = ("y12", "y23", "y31", "y14", "y24", "y34")

# row pairs behind each coordinate slot, 0-based
_PAIRS = ((0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3))

BIG_CELL = "big_cell"
AFFINE_CONE = "affine_cone"
PROJECTIVE_QUADRIC = "projective_quadric"


class Plane:
    """Rank-2 4x2 matrix whose column span is the plane."""

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[Sequence]):
        m = ratmat.mat(entries)
        if ratmat.shape(m) != (4, 2):
            raise ShapeMismatchError("a plane needs a 4x2 matrix")
        if ratmat.rank(m) != 2:
            raise DegeneratePlaneError("columns do not span a plane")
        self.entries = m

    def column(self, k: int) -> tuple[GaussianRational, ...]:
        return tuple(row[k] for row in self.entries)

    def __eq__(self, other):
        if not isinstance(other, Plane):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"Plane({[[str(v) for v in row] for row in self.entries]})"


def klein_form(coords: Sequence) -> GaussianRational:
    y = [GaussianRational.coerce(c) for c in coords]
    if len(y) != 6:
        raise ShapeMismatchError("expected six coordinates")
    return y[0] * y[5] + y[1] * y[3] + y[2] * y[4]


class PluckerPoint:
    """Point of the Klein quadric: six coordinates, not all zero."""

    __slots__ = ("y",)

    def __init__(self, coords: Sequence):
        y = tuple(GaussianRational.coerce(c) for c in coords)
        if len(y) != 6:
            raise ShapeMismatchError("expected six coordinates")
        if all(c.is_zero() for c in y):
            raise InvalidPointError("zero vector is not a projective point")
        if not klein_form(y).is_zero():
            raise InvalidPointError("coordinates violate the quadric relation")
        self.y = y

    def __eq__(self, other):
        if not isinstance(other, PluckerPoint):
            return NotImplemented
        return self.y == other.y

    def __hash__(self):
        return hash(self.y)

    def __repr__(self):
        return f"PluckerPoint({[str(v) for v in self.y]})"


def plucker(plane: Plane) -> PluckerPoint:
    """Plucker coordinates of a plane; lands on the quadric by construction."""
    a = plane.column(0)
    b = plane.column(1)
    return PluckerPoint(tuple(a[i] * b[j] - a[j] * b[i] for i, j in _PAIRS))


def projective_equal(p: PluckerPoint, q: PluckerPoint) -> bool:
    k = next(i for i, c in enumerate(p.y) if not c.is_zero())
    if q.y[k].is_zero():
        return False
    lam = q.y[k] / p.y[k]
    return all(q.y[i] == lam * p.y[i] for i in range(6))


def plane_span_equal(p: Plane, q: Plane) -> bool:
    joined = tuple(
        tuple(p.entries[i]) + tuple(q.entries[i]) for i in range(4)
    )
    return ratmat.rank(joined) == 2


# ---------------------------------------------------------------------------
# wedge action


def wedge_matrix(coords: Sequence) -> ratmat.Matrix:
    y = [GaussianRational.coerce(c) for c in coords]
    rows = [[GaussianRational(0)] * 4 for _ in range(4)]
    for c, (i, j) in zip(y, _PAIRS):
        rows[i][j] = c
        rows[j][i] = -c
    return tuple(tuple(row) for row in rows)


def coords_from_wedge(m: ratmat.Matrix) -> tuple[GaussianRational, ...]:
    return tuple(m[i][j] for i, j in _PAIRS)


def wedge_act_vector(g: ratmat.Matrix, coords: Sequence) -> tuple[GaussianRational, ...]:
    """Induced action on the six coordinates, with no quadric constraint.

    Useful off the quadric too: the Klein form picks up exactly det(g).
    """
    if ratmat.shape(g) != (4, 4):
        raise ShapeMismatchError("expected a 4x4 matrix")
    moved = ratmat.mul(ratmat.mul(g, wedge_matrix(coords)), ratmat.transpose(g))
    return coords_from_wedge(moved)


def wedge_act(g: ratmat.Matrix, p: PluckerPoint) -> PluckerPoint:
    if ratmat.det(g).is_zero():
        raise NotInvertibleError("wedge action needs an invertible matrix")
    return PluckerPoint(wedge_act_vector(g, p.y))


# ---------------------------------------------------------------------------
# stratification and the big-cell chart


def cone_region(p: PluckerPoint) -> str:
    """Which stratum a quadric point lies in.

    y12 != 0 is the big cell.  On its complement the relation degenerates
    to y23 y14 + y31 y24 = 0: points with y34 != 0 form the affine cone
    over that smaller quadric, the rest are the projective quadric itself.
    """
    if not p.y[0].is_zero():
        return BIG_CELL
    if not p.y[5].is_zero():
        return AFFINE_CONE
    return PROJECTIVE_QUADRIC


def chart(p: PluckerPoint) -> ratmat.Matrix:
    """2x2 chart of a big-cell point: [[-y23, -y31], [-y24, y14]] / y12."""
    if p.y[0].is_zero():
        raise NotInBigCellError("chart needs y12 != 0")
    y12, y23, y31, y14, y24, _ = p.y
    inv = y12.inverse()
    return ratmat.mat(
        [[-y23 * inv, -y31 * inv], [-y24 * inv, y14 * inv]]
    )


def from_chart(a: Sequence[Sequence]) -> PluckerPoint:
    m = ratmat.mat(a)
    if ratmat.shape(m) != (2, 2):
        raise ShapeMismatchError("expected a 2x2 chart matrix")
    return PluckerPoint(
        (
            GaussianRational(1),
            -m[0][0],
            -m[0][1],
            m[1][1],
            -m[1][0],
            ratmat.det(m),
        )
    )


def plane_from_chart(a: Sequence[Sequence]) -> Plane:
    m = ratmat.mat(a)
    if ratmat.shape(m) != (2, 2):
        raise ShapeMismatchError("expected a 2x2 chart matrix")
    one = GaussianRational(1)
    zero = GaussianRational(0)
    return Plane(((one, zero), (zero, one), m[0], m[1]))


# ---------------------------------------------------------------------------
# conjugation and the real quadric


def theta_point(p: PluckerPoint) -> PluckerPoint:
    """Conjugate coordinates and swap the y31 and y24 slots.

    Preserves the quadric; on big-cell charts it acts as A -> A~, so the
    fixed charts are exactly the hermitian 2x2 matrices.
    """
    c = [v.conjugate() for v in p.y]
    return PluckerPoint((c[0], c[1], c[4], c[3], c[2], c[5]))


def real_klein_matrix() -> list[list[Fraction]]:
    """Gram matrix of the real form of the Klein quadratic form.

    On conjugation-fixed points the coordinates (y12, y23, y14, y34) are
    real and y24 = u + iv determines y31 = u - iv, so the form becomes
    y12 y34 + y23 y14 + u^2 + v^2 in the six real variables
    (y12, y23, y14, y34, u, v).
    """
    m = [[Fraction(0)] * 6 for _ in range(6)]
    m[0][3] = m[3][0] = Fraction(1, 2)
    m[1][2] = m[2][1] = Fraction(1, 2)
    m[4][4] = Fraction(1)
    m[5][5] = Fraction(1)
    return m


def real_klein_signature() -> tuple[int, int]:
    return ratmat.symmetric_signature(real_klein_matrix())


# ---------------------------------------------------------------------------
# lower triangular group action on the big cell


def _square(m: ratmat.Matrix, n: int, what: str) -> ratmat.Matrix:
    if ratmat.shape(m) != (n, n):
        raise ShapeMismatchError(f"{what} must be {n}x{n}")
    return m


@dataclass(frozen=True)
class PoincareElement:
    """Block lower triangular element [[L, 0], [NL, R]] with L, R invertible."""

    l_block: ratmat.Matrix
    r_block: ratmat.Matrix
    translation: ratmat.Matrix

    def __post_init__(self):
        object.__setattr__(self, "l_block", _square(ratmat.mat(self.l_block), 2, "L"))
        object.__setattr__(self, "r_block", _square(ratmat.mat(self.r_block), 2, "R"))
        object.__setattr__(
            self, "translation", _square(ratmat.mat(self.translation), 2, "N")
        )
        if ratmat.det(self.l_block).is_zero() or ratmat.det(self.r_block).is_zero():
            raise NotInvertibleError("L and R must be invertible")

    def matrix(self) -> ratmat.Matrix:
        nl = ratmat.mul(self.translation, self.l_block)
        rows = []
        for i in range(2):
            rows.append(tuple(self.l_block[i]) + (GaussianRational(0),) * 2)
        for i in range(2):
            rows.append(tuple(nl[i]) + tuple(self.r_block[i]))
        return tuple(rows)

    @classmethod
    def from_matrix(cls, m: Sequence[Sequence]) -> "PoincareElement":
        g = ratmat.mat(m)
        if ratmat.shape(g) != (4, 4):
            raise ShapeMismatchError("expected a 4x4 matrix")
        if any(not g[i][j].is_zero() for i in range(2) for j in range(2, 4)):
            raise PatternError("upper right block must vanish")
        l_block = tuple(row[:2] for row in g[:2])
        r_block = tuple(row[2:] for row in g[2:])
        nl = tuple(row[:2] for row in g[2:])
        if ratmat.det(l_block).is_zero():
            raise NotInvertibleError("L must be invertible")
        translation = ratmat.mul(nl, ratmat.inverse(l_block))
        return cls(l_block, r_block, translation)

    def compose(self, other: "PoincareElement") -> "PoincareElement":
        return PoincareElement.from_matrix(ratmat.mul(self.matrix(), other.matrix()))

    def inverse(self) -> "PoincareElement":
        return PoincareElement.from_matrix(ratmat.inverse(self.matrix()))


def poincare_act(h: PoincareElement, a: Sequence[Sequence]) -> ratmat.Matrix:
    """Chart form of the action: A -> N + R A L^-1."""
    m = _square(ratmat.mat(a), 2, "chart")
    return ratmat.add(
        h.translation,
        ratmat.mul(ratmat.mul(h.r_block, m), ratmat.inverse(h.l_block)),
    )


@dataclass(frozen=True)
class RealPoincareElement:
    """Real form of the big-cell action: R is forced to L~^-1 and the
    translation must be hermitian, so hermitian charts stay hermitian."""

    l_block: ratmat.Matrix
    translation: ratmat.Matrix

    def __post_init__(self):
        object.__setattr__(self, "l_block", _square(ratmat.mat(self.l_block), 2, "L"))
        object.__setattr__(
            self, "translation", _square(ratmat.mat(self.translation), 2, "N")
        )
        if ratmat.det(self.l_block).is_zero():
            raise NotInvertibleError("L must be invertible")
        if not ratmat.is_hermitian(self.translation):
            raise NonHermitianTranslationError("translation must be hermitian")

    def complex_element(self) -> PoincareElement:
        return PoincareElement(
            self.l_block,
            ratmat.inverse(ratmat.dagger(self.l_block)),
            self.translation,
        )


def real_poincare_act(h: RealPoincareElement, a: Sequence[Sequence]) -> ratmat.Matrix:
    """A -> N + L~^-1 A L^-1; maps hermitian charts to hermitian charts."""
    return poincare_act(h.complex_element(), a)
