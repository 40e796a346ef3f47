"""Block matrices over a Grassmann algebra.

A SuperMatrix of shape m|n is an (m+n)x(m+n) array of supernumbers split
into blocks p (m x m), q (m x n), r (n x m), s (n x n).  Declared parity
"even" requires even entries on p,s and odd entries on q,r; "odd" reverses
that; "inhomogeneous" is an unconstrained container.

Multiplication is plain matrix multiplication over the algebra (sign rules
live in the entries).  Supertrace, Berezinian, exact block inverse and the
conjugate transpose are provided.  The Berezinian is
det(p - q s^-1 r) * det(s)^-1, with determinants over the commutative even
subalgebra; a rejected variant without the Schur inverse is kept private
as a regression target.

Module level block_* helpers operate on bare nested tuples of supernumbers
and serve the rectangular block algebra the flag modules need.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import (
    AlgebraMismatchError,
    NotInvertibleError,
    ParityError,
    ShapeMismatchError,
    StructureError,
)
from .grassmann import GaussianRational, GrassmannAlgebra, Parity, SuperNumber

EVEN = "even"
ODD = "odd"
INHOMOGENEOUS = "inhomogeneous"
_PARITIES = (EVEN, ODD, INHOMOGENEOUS)

Block = tuple[tuple[SuperNumber, ...], ...]


class BlockShape(NamedTuple):
    m: int
    n: int

    @property
    def size(self) -> int:
        return self.m + self.n


# ---------------------------------------------------------------------------
# bare block helpers


def block(rows: Sequence[Sequence[SuperNumber]]) -> Block:
    return tuple(tuple(row) for row in rows)


def block_shape(a: Block) -> tuple[int, int]:
    return (len(a), len(a[0]) if a else 0)


def block_zero(algebra: GrassmannAlgebra, r: int, c: int) -> Block:
    z = algebra.zero()
    return tuple(tuple(z for _ in range(c)) for _ in range(r))


def block_identity(algebra: GrassmannAlgebra, n: int) -> Block:
    one, zero = algebra.one(), algebra.zero()
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def block_add(a: Block, b: Block) -> Block:
    if block_shape(a) != block_shape(b):
        raise ShapeMismatchError("block shapes differ")
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def block_sub(a: Block, b: Block) -> Block:
    if block_shape(a) != block_shape(b):
        raise ShapeMismatchError("block shapes differ")
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def block_neg(a: Block) -> Block:
    return tuple(tuple(-x for x in row) for row in a)


def block_mul(a: Block, b: Block) -> Block:
    ra, ca = block_shape(a)
    rb, cb = block_shape(b)
    if ca != rb:
        raise ShapeMismatchError(f"cannot multiply blocks {block_shape(a)} by {block_shape(b)}")
    out = []
    for i in range(ra):
        row = []
        for j in range(cb):
            acc = None
            for k in range(ca):
                term = a[i][k] * b[k][j]
                acc = term if acc is None else acc + term
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def block_scale_left(s: SuperNumber, a: Block) -> Block:
    return tuple(tuple(s * x for x in row) for row in a)


def block_scale_right(a: Block, s: SuperNumber) -> Block:
    return tuple(tuple(x * s for x in row) for row in a)


def block_dagger(a: Block) -> Block:
    """Conjugate transpose: entry (i,j) is bar of entry (j,i), no signs."""
    r, c = block_shape(a)
    return tuple(tuple(a[i][j].bar() for i in range(r)) for j in range(c))


def block_transpose(a: Block) -> Block:
    r, c = block_shape(a)
    return tuple(tuple(a[i][j] for i in range(r)) for j in range(c))


def block_is_zero(a: Block) -> bool:
    return all(x.is_zero() for row in a for x in row)


def block_eq(a: Block, b: Block) -> bool:
    return block_shape(a) == block_shape(b) and all(
        x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb)
    )


def block_det(a: Block) -> SuperNumber:
    """Determinant of a square block with entries in the commutative even
    subalgebra, by minor expansion (intended for sizes up to 4)."""
    n, c = block_shape(a)
    if n != c:
        raise ShapeMismatchError("determinant of a non-square block")
    if n == 0:
        raise StructureError("empty block has no determinant here")
    for row in a:
        for x in row:
            if x.parity() not in (Parity.EVEN,):
                raise ParityError("determinant needs even (commuting) entries")
    return _det_even(a)


def _det_even(a: Block) -> SuperNumber:
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = None
    for j in range(n):
        if a[0][j].is_zero():
            continue
        minor = tuple(row[:j] + row[j + 1 :] for row in a[1:])
        term = a[0][j] * _det_even(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else a[0][0].algebra.zero()


def block_inverse_even(a: Block) -> Block:
    """Inverse of a square block with even entries, via adjugate / det."""
    n, c = block_shape(a)
    if n != c:
        raise ShapeMismatchError("inverse of a non-square block")
    d = block_det(a)
    dinv = d.inverse()  # raises NotInvertibleError on zero body
    if n == 1:
        return ((dinv,),)
    cof = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = tuple(
                tuple(a[r][s] for s in range(n) if s != j)
                for r in range(n)
                if r != i
            )
            m = _det_even(minor)
            row.append(m if (i + j) % 2 == 0 else -m)
        cof.append(tuple(row))
    adj = block_transpose(tuple(cof))
    return block_scale_right(adj, dinv)


def block_from_scalars(algebra: GrassmannAlgebra, rows: Sequence[Sequence]) -> Block:
    return tuple(
        tuple(
            v if isinstance(v, SuperNumber) else algebra.scalar(v) for v in row
        )
        for row in rows
    )


# ---------------------------------------------------------------------------
# the SuperMatrix type


class SuperMatrix:
    __slots__ = ("shape", "entries", "parity")

    def __init__(
        self,
        shape: BlockShape | tuple[int, int],
        entries: Sequence[Sequence[SuperNumber]],
        parity: str = INHOMOGENEOUS,
    ):
        shape = BlockShape(*shape)
        if shape.m < 0 or shape.n < 0 or shape.size == 0:
            raise ShapeMismatchError("block shape must have positive total size")
        if parity not in _PARITIES:
            raise ParityError(f"unknown parity {parity!r}")
        rows = tuple(tuple(row) for row in entries)
        size = shape.size
        if len(rows) != size or any(len(r) != size for r in rows):
            raise ShapeMismatchError(f"entries must form a {size}x{size} array")
        algebra = rows[0][0].algebra
        for row in rows:
            for e in row:
                if not isinstance(e, SuperNumber):
                    raise StructureError("entries must be supernumbers")
                if e.algebra != algebra:
                    raise AlgebraMismatchError("entries live in different algebras")
        if parity != INHOMOGENEOUS:
            self._check_layout(shape, rows, parity)
        self.shape = shape
        self.entries = rows
        self.parity = parity

    @staticmethod
    def _check_layout(shape: BlockShape, rows: Block, parity: str) -> None:
        for i in range(shape.size):
            for j in range(shape.size):
                slot_odd = (i >= shape.m) != (j >= shape.m)
                if parity == ODD:
                    slot_odd = not slot_odd
                p = rows[i][j].parity()
                if slot_odd:
                    if not (rows[i][j].is_zero() or p is Parity.ODD):
                        raise ParityError(f"entry ({i},{j}) must be odd")
                else:
                    if p is not Parity.EVEN:
                        raise ParityError(f"entry ({i},{j}) must be even")

    # -- constructors

    @classmethod
    def identity(cls, algebra: GrassmannAlgebra, m: int, n: int) -> "SuperMatrix":
        return cls((m, n), block_identity(algebra, m + n), EVEN)

    @classmethod
    def zeros(
        cls, algebra: GrassmannAlgebra, m: int, n: int, parity: str = EVEN
    ) -> "SuperMatrix":
        return cls((m, n), block_zero(algebra, m + n, m + n), parity)

    @classmethod
    def from_blocks(
        cls, shape: BlockShape | tuple[int, int], p: Block, q: Block, r: Block, s: Block,
        parity: str = EVEN,
    ) -> "SuperMatrix":
        shape = BlockShape(*shape)
        rows = []
        for i in range(shape.m):
            rows.append(tuple(p[i]) + tuple(q[i]))
        for i in range(shape.n):
            rows.append(tuple(r[i]) + tuple(s[i]))
        return cls(shape, rows, parity)

    # -- accessors

    @property
    def algebra(self) -> GrassmannAlgebra:
        return self.entries[0][0].algebra

    def __getitem__(self, key: tuple[int, int]) -> SuperNumber:
        i, j = key
        return self.entries[i][j]

    def sub(self, rows: Sequence[int], cols: Sequence[int]) -> Block:
        return tuple(tuple(self.entries[i][j] for j in cols) for i in rows)

    def four_blocks(self) -> tuple[Block, Block, Block, Block]:
        m, n = self.shape
        top = range(m)
        bot = range(m, m + n)
        return (
            self.sub(top, top),
            self.sub(top, bot),
            self.sub(bot, top),
            self.sub(bot, bot),
        )

    # -- arithmetic

    def _require_same_shape(self, other: "SuperMatrix") -> None:
        if not isinstance(other, SuperMatrix):
            raise StructureError("expected a SuperMatrix")
        if self.shape != other.shape:
            raise ShapeMismatchError(f"shapes {self.shape} and {other.shape} differ")
        if self.algebra != other.algebra:
            raise AlgebraMismatchError("matrices live in different algebras")

    @staticmethod
    def _combine_parity(a: str, b: str) -> str:
        if a == INHOMOGENEOUS or b == INHOMOGENEOUS:
            return INHOMOGENEOUS
        return EVEN if a == b else ODD

    def __add__(self, other):
        self._require_same_shape(other)
        parity = self.parity if self.parity == other.parity else INHOMOGENEOUS
        return SuperMatrix(self.shape, block_add(self.entries, other.entries), parity)

    def __sub__(self, other):
        self._require_same_shape(other)
        parity = self.parity if self.parity == other.parity else INHOMOGENEOUS
        return SuperMatrix(self.shape, block_sub(self.entries, other.entries), parity)

    def __neg__(self):
        return SuperMatrix(self.shape, block_neg(self.entries), self.parity)

    def __matmul__(self, other):
        self._require_same_shape(other)
        parity = self._combine_parity(self.parity, other.parity)
        return SuperMatrix(self.shape, block_mul(self.entries, other.entries), parity)

    def scale(self, s) -> "SuperMatrix":
        """Left multiplication by a scalar or supernumber."""
        if isinstance(s, (int, Fraction, GaussianRational)):
            s = self.algebra.scalar(s)
        sp = s.parity()
        if sp is Parity.EVEN:
            parity = self.parity
        elif sp is Parity.ODD:
            parity = self._combine_parity(ODD, self.parity)
        else:
            parity = INHOMOGENEOUS
        return SuperMatrix(self.shape, block_scale_left(s, self.entries), parity)

    def __mul__(self, s):
        return self.scale(s)

    __rmul__ = __mul__

    # -- super operations

    def supertrace(self) -> SuperNumber:
        """tr(p) - tr(s); requires declared even parity."""
        if self.parity != EVEN:
            raise ParityError("supertrace is defined on even supermatrices")
        m, n = self.shape
        acc = self.algebra.zero()
        for i in range(m):
            acc = acc + self.entries[i][i]
        for i in range(m, m + n):
            acc = acc - self.entries[i][i]
        return acc

    def berezinian(self) -> SuperNumber:
        """det(p - q s^-1 r) * det(s)^-1 over the even subalgebra.

        Requires declared even parity and invertible bodies for det(p) and
        det(s); the multiplicativity Ber(AB) = Ber(A) Ber(B) pins this form.
        """
        if self.parity != EVEN:
            raise ParityError("Berezinian is defined on even supermatrices")
        m, n = self.shape
        p, q, r, s = self.four_blocks()
        if n == 0:
            d = block_det(p)
            if d.body.is_zero():
                raise NotInvertibleError("matrix is not invertible")
            return d
        if m == 0:
            return block_det(s).inverse()
        det_s = block_det(s)
        det_p = block_det(p)
        if det_s.body.is_zero() or det_p.body.is_zero():
            raise NotInvertibleError("diagonal block determinant has zero body")
        s_inv = block_inverse_even(s)
        core = block_sub(p, block_mul(block_mul(q, s_inv), r))
        return _det_even(core) * det_s.inverse()

    def _berezinian_qsr(self) -> SuperNumber:
        # Rejected variant det(p - q s r) * det(s)^-1 (no Schur inverse).
        # Not multiplicative; kept so a regression test can prove why the
        # s^-1 in the Schur term is required.
        if self.parity != EVEN:
            raise ParityError("Berezinian is defined on even supermatrices")
        m, n = self.shape
        p, q, r, s = self.four_blocks()
        if n == 0:
            return block_det(p)
        if m == 0:
            return block_det(s).inverse()
        det_s = block_det(s)
        det_p = block_det(p)
        if det_s.body.is_zero() or det_p.body.is_zero():
            raise NotInvertibleError("diagonal block determinant has zero body")
        core = block_sub(p, block_mul(block_mul(q, s), r))
        return _det_even(core) * det_s.inverse()

    def inverse(self) -> "SuperMatrix":
        """Exact two-sided inverse via the Schur complement.

        Requires declared even parity; the bodies of det(p) and det(s) must
        be nonzero, which for even matrices is exactly invertibility.
        """
        if self.parity != EVEN:
            raise ParityError("inverse implemented for even supermatrices")
        m, n = self.shape
        p, q, r, s = self.four_blocks()
        if n == 0:
            return SuperMatrix(self.shape, block_inverse_even(p), EVEN)
        if m == 0:
            return SuperMatrix(self.shape, block_inverse_even(s), EVEN)
        try:
            p_inv = block_inverse_even(p)
        except NotInvertibleError:
            raise NotInvertibleError("matrix is not invertible (p block)") from None
        schur = block_sub(s, block_mul(block_mul(r, p_inv), q))
        try:
            schur_inv = block_inverse_even(schur)
        except NotInvertibleError:
            raise NotInvertibleError("matrix is not invertible (s block)") from None
        pq = block_mul(p_inv, q)
        rp = block_mul(r, p_inv)
        top_left = block_add(p_inv, block_mul(block_mul(pq, schur_inv), rp))
        top_right = block_neg(block_mul(pq, schur_inv))
        bot_left = block_neg(block_mul(schur_inv, rp))
        return SuperMatrix.from_blocks(self.shape, top_left, top_right, bot_left, schur_inv, EVEN)

    def dagger(self) -> "SuperMatrix":
        """Blockwise conjugate transpose; entry (i,j) is bar of entry (j,i)."""
        return SuperMatrix(self.shape, block_dagger(self.entries), self.parity)

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return (
            self.shape == other.shape
            and self.parity == other.parity
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.shape, self.parity, self.entries))

    def __str__(self):
        rows = [" | ".join(str(e) for e in row) for row in self.entries]
        return "\n".join(rows)

    def __repr__(self):
        m, n = self.shape
        return f"<SuperMatrix {m}|{n} {self.parity}>"
