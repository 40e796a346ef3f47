"""Small dense matrices of Gaussian rationals, stored as nested tuples.

Used wherever the classical (non super) story needs exact linear algebra:
2x2 Lorentz factors, 4x2 plane bases, the wedge-square action, signature
computations.  Everything is over the field of Gaussian rationals, so
determinants, adjugates and ranks are exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import NotInvertibleError, ShapeMismatchError
from .grassmann import GR_ONE, GR_ZERO, GaussianRational

Matrix = tuple[tuple[GaussianRational, ...], ...]


def mat(rows: Sequence[Sequence]) -> Matrix:
    out = tuple(tuple(GaussianRational.coerce(v) for v in row) for row in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ShapeMismatchError("ragged rows")
    return out


def shape(a: Matrix) -> tuple[int, int]:
    return (len(a), len(a[0]) if a else 0)


def zeros(r: int, c: int) -> Matrix:
    return tuple(tuple(GR_ZERO for _ in range(c)) for _ in range(r))


def identity(n: int) -> Matrix:
    return tuple(
        tuple(GR_ONE if i == j else GR_ZERO for j in range(n)) for i in range(n)
    )


def add(a: Matrix, b: Matrix) -> Matrix:
    if shape(a) != shape(b):
        raise ShapeMismatchError(f"cannot add {shape(a)} and {shape(b)}")
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def sub(a: Matrix, b: Matrix) -> Matrix:
    if shape(a) != shape(b):
        raise ShapeMismatchError(f"cannot subtract {shape(a)} and {shape(b)}")
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in row) for row in a)


def scale(c, a: Matrix) -> Matrix:
    c = GaussianRational.coerce(c)
    return tuple(tuple(c * x for x in row) for row in a)


def mul(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise ShapeMismatchError(f"cannot multiply {shape(a)} by {shape(b)}")
    return tuple(
        tuple(
            sum((a[i][k] * b[k][j] for k in range(ca)), GR_ZERO)
            for j in range(cb)
        )
        for i in range(ra)
    )


def transpose(a: Matrix) -> Matrix:
    r, c = shape(a)
    return tuple(tuple(a[i][j] for i in range(r)) for j in range(c))


def dagger(a: Matrix) -> Matrix:
    """Conjugate transpose."""
    r, c = shape(a)
    return tuple(tuple(a[i][j].conjugate() for i in range(r)) for j in range(c))


def conjugate(a: Matrix) -> Matrix:
    return tuple(tuple(x.conjugate() for x in row) for row in a)


def det(a: Matrix) -> GaussianRational:
    r, c = shape(a)
    if r != c:
        raise ShapeMismatchError("determinant of a non-square matrix")
    if r == 0:
        return GR_ONE
    if r == 1:
        return a[0][0]
    if r == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = GR_ZERO
    for j in range(c):
        if a[0][j].is_zero():
            continue
        minor = tuple(row[:j] + row[j + 1 :] for row in a[1:])
        term = a[0][j] * det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def adjugate(a: Matrix) -> Matrix:
    n, c = shape(a)
    if n != c:
        raise ShapeMismatchError("adjugate of a non-square matrix")
    if n == 1:
        return ((GR_ONE,),)
    cof = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = tuple(
                tuple(a[r][s] for s in range(n) if s != j) for r in range(n) if r != i
            )
            m = det(minor)
            row.append(m if (i + j) % 2 == 0 else -m)
        cof.append(tuple(row))
    return transpose(tuple(cof))


def inverse(a: Matrix) -> Matrix:
    d = det(a)
    if d.is_zero():
        raise NotInvertibleError("matrix determinant is zero")
    return scale(d.inverse(), adjugate(a))


def rank(a: Matrix) -> int:
    rows = [list(row) for row in a]
    r, c = shape(a)
    rk = 0
    col = 0
    for col in range(c):
        pivot = None
        for i in range(rk, r):
            if not rows[i][col].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        inv = rows[rk][col].inverse()
        rows[rk] = [inv * v for v in rows[rk]]
        for i in range(r):
            if i != rk and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[rk])]
        rk += 1
        if rk == r:
            break
    return rk


def eq(a: Matrix, b: Matrix) -> bool:
    return shape(a) == shape(b) and all(
        x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb)
    )


def is_zero(a: Matrix) -> bool:
    return all(x.is_zero() for row in a for x in row)


def is_hermitian(a: Matrix) -> bool:
    return eq(a, dagger(a))


def is_skew_hermitian(a: Matrix) -> bool:
    return eq(a, neg(dagger(a)))


def symmetric_signature(a: Sequence[Sequence[Fraction]]) -> tuple[int, int]:
    """Signature (positives, negatives) of a rational symmetric matrix.

    Exact congruence diagonalization: pivot on nonzero diagonal entries,
    and when the diagonal is all zero against a nonzero off-diagonal pair,
    add one row/column into the other to expose a pivot.
    """
    m = [[Fraction(v) for v in row] for row in a]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ShapeMismatchError("signature needs a square matrix")
    if any(m[i][j] != m[j][i] for i in range(n) for j in range(n)):
        raise ShapeMismatchError("signature needs a symmetric matrix")
    pos = neg_count = 0
    live = list(range(n))
    while live:
        pivot = next((i for i in live if m[i][i] != 0), None)
        if pivot is None:
            pair = next(
                ((i, j) for i in live for j in live if i != j and m[i][j] != 0), None
            )
            if pair is None:
                break  # remaining block is zero
            i, j = pair
            for k in range(n):
                m[i][k] += m[j][k]
            for k in range(n):
                m[k][i] += m[k][j]
            pivot = i
        p = m[pivot][pivot]
        if p > 0:
            pos += 1
        else:
            neg_count += 1
        live.remove(pivot)
        for i in live:
            f = m[i][pivot] / p
            if f == 0:
                continue
            for k in range(n):
                m[i][k] -= f * m[pivot][k]
            for k in range(n):
                m[k][i] -= f * m[k][pivot]
    return (pos, neg_count)
