"""JSON forms for every value the command line reads or writes.

Fractions are strings "p/q" in lowest terms with an explicit denominator.
Grassmann monomials are bitstrings of length q whose k-th character (from
the left, 0-based) marks generator x(k+1).  Term lists are sorted by mask
and never contain zero coefficients, and dumps() sorts object keys, so
equal values serialize to identical text.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Sequence

from . import ratmat
from .errors import InputFormatError, MathDomainError
from .geometry import Plane, PluckerPoint, PoincareElement, RealPoincareElement
from .grassmann import GaussianRational, GrassmannAlgebra, SuperNumber
from .superflag import BigCellPoint, SuperPoincareElement
from .supermatrix import EVEN, INHOMOGENEOUS, ODD, BlockShape, SuperMatrix


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"invalid JSON: {exc}") from None


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise InputFormatError(msg)


def _field(obj: Any, key: str) -> Any:
    _expect(isinstance(obj, dict), f"expected an object with field {key!r}")
    _expect(key in obj, f"missing field {key!r}")
    return obj[key]


# -- fractions and Gaussian rationals


def fraction_to_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def fraction_from_str(s: Any) -> Fraction:
    _expect(isinstance(s, (str, int)), f"expected a fraction string, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputFormatError(f"bad fraction {s!r}: {exc}") from None


def gr_to_obj(c: GaussianRational) -> dict:
    return {"re": fraction_to_str(c.re), "im": fraction_to_str(c.im)}


def gr_from_obj(obj: Any) -> GaussianRational:
    return GaussianRational(
        fraction_from_str(_field(obj, "re")), fraction_from_str(_field(obj, "im"))
    )


# -- supernumbers


def mask_to_bits(mask: int, q: int) -> str:
    return "".join("1" if mask >> k & 1 else "0" for k in range(q))


def mask_from_bits(s: Any, q: int) -> int:
    _expect(isinstance(s, str), f"expected a mask bitstring, got {s!r}")
    _expect(len(s) == q and set(s) <= {"0", "1"}, f"mask {s!r} is not {q} bits")
    mask = 0
    for k, ch in enumerate(s):
        if ch == "1":
            mask |= 1 << k
    return mask


def supernumber_to_obj(x: SuperNumber) -> dict:
    q = x.algebra.q
    terms = [
        {"mask": mask_to_bits(mask, q), "re": fraction_to_str(c.re), "im": fraction_to_str(c.im)}
        for mask, c in sorted(x.terms.items())
    ]
    return {"q": q, "pairing": list(x.algebra.pairing), "terms": terms}


def algebra_from_obj(obj: Any) -> GrassmannAlgebra:
    q = _field(obj, "q")
    _expect(isinstance(q, int) and q >= 0, "q must be a nonnegative integer")
    pairing = _field(obj, "pairing")
    _expect(
        isinstance(pairing, list) and all(isinstance(k, int) for k in pairing),
        "pairing must be a list of integers",
    )
    try:
        return GrassmannAlgebra(q, pairing)
    except Exception as exc:
        raise InputFormatError(str(exc)) from None


def supernumber_from_obj(obj: Any, algebra: GrassmannAlgebra | None = None) -> SuperNumber:
    found = algebra_from_obj(obj)
    if algebra is not None:
        _expect(found == algebra, "supernumber declares a different algebra")
    terms: dict[int, GaussianRational] = {}
    raw = _field(obj, "terms")
    _expect(isinstance(raw, list), "terms must be a list")
    for t in raw:
        mask = mask_from_bits(_field(t, "mask"), found.q)
        _expect(mask not in terms, "duplicate mask in terms")
        terms[mask] = GaussianRational(
            fraction_from_str(_field(t, "re")), fraction_from_str(_field(t, "im"))
        )
    return SuperNumber(found, terms)


# -- supermatrices


def supermatrix_to_obj(a: SuperMatrix) -> dict:
    return {
        "m": a.shape.m,
        "n": a.shape.n,
        "parity": a.parity,
        "entries": [[supernumber_to_obj(e) for e in row] for row in a.entries],
    }


def supermatrix_from_obj(obj: Any) -> SuperMatrix:
    m = _field(obj, "m")
    n = _field(obj, "n")
    parity = _field(obj, "parity")
    _expect(isinstance(m, int) and isinstance(n, int), "m and n must be integers")
    _expect(parity in (EVEN, ODD, INHOMOGENEOUS), f"unknown parity {parity!r}")
    raw = _field(obj, "entries")
    _expect(isinstance(raw, list) and raw, "entries must be a nonempty 2D list")
    first = supernumber_from_obj(_field_at(raw, 0, 0))
    algebra = first.algebra
    rows = []
    for r in raw:
        _expect(isinstance(r, list), "entries must be a 2D list")
        rows.append([supernumber_from_obj(e, algebra) for e in r])
    try:
        return SuperMatrix(BlockShape(m, n), rows, parity)
    except InputFormatError:
        raise
    except Exception as exc:
        raise InputFormatError(str(exc)) from None


def _field_at(rows: list, i: int, j: int) -> Any:
    _expect(len(rows) > i and isinstance(rows[i], list) and len(rows[i]) > j,
            "entries must be a 2D list")
    return rows[i][j]


# -- plain complex matrices


def ratmatrix_to_obj(a: ratmat.Matrix) -> list:
    return [[gr_to_obj(v) for v in row] for row in a]


def ratmatrix_from_obj(obj: Any, rows: int | None = None, cols: int | None = None) -> ratmat.Matrix:
    _expect(isinstance(obj, list) and obj, "expected a 2D list")
    out = []
    for row in obj:
        _expect(isinstance(row, list), "expected a 2D list")
        out.append(tuple(gr_from_obj(v) for v in row))
    m = tuple(out)
    r, c = ratmat.shape(m)
    if rows is not None:
        _expect(r == rows and c == cols, f"expected a {rows}x{cols} matrix")
    return m


# -- geometry


def plane_to_obj(p: Plane) -> dict:
    return {"entries": ratmatrix_to_obj(p.entries)}


def plane_from_obj(obj: Any) -> Plane:
    return Plane(ratmatrix_from_obj(_field(obj, "entries"), 4, 2))


def plucker_to_obj(p: PluckerPoint) -> dict:
    return {"y": [gr_to_obj(c) for c in p.y]}


def plucker_from_obj(obj: Any) -> PluckerPoint:
    raw = _field(obj, "y")
    _expect(isinstance(raw, list) and len(raw) == 6, "y must be a list of six values")
    return PluckerPoint(tuple(gr_from_obj(c) for c in raw))


def poincare_to_obj(h: PoincareElement) -> dict:
    return {
        "L": ratmatrix_to_obj(h.l_block),
        "R": ratmatrix_to_obj(h.r_block),
        "N": ratmatrix_to_obj(h.translation),
    }


def poincare_from_obj(obj: Any) -> PoincareElement:
    return PoincareElement(
        ratmatrix_from_obj(_field(obj, "L"), 2, 2),
        ratmatrix_from_obj(_field(obj, "R"), 2, 2),
        ratmatrix_from_obj(_field(obj, "N"), 2, 2),
    )


def real_poincare_to_obj(h: RealPoincareElement) -> dict:
    return {
        "L": ratmatrix_to_obj(h.l_block),
        "N": ratmatrix_to_obj(h.translation),
    }


def real_poincare_from_obj(obj: Any) -> RealPoincareElement:
    return RealPoincareElement(
        ratmatrix_from_obj(_field(obj, "L"), 2, 2),
        ratmatrix_from_obj(_field(obj, "N"), 2, 2),
    )


# -- the super flag


def _block_to_obj(blk) -> list:
    return [[supernumber_to_obj(e) for e in row] for row in blk]


def _block_from_obj(obj: Any, rows: int, cols: int, algebra: GrassmannAlgebra | None):
    _expect(
        isinstance(obj, list)
        and len(obj) == rows
        and all(isinstance(r, list) and len(r) == cols for r in obj),
        f"expected a {rows}x{cols} block",
    )
    out = []
    for r in obj:
        row = []
        for e in r:
            x = supernumber_from_obj(e, algebra)
            algebra = x.algebra
            row.append(x)
        out.append(tuple(row))
    return tuple(out), algebra


def bigcell_to_obj(pt: BigCellPoint) -> dict:
    return {
        "A": _block_to_obj(pt.a_block),
        "alpha": _block_to_obj(pt.alpha),
        "beta": _block_to_obj(pt.beta),
    }


def bigcell_from_obj(obj: Any) -> BigCellPoint:
    a_blk, algebra = _block_from_obj(_field(obj, "A"), 2, 2, None)
    alpha, algebra = _block_from_obj(_field(obj, "alpha"), 1, 2, algebra)
    beta, _ = _block_from_obj(_field(obj, "beta"), 2, 1, algebra)
    try:
        return BigCellPoint(a_blk, alpha, beta)
    except (InputFormatError, MathDomainError):
        raise
    except Exception as exc:
        raise InputFormatError(str(exc)) from None


def superpoincare_to_obj(h: SuperPoincareElement) -> dict:
    return {
        "L": _block_to_obj(h.l_block),
        "R": _block_to_obj(h.r_block),
        "N": _block_to_obj(h.translation),
        "chi": _block_to_obj(h.chi),
        "varphi": _block_to_obj(h.varphi),
        "d": supernumber_to_obj(h.d),
    }


def superpoincare_from_obj(obj: Any) -> SuperPoincareElement:
    l_blk, algebra = _block_from_obj(_field(obj, "L"), 2, 2, None)
    r_blk, algebra = _block_from_obj(_field(obj, "R"), 2, 2, algebra)
    n_blk, algebra = _block_from_obj(_field(obj, "N"), 2, 2, algebra)
    chi, algebra = _block_from_obj(_field(obj, "chi"), 2, 1, algebra)
    varphi, algebra = _block_from_obj(_field(obj, "varphi"), 1, 2, algebra)
    d = supernumber_from_obj(_field(obj, "d"), algebra)
    try:
        return SuperPoincareElement(l_blk, r_blk, n_blk, chi, varphi, d)
    except (InputFormatError, MathDomainError):
        raise
    except Exception as exc:
        raise InputFormatError(str(exc)) from None
