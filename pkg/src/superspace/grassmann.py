"""Exact arithmetic in finite dimensional Grassmann algebras.

Scalars are Gaussian rationals: complex numbers with rational real and
imaginary parts, kept exact through fractions.Fraction.  A supernumber is
an element of the exterior algebra on q anticommuting generators x1..xq
over that field, stored as a sparse map from generator bitmasks to
coefficients.  Every operation here is exact; nothing ever rounds.

The algebra carries an involutive pairing of its generators.  The induced
conjugation ("bar") conjugates coefficients, sends each generator to its
partner without reversing factor order, and then reorders the product into
canonical ascending index order, picking up the permutation sign.  With
that convention bar is multiplicative: bar(a*b) = bar(a)*bar(b).
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import AlgebraMismatchError, NotInvertibleError, StructureError

ScalarLike = Union[int, Fraction, "GaussianRational"]


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"
    MIXED = "mixed"


class GaussianRational:
    """Exact complex number with Fraction real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction = 0, im: int | Fraction = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, value: ScalarLike) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise NotInvertibleError("division by zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __add__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        other = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.im == 1:
            imag = "i"
        elif self.im == -1:
            imag = "-i"
        else:
            imag = f"{self.im}i"
        if self.re == 0:
            return imag
        sign = "+" if self.im > 0 else "-"
        mag = "i" if abs(self.im) == 1 else f"{abs(self.im)}i"
        return f"{self.re}{sign}{mag}"

    def __repr__(self):
        return f"GaussianRational({self})"


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _merge_sign(a: int, b: int) -> int:
    # sign of moving each generator of b left past the higher generators of a
    swaps = 0
    rest = b
    while rest:
        low = rest & -rest
        rest ^= low
        swaps += (a >> low.bit_length()).bit_count()
    return -1 if swaps & 1 else 1


def _inversion_sign(seq: Sequence[int]) -> int:
    inv = 0
    for k in range(len(seq)):
        for l in range(k + 1, len(seq)):
            if seq[k] > seq[l]:
                inv += 1
    return -1 if inv & 1 else 1


class GrassmannAlgebra:
    """Exterior algebra on q generators with an involutive conjugation pairing.

    `pairing` is a 1-based permutation of {1..q}: generator k is conjugate
    to generator pairing[k-1].  Fixed points are "real" generators.  The
    default pairing is the identity (all generators real).
    """

    __slots__ = ("q", "pairing")

    def __init__(self, q: int, pairing: Sequence[int] | None = None):
        if q < 0:
            raise StructureError("generator count must be nonnegative")
        if pairing is None:
            pairing = tuple(range(1, q + 1))
        pairing = tuple(int(k) for k in pairing)
        if sorted(pairing) != list(range(1, q + 1)):
            raise StructureError("pairing must be a permutation of 1..q")
        for k, p in enumerate(pairing, start=1):
            if pairing[p - 1] != k:
                raise StructureError("pairing must be an involution")
        self.q = q
        self.pairing = pairing

    @classmethod
    def paired(cls, n: int) -> "GrassmannAlgebra":
        """Algebra on 2n generators with xk conjugate to x(n+k)."""
        pairing = tuple(range(n + 1, 2 * n + 1)) + tuple(range(1, n + 1))
        return cls(2 * n, pairing)

    def partner(self, k: int) -> int:
        if not 1 <= k <= self.q:
            raise StructureError(f"generator index {k} out of range 1..{self.q}")
        return self.pairing[k - 1]

    def extend(self, extra: int) -> "GrassmannAlgebra":
        """Same algebra with `extra` additional self-paired generators."""
        new = tuple(range(self.q + 1, self.q + extra + 1))
        return GrassmannAlgebra(self.q + extra, self.pairing + new)

    def scalar(self, value: ScalarLike) -> "SuperNumber":
        c = GaussianRational.coerce(value)
        return SuperNumber._raw(self, {} if c.is_zero() else {0: c})

    def zero(self) -> "SuperNumber":
        return SuperNumber._raw(self, {})

    def one(self) -> "SuperNumber":
        return SuperNumber._raw(self, {0: GR_ONE})

    def i(self) -> "SuperNumber":
        return SuperNumber._raw(self, {0: GR_I})

    def gen(self, k: int) -> "SuperNumber":
        if not 1 <= k <= self.q:
            raise StructureError(f"generator index {k} out of range 1..{self.q}")
        return SuperNumber._raw(self, {1 << (k - 1): GR_ONE})

    def gens(self) -> list["SuperNumber"]:
        return [self.gen(k) for k in range(1, self.q + 1)]

    def from_mask(self, mask: int, coeff: ScalarLike = 1) -> "SuperNumber":
        return SuperNumber(self, {mask: GaussianRational.coerce(coeff)})

    def monomial_masks(self) -> range:
        return range(1 << self.q)

    def __eq__(self, other):
        if not isinstance(other, GrassmannAlgebra):
            return NotImplemented
        return self.q == other.q and self.pairing == other.pairing

    def __hash__(self):
        return hash((self.q, self.pairing))

    def __repr__(self):
        return f"GrassmannAlgebra(q={self.q}, pairing={self.pairing})"


class SuperNumber:
    """Element of a Grassmann algebra, sparse over generator bitmasks.

    Bit k-1 of a mask marks generator xk.  Values are immutable; all
    operators return fresh objects.
    """

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: GrassmannAlgebra, terms: Mapping[int, ScalarLike]):
        clean: dict[int, GaussianRational] = {}
        limit = 1 << algebra.q
        for mask, coeff in terms.items():
            if not 0 <= mask < limit:
                raise StructureError(f"mask {mask} out of range for q={algebra.q}")
            c = GaussianRational.coerce(coeff)
            if not c.is_zero():
                clean[mask] = c
        self.algebra = algebra
        self._terms = clean

    @classmethod
    def _raw(cls, algebra: GrassmannAlgebra, terms: dict[int, GaussianRational]) -> "SuperNumber":
        # internal fast path: terms already canonical (no zeros, masks in range)
        obj = object.__new__(cls)
        obj.algebra = algebra
        obj._terms = terms
        return obj

    @property
    def terms(self) -> Mapping[int, GaussianRational]:
        return dict(self._terms)

    def coefficient(self, mask: int) -> GaussianRational:
        return self._terms.get(mask, GR_ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def body(self) -> GaussianRational:
        return self._terms.get(0, GR_ZERO)

    def soul(self) -> "SuperNumber":
        if 0 not in self._terms:
            return self
        return SuperNumber._raw(self.algebra, {m: c for m, c in self._terms.items() if m})

    def is_scalar(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def parity(self) -> Parity:
        """Z2 degree; the zero element counts as even."""
        saw_even = saw_odd = False
        for mask in self._terms:
            if mask.bit_count() & 1:
                saw_odd = True
            else:
                saw_even = True
        if saw_odd and saw_even:
            return Parity.MIXED
        if saw_odd:
            return Parity.ODD
        return Parity.EVEN

    def even_part(self) -> "SuperNumber":
        return SuperNumber._raw(
            self.algebra, {m: c for m, c in self._terms.items() if not m.bit_count() & 1}
        )

    def odd_part(self) -> "SuperNumber":
        return SuperNumber._raw(
            self.algebra, {m: c for m, c in self._terms.items() if m.bit_count() & 1}
        )

    def _coerce_operand(self, other) -> "SuperNumber | None":
        if isinstance(other, SuperNumber):
            if other.algebra != self.algebra:
                raise AlgebraMismatchError("operands live in different Grassmann algebras")
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.algebra.scalar(other)
        return None

    def __add__(self, other):
        rhs = self._coerce_operand(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for mask, c in rhs._terms.items():
            s = out.get(mask, GR_ZERO) + c
            if s.is_zero():
                out.pop(mask, None)
            else:
                out[mask] = s
        return SuperNumber._raw(self.algebra, out)

    __radd__ = __add__

    def __sub__(self, other):
        rhs = self._coerce_operand(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return SuperNumber._raw(self.algebra, {m: -c for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = GaussianRational.coerce(other)
            if c.is_zero():
                return self.algebra.zero()
            return SuperNumber._raw(self.algebra, {m: k * c for m, k in self._terms.items()})
        rhs = self._coerce_operand(other)
        if rhs is None:
            return NotImplemented
        if not self._terms or not rhs._terms:
            return self.algebra.zero()
        out: dict[int, GaussianRational] = {}
        for ma, ca in self._terms.items():
            for mb, cb in rhs._terms.items():
                if ma & mb:
                    continue  # repeated generator
                mask = ma | mb
                c = ca * cb
                if _merge_sign(ma, mb) < 0:
                    c = -c
                s = out.get(mask, GR_ZERO) + c
                if s.is_zero():
                    out.pop(mask, None)
                else:
                    out[mask] = s
        return SuperNumber._raw(self.algebra, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self * other  # scalars are central
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self * GaussianRational.coerce(other).inverse()
        rhs = self._coerce_operand(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise StructureError("powers must be nonnegative integers")
        acc = self.algebra.one()
        for _ in range(n):
            acc = acc * self
        return acc

    def inverse(self) -> "SuperNumber":
        """Exact inverse via the terminating Neumann series.

        The soul is nilpotent (soul^(q+1) = 0), so
        (b + s)^-1 = b^-1 (1 - s/b + (s/b)^2 - ...) with finitely many terms.
        Raises NotInvertibleError when the body vanishes.
        """
        b = self.body
        if b.is_zero():
            raise NotInvertibleError("supernumber has zero body")
        binv = b.inverse()
        step = self.soul() * (-binv)
        acc = self.algebra.one()
        power = self.algebra.one()
        for _ in range(self.algebra.q):
            power = power * step
            if power.is_zero():
                break
            acc = acc + power
        return acc * binv

    def bar(self) -> "SuperNumber":
        """Conjugation: conjugate coefficients, send generators through the
        pairing keeping factor order, then sort into canonical order with the
        permutation sign.  Multiplicative: bar(a*b) = bar(a)*bar(b)."""
        pairing = self.algebra.pairing
        out: dict[int, GaussianRational] = {}
        for mask, c in self._terms.items():
            mapped = [pairing[i] - 1 for i in _bits(mask)]
            new_mask = 0
            for i in mapped:
                new_mask |= 1 << i
            cc = c.conjugate()
            if _inversion_sign(mapped) < 0:
                cc = -cc
            out[new_mask] = cc
        return SuperNumber._raw(self.algebra, out)

    def promote(self, target: GrassmannAlgebra) -> "SuperNumber":
        """Reinterpret in a larger algebra whose pairing extends this one's."""
        if target.q < self.algebra.q or target.pairing[: self.algebra.q] != self.algebra.pairing:
            raise AlgebraMismatchError("target algebra does not extend this one")
        return SuperNumber._raw(target, dict(self._terms))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = self.algebra.scalar(other)
        if not isinstance(other, SuperNumber):
            return NotImplemented
        return self.algebra == other.algebra and self._terms == other._terms

    def __hash__(self):
        return hash((self.algebra, tuple(sorted((m, c.re, c.im) for m, c in self._terms.items()))))

    def _monomial_str(self, mask: int) -> str:
        return "*".join(f"x{i + 1}" for i in _bits(mask))

    def __str__(self):
        """Render in the expression grammar understood by exprparse."""
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for mask in sorted(self._terms):
            c = self._terms[mask]
            mono = self._monomial_str(mask)
            negative = False
            if c.im == 0 and c.re < 0:
                negative, c = True, -c
            elif c.re == 0 and c.im < 0:
                negative, c = True, -c
            if not mono:
                body = _coeff_str(c)
            elif c == GR_ONE:
                body = mono
            else:
                body = f"{_coeff_str(c)}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"SuperNumber({str(self)!r})"


def _coeff_str(c: GaussianRational) -> str:
    # printable within the expression grammar; mixed values get parentheses
    if c.im == 0:
        return str(c.re)
    if c.re == 0:
        if c.im == 1:
            return "i"
        if c.im == -1:
            return "-i"
        return f"{c.im}i"
    return f"({c})"


def same_algebra(values: Iterable[SuperNumber]) -> GrassmannAlgebra:
    """Common algebra of a nonempty collection, or raise."""
    algebra = None
    for v in values:
        if algebra is None:
            algebra = v.algebra
        elif v.algebra != algebra:
            raise AlgebraMismatchError("values live in different Grassmann algebras")
    if algebra is None:
        raise StructureError("empty collection has no algebra")
    return algebra
