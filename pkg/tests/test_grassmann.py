"""Grassmann number arithmetic: ring axioms, parity, conjugation, inverses."""

from fractions import Fraction
from random import Random

import pytest

from superspace.errors import AlgebraMismatchError, NotInvertibleError, StructureError
from superspace.grassmann import (
    GR_I,
    GR_ONE,
    GaussianRational,
    GrassmannAlgebra,
    Parity,
    SuperNumber,
)
from superspace.sampling import random_supernumber


def test_gaussian_rational_field_ops():
    a = GaussianRational(Fraction(1, 2), Fraction(3, 2))
    b = GaussianRational(Fraction(-2), Fraction(1, 3))
    assert a + b - b == a
    assert (a * b) / b == a
    assert a * a.inverse() == GR_ONE
    assert GR_I * GR_I == GaussianRational(-1)
    assert a.conjugate().conjugate() == a
    # |a|^2 = a * conj(a) is rational and positive
    norm = a * a.conjugate()
    assert norm.im == 0 and norm.re > 0


def test_gaussian_rational_zero_inverse_rejected():
    with pytest.raises(NotInvertibleError):
        GaussianRational(0).inverse()


def test_gaussian_rational_str():
    assert str(GaussianRational(Fraction(1, 2), Fraction(3, 2))) == "1/2+3/2i"
    assert str(GaussianRational(0, 1)) == "i"
    assert str(GaussianRational(0, -1)) == "-i"
    assert str(GaussianRational(-2)) == "-2"


def test_generators_anticommute_and_square_to_zero():
    alg = GrassmannAlgebra(5)
    gens = alg.gens()
    for a in gens:
        assert (a * a).is_zero()
        for b in gens:
            assert (a * b + b * a).is_zero()


def test_monomial_supercommutativity_exhaustive_small_q():
    """x_S x_T = (-1)^{|S||T|} x_T x_S over every monomial pair, q <= 4."""
    for q in range(5):
        alg = GrassmannAlgebra(q)
        monos = [alg.from_mask(m, GaussianRational(1)) for m in range(1 << q)]
        for a in monos:
            for b in monos:
                sign = -1 if (a.parity() is Parity.ODD and b.parity() is Parity.ODD) else 1
                assert a * b == sign * (b * a)


def test_monomial_associativity_exhaustive_q3():
    alg = GrassmannAlgebra(3)
    monos = [alg.from_mask(m, GaussianRational(1)) for m in range(8)]
    for a in monos:
        for b in monos:
            for c in monos:
                assert (a * b) * c == a * (b * c)


def test_ring_axioms_random_q8():
    rng = Random(101)
    alg = GrassmannAlgebra.paired(4)
    for _ in range(150):
        x = random_supernumber(rng, alg)
        y = random_supernumber(rng, alg)
        z = random_supernumber(rng, alg)
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert (y + z) * x == y * x + z * x
        assert x + alg.zero() == x
        assert x * alg.one() == x


def test_parity_split_and_multiplication():
    rng = Random(7)
    alg = GrassmannAlgebra(6)
    for _ in range(40):
        x = random_supernumber(rng, alg)
        y = random_supernumber(rng, alg)
        assert x == x.even_part() + x.odd_part()
        assert (x * y).even_part() == (
            x.even_part() * y.even_part() + x.odd_part() * y.odd_part()
        )
        assert (x * y).odd_part() == (
            x.even_part() * y.odd_part() + x.odd_part() * y.even_part()
        )
    assert alg.zero().parity() is Parity.EVEN
    assert alg.gen(1).parity() is Parity.ODD
    assert (alg.gen(1) * alg.gen(2)).parity() is Parity.EVEN
    assert (alg.one() + alg.gen(1)).parity() is Parity.MIXED


def test_body_soul_decomposition():
    alg = GrassmannAlgebra(4)
    x = alg.scalar(GaussianRational(Fraction(2, 3))) + alg.gen(1) * alg.gen(3)
    assert x.body == GaussianRational(Fraction(2, 3))
    assert x.soul() == alg.gen(1) * alg.gen(3)
    # souls are nilpotent: the q+1 power of any soul vanishes
    rng = Random(5)
    for _ in range(10):
        soul = random_supernumber(rng, alg).soul()
        power = alg.one()
        for _ in range(alg.q + 1):
            power = power * soul
        assert power.is_zero()


def test_neumann_inverse():
    rng = Random(11)
    alg = GrassmannAlgebra.paired(3)
    for _ in range(40):
        x = random_supernumber(rng, alg)
        if x.body.is_zero():
            x = x + alg.one()
        assert x * x.inverse() == alg.one()
        assert x.inverse() * x == alg.one()
    with pytest.raises(NotInvertibleError):
        (alg.gen(1) * alg.gen(2)).inverse()


def test_bar_is_involutive_ring_map_identity_pairing():
    rng = Random(3)
    alg = GrassmannAlgebra(5)
    for k in range(1, 6):
        assert alg.gen(k).bar() == alg.gen(k)
    for _ in range(60):
        x = random_supernumber(rng, alg)
        y = random_supernumber(rng, alg)
        assert x.bar().bar() == x
        assert (x * y).bar() == x.bar() * y.bar()
        assert (x + y).bar() == x.bar() + y.bar()


def test_bar_swaps_paired_generators():
    alg = GrassmannAlgebra.paired(2)
    x1, x2, x3, x4 = alg.gens()
    assert x1.bar() == x3
    assert x3.bar() == x1
    assert x2.bar() == x4
    # no order reversal: bar(x1 x2) = x3 x4, reordering handled by sign
    assert (x1 * x2).bar() == x3 * x4
    assert (x1 * x3).bar() == x3 * x1
    rng = Random(19)
    for _ in range(60):
        x = random_supernumber(rng, alg)
        y = random_supernumber(rng, alg)
        assert (x * y).bar() == x.bar() * y.bar()
        assert x.bar().bar() == x


def test_bar_conjugates_coefficients():
    alg = GrassmannAlgebra.paired(1)
    x = alg.scalar(GaussianRational(0, 1)) * alg.gen(1)
    assert x.bar() == alg.scalar(GaussianRational(0, -1)) * alg.gen(2)


def test_extend_adds_self_paired_generators():
    alg = GrassmannAlgebra.paired(2)
    ext = alg.extend(2)
    assert ext.q == 6
    assert ext.gen(5).bar() == ext.gen(5)
    assert ext.gen(6).bar() == ext.gen(6)
    # old pairing survives
    assert ext.gen(1).bar() == ext.gen(3)


def test_promote_and_algebra_mismatch():
    small = GrassmannAlgebra(2)
    big = small.extend(1)
    x = small.gen(1) + small.one()
    promoted = x.promote(big)
    assert promoted.algebra == big
    assert promoted.coefficient(0b01) == GaussianRational(1)
    with pytest.raises(AlgebraMismatchError):
        x + big.gen(3)


def test_scalar_coercion_equality():
    alg = GrassmannAlgebra(3)
    assert alg.scalar(Fraction(1, 2)) + alg.scalar(Fraction(1, 2)) == 1
    assert alg.one() * 5 == 5
    assert alg.zero() == 0
    assert alg.i() * alg.i() == -1


def test_monomial_str_forms():
    alg = GrassmannAlgebra(4)
    x1, x2, x3, x4 = alg.gens()
    assert str(alg.zero()) == "0"
    assert str(alg.one()) == "1"
    assert str(-alg.one()) == "-1"
    assert str(x1 * x2) == "x1*x2"
    assert str(2 * x1) == "2*x1"
    assert str(x2 * x1) == "-x1*x2"
    assert str(alg.one() + x1 * x3) == "1 + x1*x3"
    assert str(alg.scalar(GaussianRational(1, 2)) * x4) == "(1+2i)*x4"


def test_pairing_validation():
    with pytest.raises(StructureError):
        GrassmannAlgebra(2, (2, 2))  # not an involution
    with pytest.raises(StructureError):
        GrassmannAlgebra(3, (2, 3, 1))  # permutation but not an involution
    with pytest.raises(StructureError):
        GrassmannAlgebra(2, (1,))  # wrong length
    with pytest.raises(StructureError):
        GrassmannAlgebra(-1)


def test_generator_index_bounds():
    alg = GrassmannAlgebra(3)
    with pytest.raises(StructureError):
        alg.gen(0)
    with pytest.raises(StructureError):
        alg.gen(4)


def test_raw_term_filtering():
    alg = GrassmannAlgebra(2)
    x = SuperNumber(alg, {0b01: GaussianRational(0), 0b10: GaussianRational(2)})
    assert x.terms == {0b10: GaussianRational(2)}
