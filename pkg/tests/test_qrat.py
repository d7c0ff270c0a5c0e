"""QRat field arithmetic and canonical-form invariants."""

import random
from fractions import Fraction
from math import gcd

import pytest

from chowlab.exactalg import QRat
from chowlab.exactalg.qrat import qp_content, qp_gcd, qp_mul


def _random_qrat(rng):
    num = tuple(rng.randint(-6, 6) for _ in range(rng.randint(1, 4)))
    den = ()
    while not any(den):
        den = tuple(rng.randint(-6, 6) for _ in range(rng.randint(1, 4)))
    return QRat(num, den)


def test_field_axioms_random_instances():
    rng = random.Random(42)
    for _ in range(60):
        a, b, c = (_random_qrat(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == QRat(0)
        if a:
            assert a * a.inverse() == QRat(1)
            assert (b / a) * a == b


def test_normalization_cancels_polynomial_gcd():
    # (1+q)^2 / (1+q) reduces to 1+q
    assert QRat((1, 2, 1), (1, 1)) == QRat((1, 1))
    assert QRat((1, 2, 1), (1, 1)).is_polynomial()


def test_normalization_cancels_integer_content():
    assert QRat((2, 2), (2,)) == QRat((1, 1))
    half = QRat(1, 2)
    assert half.num == (1,) and half.den == (2,)
    assert not half.is_polynomial()


def test_denominator_leading_coefficient_positive():
    x = QRat((1,), (1, -1))  # 1/(1-q)
    assert x.den[-1] > 0
    assert x.num == (-1,) and x.den == (-1, 1)


def test_gcd_of_canonical_pair_is_unit():
    rng = random.Random(3)
    for _ in range(40):
        x = _random_qrat(rng)
        if not x:
            continue
        assert len(qp_gcd(x.num, x.den)) == 1
        assert gcd(qp_content(x.num), qp_content(x.den)) == 1


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        QRat((1,), ())


def test_eval():
    x = QRat((0, 1), (1, 1))  # q/(1+q)
    assert x.eval(1) == Fraction(1, 2)
    assert x.eval(3) == Fraction(3, 4)
    with pytest.raises(ZeroDivisionError):
        x.eval(-1)


def test_qp_mul_matches_evaluation():
    rng = random.Random(11)
    for _ in range(30):
        a = tuple(rng.randint(-4, 4) for _ in range(3))
        b = tuple(rng.randint(-4, 4) for _ in range(3))
        prod = qp_mul(a, b)
        for x in (-2, 0, 1, 5):
            va = sum(c * x**i for i, c in enumerate(a))
            vb = sum(c * x**i for i, c in enumerate(b))
            assert sum(c * x**i for i, c in enumerate(prod)) == va * vb
