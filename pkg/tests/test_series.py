"""Truncated series arithmetic: inversion, truncation consistency."""

import random

import pytest

from chowlab.exactalg import QRat, QSeries, cosh_q, default_order, q_exponential, sinh_q
from chowlab.exactalg.qrat import qp_pochhammer, qp_qfactorial
from chowlab.exactalg.series import one


def _random_series(rng, order, unit=True):
    coeffs = []
    for n in range(order + 1):
        num = tuple(rng.randint(-4, 4) for _ in range(rng.randint(1, 3)))
        den = ()
        while not any(den):
            den = tuple(rng.randint(-3, 3) for _ in range(rng.randint(1, 3)))
        coeffs.append(QRat(num, den))
    if unit and not coeffs[0]:
        coeffs[0] = QRat(1)
    return QSeries(order, coeffs)


def test_inverse_of_one():
    assert one(5).inverse() == one(5)


def test_series_times_inverse_is_one():
    rng = random.Random(2024)
    for _ in range(20):
        s = _random_series(rng, 6)
        assert s * s.inverse() == one(6)


def test_inverse_requires_unit_constant_term():
    s = QSeries(3, [QRat(0), QRat(1), QRat(0), QRat(0)])
    with pytest.raises(ValueError):
        s.inverse()


def test_sech_low_order_coefficients():
    # hand inversion of cosh = 1 + t^2/(q;q)_2 + ...: the t^2 coefficient
    # of the inverse is -1/(q;q)_2
    sech = cosh_q(4).inverse()
    assert sech[0] == QRat(1)
    assert sech[1] == QRat(0)
    assert sech[2] == QRat((-1,), qp_pochhammer(2))


def test_truncated_product_matches_longer_truncation():
    rng = random.Random(77)
    for _ in range(10):
        a_long = _random_series(rng, 8, unit=False)
        b_long = _random_series(rng, 8, unit=False)
        a_short = QSeries(4, a_long.coeffs[:5])
        b_short = QSeries(4, b_long.coeffs[:5])
        long_product = a_long * b_long
        short_product = a_short * b_short
        assert short_product.coeffs == long_product.coeffs[:5]


def test_builders():
    e = q_exponential(4)
    assert e[3] == QRat((1,), qp_qfactorial(3))
    c, s = cosh_q(5), sinh_q(5)
    assert c[4] == QRat((1,), qp_pochhammer(4)) and c[3] == QRat(0)
    assert s[3] == QRat((1,), qp_pochhammer(3)) and s[4] == QRat(0)


def test_default_order():
    assert default_order(10) == 22


def test_add_sub_scale():
    a = QSeries(3, [QRat(1), QRat(2), QRat(3), QRat(4)])
    b = QSeries(3, [QRat(1), QRat(1), QRat(1), QRat(1)])
    assert (a - b) + b == a
    assert a.scale(QRat(2))[3] == QRat(8)
