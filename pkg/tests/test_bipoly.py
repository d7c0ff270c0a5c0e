"""BiPoly ring arithmetic, q-analog constructors, rendering."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chowlab.exactalg import (
    BiPoly,
    ONE,
    Q,
    T,
    ZERO,
    diff_terms,
    gauss_binomial,
    q_factorial,
    q_int,
    q_pochhammer,
    t_quantum,
)

coeffs = st.integers(min_value=-9, max_value=9)
exponents = st.tuples(st.integers(0, 4), st.integers(0, 4))
bipolys = st.dictionaries(exponents, coeffs, max_size=6).map(BiPoly)
points = st.tuples(st.integers(-5, 5), st.integers(-5, 5))


@settings(max_examples=150)
@given(bipolys, bipolys, bipolys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO


@settings(max_examples=150)
@given(bipolys, bipolys, points)
def test_eval_is_a_homomorphism(a, b, point):
    q, t = point
    assert (a + b).eval(q, t) == a.eval(q, t) + b.eval(q, t)
    assert (a * b).eval(q, t) == a.eval(q, t) * b.eval(q, t)


@settings(max_examples=100)
@given(bipolys, st.integers(-5, 5))
def test_substitutions_commute_with_eval(a, v):
    assert a.subs_t_int(v).eval(3, 1) == a.eval(3, v)
    assert a.subs_q_int(v).eval(1, 3) == a.eval(v, 3)


def test_zero_coefficients_never_stored():
    p = BiPoly({(1, 1): 5}) - BiPoly({(1, 1): 5})
    assert p.terms == {}
    assert p == ZERO
    assert BiPoly({(0, 0): 0, (2, 1): 3}).terms == {(2, 1): 3}


def test_t_quantum():
    assert t_quantum(0) == ZERO
    assert t_quantum(1) == ONE
    assert t_quantum(3) == ONE + T + T**2


def test_q_factorial_small():
    assert q_factorial(0) == ONE
    assert q_factorial(3) == (ONE + Q) * (ONE + Q + Q**2)


def test_pochhammer_vs_factorial():
    for n in range(9):
        assert q_pochhammer(n) == (ONE - Q) ** n * q_factorial(n)


def _fraction_poly_div(num, den):
    """Test-local long division of Fraction coefficient lists (exact)."""
    num = [Fraction(c) for c in num]
    out = []
    for _ in range(len(num) - len(den) + 1):
        lead = num[-1] / den[-1]
        out.append(lead)
        for i, c in enumerate(den):
            num[len(num) - len(den) + i] -= lead * c
        assert num.pop() == 0
    assert all(c == 0 for c in num)
    return list(reversed(out))


def _poch_coeffs(n):
    out = [Fraction(1)]
    for i in range(1, n + 1):
        factor = [Fraction(1)] + [Fraction(0)] * (i - 1) + [Fraction(-1)]
        new = [Fraction(0)] * (len(out) + len(factor) - 1)
        for a, x in enumerate(out):
            for b, y in enumerate(factor):
                new[a + b] += x * y
        out = new
    return out


def test_gauss_binomial_4_2_against_quotient_oracle():
    # oracle first: expand (q;q)_4 / ((q;q)_2 (q;q)_2) by exact long division
    num = _poch_coeffs(4)
    den2 = _poch_coeffs(2)
    step = _fraction_poly_div(num, den2)
    expected = _fraction_poly_div(step, den2)
    assert expected == [1, 1, 2, 1, 1]
    assert gauss_binomial(4, 2) == BiPoly({(i, 0): 1 for i in (0, 1, 3, 4)} | {(2, 0): 2})
    assert gauss_binomial(4, 2).eval(1, 1) == 6
    assert gauss_binomial(4, 0) == ONE


def test_gauss_binomial_out_of_range():
    assert gauss_binomial(4, -1) == ZERO
    assert gauss_binomial(4, 5) == ZERO


def test_gauss_binomial_symmetry_and_pascal():
    for n in range(11):
        for k in range(n + 1):
            assert gauss_binomial(n, k) == gauss_binomial(n, n - k)
            if n:
                assert gauss_binomial(n, k) == gauss_binomial(n - 1, k - 1) + Q**k * gauss_binomial(n - 1, k)


def test_divexact_roundtrip():
    rng = random.Random(7)
    for _ in range(30):
        a = BiPoly({(rng.randrange(4), rng.randrange(4)): rng.randint(-5, 5) for _ in range(4)})
        b = BiPoly({(rng.randrange(3), rng.randrange(3)): rng.randint(-5, 5) for _ in range(3)})
        if not a or not b:
            continue
        assert (a * b).divexact(b) == a


def test_divexact_rejects_inexact():
    with pytest.raises(ValueError):
        (Q + ONE).divexact(T)
    with pytest.raises(ValueError):
        ONE.divexact(ZERO)


def test_text_rendering():
    p = BiPoly({(0, 0): 1, (0, 1): 2, (1, 1): 1, (2, 1): 1, (0, 2): 1})
    assert p.to_text() == "1 + (2 + q + q^2)*t + t^2"
    assert ZERO.to_text() == "0"
    assert (-Q - Q**2).to_text() == "-q - q^2"
    assert (3 * Q * T).to_text() == "3*q*t"
    assert (ONE - T).to_text() == "1 - t"
    assert (-T**2).to_text() == "-t^2"


def test_json_roundtrip_and_ordering():
    p = BiPoly({(2, 1): 10**30, (0, 0): -1, (1, 2): 3})
    terms = p.to_json_terms()
    assert [(e["t"], e["q"]) for e in terms] == sorted((e["t"], e["q"]) for e in terms)
    assert BiPoly.from_json_terms(terms) == p


def test_csv_rows():
    p = BiPoly({(1, 0): 2, (0, 1): 5})
    assert p.to_csv_rows() == [(0, 1, "2"), (1, 0, "5")]


def test_diff_terms_localizes():
    a = BiPoly({(0, 0): 1, (1, 1): 2})
    b = BiPoly({(0, 0): 1, (1, 1): 3, (0, 2): 4})
    assert diff_terms(a, b) == [(1, 1, 2, 3), (0, 2, 0, 4)]


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        BiPoly({(-1, 0): 1})


def test_q_int():
    assert q_int(4) == ONE + Q + Q**2 + Q**3
