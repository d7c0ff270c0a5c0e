"""Rational functions in q with exact integer-polynomial numerator/denominator.

Univariate q-polynomials are plain tuples of int coefficients in ascending
degree with no trailing zeros (the empty tuple is zero); QRat wraps a
numerator/denominator pair kept in canonical form:

  * the polynomial gcd of numerator and denominator is constant,
  * the integer gcd of all coefficients of both is 1,
  * the denominator's leading coefficient is positive.

Only the series machinery and the secant-determinant formulas need this
field; the main Hilbert-series pipeline stays in integer BiPoly arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .bipoly import BiPoly


# -- tuple-based univariate polynomial helpers --------------------------


def qp_trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def qp_add(a, b):
    n = max(len(a), len(b))
    return qp_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def qp_neg(a):
    return tuple(-x for x in a)


def qp_sub(a, b):
    return qp_add(a, qp_neg(b))


def qp_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return qp_trim(out)

def qp_scale(a, c):
    if c == 0:
        return ()
    return tuple(x * c for x in a)


def qp_degree(a):
    return len(a) - 1 if a else -1


def qp_content(a):
    g = 0
    for x in a:
        g = gcd(g, x)
    return g


def qp_primitive(a):
    """Primitive part with positive leading coefficient."""
    if not a:
        return ()
    g = qp_content(a)
    if a[-1] < 0:
        g = -g
    return tuple(x // g for x in a)


def qp_divexact(a, b):
    """Exact quotient a // b; raises ValueError if b does not divide a."""
    if not b:
        raise ValueError("division by zero polynomial")
    if not a:
        return ()
    if len(a) < len(b):
        raise ValueError("inexact polynomial division")
    rem = list(a)
    out = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(out) - 1, -1, -1):
        c = rem[i + len(b) - 1]
        if c % lead != 0:
            raise ValueError("inexact polynomial division")
        c //= lead
        out[i] = c
        if c:
            for j, y in enumerate(b):
                rem[i + j] -= c * y
    if any(rem):
        raise ValueError("inexact polynomial division")
    return qp_trim(out)


def qp_gcd(a, b):
    """Primitive-PRS gcd, normalized primitive with positive leading coeff."""
    a, b = qp_primitive(a), qp_primitive(b)
    if qp_degree(a) < qp_degree(b):
        a, b = b, a
    while b:
        a, b = b, qp_primitive(_qp_prem(a, b))
    return a


def _qp_prem(a, b):
    """Pseudo-remainder of a by b (b nonzero, deg a >= deg b)."""
    rem = list(a)
    lead = b[-1]
    db = len(b) - 1
    while len(rem) - 1 >= db and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < db:
            break
        shift = len(rem) - 1 - db
        c = rem[-1]
        rem = [x * lead for x in rem]
        for j, y in enumerate(b):
            rem[shift + j] -= c * y
        rem.pop()
    return qp_trim(rem)


def qp_eval(a, x):
    out = 0
    for c in reversed(a):
        out = out * x + c
    return out


def qp_from_bipoly(p):
    """Convert a pure q-polynomial BiPoly to a coefficient tuple."""
    if p.t_degree() != 0:
        raise ValueError("polynomial involves t")
    out = [0] * (p.q_degree() + 1)
    for (qd, _), c in p.terms.items():
        out[qd] = c
    return qp_trim(out)


def qp_to_bipoly(a):
    return BiPoly({(i, 0): c for i, c in enumerate(a)})


QP_ZERO = ()
QP_ONE = (1,)


def qp_qint(n):
    return (1,) * n


def qp_qfactorial(n):
    out = QP_ONE
    for i in range(1, n + 1):
        out = qp_mul(out, qp_qint(i))
    return out


def qp_pochhammer(n):
    out = QP_ONE
    for i in range(1, n + 1):
        out = qp_mul(out, qp_trim([1] + [0] * (i - 1) + [-1]))
    return out


# -- the field of rational functions ------------------------------------


class QRat:
    __slots__ = ("num", "den")

    def __init__(self, num, den=QP_ONE):
        if isinstance(num, int):
            num = (num,) if num else ()
        if isinstance(den, int):
            den = (den,) if den else ()
        num, den = qp_trim(num), qp_trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = QP_ZERO, QP_ONE
            return
        g = qp_gcd(num, den)
        if qp_degree(g) > 0:
            num, den = qp_divexact(num, g), qp_divexact(den, g)
        c = gcd(qp_content(num), qp_content(den))
        if den[-1] < 0:
            c = -c
        self.num = tuple(x // c for x in num)
        self.den = tuple(x // c for x in den)

    @classmethod
    def from_bipoly(cls, p):
        return cls(qp_from_bipoly(p))

    def __add__(self, other):
        other = _coerce(other)
        return QRat(
            qp_add(qp_mul(self.num, other.den), qp_mul(other.num, self.den)),
            qp_mul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        out = QRat.__new__(QRat)
        out.num, out.den = qp_neg(self.num), self.den
        return out

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        return QRat(qp_mul(self.num, other.num), qp_mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        return QRat(qp_mul(self.num, other.den), qp_mul(self.den, other.num))

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def inverse(self):
        return QRat(self.den, self.num)

    def __eq__(self, other):
        if isinstance(other, (int, tuple)):
            other = _coerce(other)
        if not isinstance(other, QRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self):
        return self.den == QP_ONE

    def to_bipoly(self):
        if not self.is_polynomial():
            raise ValueError(f"not a polynomial: {self}")
        return qp_to_bipoly(self.num)

    def eval(self, x):
        """Evaluate at a rational point where the denominator is nonzero."""
        d = qp_eval(self.den, Fraction(x))
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return Fraction(qp_eval(self.num, Fraction(x))) / d

    def __repr__(self):
        num = qp_to_bipoly(self.num).to_text()
        if self.is_polynomial():
            return num
        return f"({num})/({qp_to_bipoly(self.den).to_text()})"


def _coerce(x):
    if isinstance(x, QRat):
        return x
    if isinstance(x, int):
        return QRat(x)
    if isinstance(x, tuple):
        return QRat(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to QRat")


QRAT_ZERO = QRat(0)
QRAT_ONE = QRat(1)
