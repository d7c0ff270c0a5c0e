"""Truncated power series with QRat coefficients.

A QSeries holds coefficients for degrees 0..order of a series in one formal
variable; arithmetic truncates at the common order.  Inversion requires an
invertible constant term and satisfies s * s.inverse() == 1 up to order.

Default truncation order for callers that only bound the largest index they
will read: 2*n_max + 2.
"""

from __future__ import annotations

from .qrat import QRAT_ONE, QRAT_ZERO, QRat, qp_pochhammer, qp_qfactorial


def default_order(n_max):
    return 2 * n_max + 2


class QSeries:
    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) != order + 1:
            raise ValueError("need exactly order+1 coefficients")
        self.order = order
        self.coeffs = tuple(c if isinstance(c, QRat) else QRat(c) for c in coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __add__(self, other):
        order = min(self.order, other.order)
        return QSeries(order, [self[i] + other[i] for i in range(order + 1)])

    def __sub__(self, other):
        order = min(self.order, other.order)
        return QSeries(order, [self[i] - other[i] for i in range(order + 1)])

    def __mul__(self, other):
        order = min(self.order, other.order)
        out = []
        for n in range(order + 1):
            acc = QRAT_ZERO
            for k in range(n + 1):
                if self[k] and other[n - k]:
                    acc = acc + self[k] * other[n - k]
            out.append(acc)
        return QSeries(order, out)

    def scale(self, c):
        c = c if isinstance(c, QRat) else QRat(c)
        return QSeries(self.order, [x * c for x in self.coeffs])

    def inverse(self):
        if not self[0]:
            raise ValueError("series with zero constant term has no inverse")
        inv0 = self[0].inverse()
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = QRAT_ZERO
            for k in range(1, n + 1):
                if self[k] and out[n - k]:
                    acc = acc + self[k] * out[n - k]
            out.append(-inv0 * acc)
        return QSeries(self.order, out)

    def __repr__(self):
        shown = ", ".join(repr(c) for c in self.coeffs[: min(self.order, 6) + 1])
        return f"QSeries(order={self.order}, [{shown}{', ...' if self.order > 6 else ''}])"


def one(order):
    return QSeries(order, [QRAT_ONE] + [QRAT_ZERO] * order)


def q_exponential(order):
    """e_q: coefficient of x^n is 1/[n]_q!."""
    return QSeries(order, [QRat((1,), qp_qfactorial(n)) for n in range(order + 1)])


def cosh_q(order):
    """Even series with t^(2n) coefficient 1/(q;q)_(2n)."""
    return QSeries(
        order,
        [QRat((1,), qp_pochhammer(n)) if n % 2 == 0 else QRAT_ZERO for n in range(order + 1)],
    )


def sinh_q(order):
    """Odd series with t^(2n+1) coefficient 1/(q;q)_(2n+1)."""
    return QSeries(
        order,
        [QRat((1,), qp_pochhammer(n)) if n % 2 == 1 else QRAT_ZERO for n in range(order + 1)],
    )
