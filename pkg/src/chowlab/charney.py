"""Charney-Davis quantities by independent routes, and the classical and
q-analog tangent-secant numbers that govern them.

For odd rank r the unsigned quantity is H(A, -1) and the signed quantity
carries the prefactor (-1)^((r-1)/2); both are always reported because the
uniform-specialization statement matches the unsigned value while the
q-statement matches the signed one.  Even rank always gives zero.

The building block T(n, 2a) is kept in integer q-polynomial arithmetic:
its recurrence

    T(2a) = - sum_{b<a} [n-2b over 2a-2b]_q T(2b),    T(0) = 1

is the production path, verified against the Gaussian-binomial determinant
and, in exact rational arithmetic, against
(-1)^a ([n]_q!/[n-2a]_q!) * Delta_a with Delta_a the 1/[2k]_q! determinant.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import RouteDisagreementError
from .exactalg import (
    BiPoly,
    ONE,
    QRat,
    cosh_q,
    det_fraction_free,
    det_rational,
    diff_terms,
    gauss_binomial,
    q_factorial,
    qp_from_bipoly,
    qp_pochhammer,
    sinh_q,
)
from .permstat import PermClass
from .chow import hilbert_recurrence


@dataclass(frozen=True)
class CDResult:
    unsigned: BiPoly  # H(A, -1) as a q-polynomial
    signed: BiPoly  # (-1)^((r-1)/2) * unsigned for odd r; 0 for even r
    parity: int  # r mod 2


def _signed(unsigned, r):
    if r % 2 == 0:
        return CDResult(unsigned, unsigned, 0)
    sign = -1 if ((r - 1) // 2) % 2 else 1
    return CDResult(unsigned, sign * unsigned, 1)


def cd_direct(spec):
    """Substitute t = -1 into the Hilbert series."""
    return _signed(hilbert_recurrence(spec).subs_t_int(-1), spec.r)


def _require_odd(r):
    if r % 2 == 0:
        raise ValueError(f"rank {r} is even; this formula needs odd rank")


def cd_chain_alternating(n, r):
    """Unsigned quantity as the even-gap alternating rank-tuple sum."""
    _require_odd(r)
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    total = ONE
    for m in range(1, r // 2 + 1):
        for gaps in combinations(range(1, (r - 1) // 2 + 1), m):
            ranks = [2 * g for g in gaps]  # tuples of even ranks below r
            term = BiPoly.const((-1) ** m)
            lower = 0
            for upper in ranks:
                term = term * gauss_binomial(n - lower, upper - lower)
                lower = upper
            total = total + term
    return total


@lru_cache(maxsize=None)
def _t_terms(n, a):
    """List [T(0), T(2), ..., T(2a)] by the linear recurrence."""
    terms = [ONE]
    for j in range(1, a + 1):
        acc = BiPoly()
        for b in range(j):
            acc = acc + gauss_binomial(n - 2 * b, 2 * j - 2 * b) * terms[b]
        terms.append(-acc)
    return terms


def _t_determinant(n, a):
    """T(2a) as (-1)^a times the integer-entry determinant."""
    if a == 0:
        return ONE
    matrix = []
    for i in range(a):
        row = []
        for j in range(a):
            if j <= i:
                row.append(gauss_binomial(n - 2 * j, 2 * (i - j + 1)))
            elif j == i + 1:
                row.append(ONE)
            else:
                row.append(BiPoly())
        matrix.append(row)
    det = det_fraction_free(matrix)
    return det if a % 2 == 0 else -det


def _delta_det(a):
    """The Hankel-style determinant with entries 1/[2k]_q! (exact rational)."""
    if a == 0:
        return QRat(1)
    matrix = []
    for i in range(a):
        row = []
        for j in range(a):
            if j <= i:
                row.append(QRat((1,), qp_from_bipoly(q_factorial(2 * (i - j + 1)))))
            elif j == i + 1:
                row.append(QRat(1))
            else:
                row.append(QRat(0))
        matrix.append(row)
    return det_rational(matrix)


def t_term(n, a):
    """T(n, 2a), verified across recurrence, determinant, and rational form."""
    if not 0 <= 2 * a <= n:
        raise ValueError(f"need 0 <= 2a <= n, got a={a}, n={n}")
    by_rec = _t_terms(n, a)[a]
    by_det = _t_determinant(n, a)
    if by_rec != by_det:
        raise RouteDisagreementError(
            f"T({n}, {2 * a}) recurrence vs determinant",
            by_rec.to_text(),
            by_det.to_text(),
            str(diff_terms(by_rec, by_det)),
        )
    scale = QRat(qp_from_bipoly(q_factorial(n)), qp_from_bipoly(q_factorial(n - 2 * a)))
    rational = scale * _delta_det(a)
    if a % 2 == 1:
        rational = -rational
    if rational != QRat.from_bipoly(by_rec):
        raise RouteDisagreementError(
            f"T({n}, {2 * a}) integer vs rational-determinant form",
            by_rec.to_text(),
            repr(rational),
        )
    return by_rec


def cd_determinant(n, r):
    """Signed and unsigned quantities via the T-term telescoping sum."""
    _require_odd(r)
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    terms = _t_terms(n, (r - 1) // 2)
    unsigned = BiPoly()
    for t in terms:
        unsigned = unsigned + t
    # the printed rational form must reproduce the same polynomial
    rational = QRat(1)
    fact_n = qp_from_bipoly(q_factorial(n))
    for a in range(1, (r - 1) // 2 + 1):
        contrib = QRat(fact_n, qp_from_bipoly(q_factorial(n - 2 * a))) * _delta_det(a)
        rational = rational + (-contrib if a % 2 == 1 else contrib)
    if rational != QRat.from_bipoly(unsigned):
        raise RouteDisagreementError(
            f"CD({n},{r}) determinant form vs T-term sum",
            unsigned.to_text(),
            repr(rational),
        )
    return _signed(unsigned, r)


# -- tangent-secant numbers ------------------------------------------------


@dataclass(frozen=True)
class TangentSecantTable:
    """E_{n,q} for 0 <= n <= n_max, all three routes verified at build time."""

    n_max: int
    entries: tuple  # BiPoly q-polynomials
    classical: tuple  # integer values at q = 1

    def __getitem__(self, n):
        return self.entries[n]


def _secant_by_recurrence(n_max):
    even = [ONE]  # E_0
    for m in range(1, n_max // 2 + 1):
        acc = BiPoly()
        for k in range(1, m + 1):
            acc = acc + gauss_binomial(2 * m, 2 * k) * even[m - k]
        even.append(-acc)
    entries = []
    for n in range(n_max + 1):
        if n % 2 == 0:
            entries.append(even[n // 2])
        else:
            m = (n - 1) // 2
            acc = BiPoly()
            for j in range(m + 1):
                acc = acc + gauss_binomial(n, 2 * j) * even[j]
            entries.append(acc)
    return entries


def _secant_by_series(n_max, order):
    cosh = cosh_q(order)
    sech = cosh.inverse()
    full = sech + sinh_q(order) * sech
    entries = []
    for n in range(n_max + 1):
        value = full[n] * QRat(qp_pochhammer(n))
        entries.append(value.to_bipoly())
    return entries


def _secant_by_determinant(n_max):
    entries = []
    for n in range(n_max + 1):
        if n % 2 == 0:
            a = n // 2
            value = QRat(qp_from_bipoly(q_factorial(n))) * _delta_det(a)
            if a % 2 == 1:
                value = -value
            entries.append(value.to_bipoly())
        else:
            entries.append(cd_determinant(n, n).unsigned)
    return entries


def tangent_secant(n_max, series_order=None):
    """Build the table; series, recurrence, and determinant routes must agree."""
    if series_order is None:
        series_order = n_max
    if series_order < n_max:
        raise ValueError("series order must be at least n_max")
    by_rec = _secant_by_recurrence(n_max)
    by_series = _secant_by_series(n_max, series_order)
    by_det = _secant_by_determinant(n_max)
    for n in range(n_max + 1):
        for route, other in (("series", by_series[n]), ("determinant", by_det[n])):
            if other != by_rec[n]:
                raise RouteDisagreementError(
                    f"E_{n} by recurrence vs {route}",
                    by_rec[n].to_text(),
                    other.to_text(),
                    str(diff_terms(by_rec[n], other)),
                )
    classical = tuple(e.eval(1, 1) for e in by_rec)
    return TangentSecantTable(n_max, tuple(by_rec), classical)


def cd_qsecant(n, r, table=None):
    """Signed and unsigned quantities via the q-secant-number sum."""
    _require_odd(r)
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    if table is None or table.n_max < r - 1:
        table = tangent_secant(r - 1)
    unsigned = BiPoly()
    for k in range((r - 1) // 2 + 1):
        unsigned = unsigned + gauss_binomial(n, 2 * k) * table[2 * k]
    return _signed(unsigned, r)


def cd(spec, method="direct"):
    """Charney-Davis result by the named route: direct | chain | det | qsecant."""
    if method == "direct":
        return cd_direct(spec)
    if method == "chain":
        return _signed(cd_chain_alternating(spec.n, spec.r), spec.r)
    if method == "det":
        return cd_determinant(spec.n, spec.r)
    if method == "qsecant":
        return cd_qsecant(spec.n, spec.r)
    raise ValueError(f"unknown method {method!r}")


def uniform_cd(result):
    """The q = 1 specialization of a CDResult."""
    return CDResult(
        result.unsigned.subs_q_int(1), result.signed.subs_q_int(1), result.parity
    )


def alternating_probe(n, table=None, bound=None):
    """Compare sums of q^exc over alternating permutations with E_{n,q}.

    Reports which convention (if any) matches, exactly or up to a global
    sign; the identification is empirical, so nothing is asserted.
    """
    if table is None or table.n_max < n:
        table = tangent_secant(n)
    target = table[n]
    report = {"n": n, "target": target.to_text(), "conventions": {}}
    for convention in ("up-down", "down-up"):
        total = BiPoly()
        for p in PermClass.Alternating(n, convention).members(bound):
            total = total + BiPoly.term(1, p.stats().exc, 0)
        report["conventions"][convention] = {
            "sum": total.to_text(),
            "matches": total == target,
            "matches_up_to_sign": total == target or total == -target,
        }
    return report
