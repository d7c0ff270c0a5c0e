"""Exact sparse polynomials in the formal variables q and t.

A BiPoly is a dictionary mapping exponent pairs (q_deg, t_deg) to nonzero
Python integers, so arithmetic is exact at every size.  The empty dict is
the zero polynomial and equality is plain dict equality (canonical form:
zero coefficients are never stored).

    1 + (2 + q + q^2)*t + t^2   ->   {(0,0): 1, (0,1): 2, (1,1): 1,
                                      (2,1): 1, (0,2): 1}

Univariate values (pure q-polynomials, pure t-polynomials, integers) are
just BiPolys whose exponents happen to vanish in one slot, so every
quantity in the package lives in a single value type.
"""

from __future__ import annotations

import math
from functools import lru_cache


class BiPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for (qd, td), c in terms.items():
                if c == 0:
                    continue
                if qd < 0 or td < 0:
                    raise ValueError(f"negative exponent ({qd}, {td})")
                t[(qd, td)] = c
        self.terms = t

    # -- constructors -------------------------------------------------

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def term(cls, c, q_deg=0, t_deg=0):
        return cls({(q_deg, t_deg): c})

    # -- ring structure -----------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        out = {}
        for (qa, ta), ca in self.terms.items():
            for (qb, tb), cb in other.terms.items():
                k = (qa + qb, ta + tb)
                s = out.get(k, 0) + ca * cb
                if s:
                    out[k] = s
                else:
                    del out[k]
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- structure queries --------------------------------------------

    def q_degree(self):
        return max((qd for qd, _ in self.terms), default=0)

    def t_degree(self):
        return max((td for _, td in self.terms), default=0)

    def coefficient_in_t(self, t_deg):
        """The coefficient of t^t_deg, as a pure q-polynomial."""
        return _raw({(qd, 0): c for (qd, td), c in self.terms.items() if td == t_deg})

    def constant(self):
        """The integer coefficient of q^0 t^0."""
        return self.terms.get((0, 0), 0)

    def is_palindromic_in_t(self, degree):
        """True iff coeff of t^k equals coeff of t^(degree-k) as q-polynomials."""
        if self.t_degree() > degree:
            return False
        return all(
            self.coefficient_in_t(k) == self.coefficient_in_t(degree - k)
            for k in range(degree // 2 + 1)
        )

    # -- substitution and evaluation ----------------------------------

    def eval(self, q, t):
        """Evaluate at integer q and t (an exact ring homomorphism)."""
        return sum(c * q**qd * t**td for (qd, td), c in self.terms.items())

    def subs_t_int(self, value):
        """Substitute an integer for t, keeping q symbolic."""
        out = {}
        for (qd, td), c in self.terms.items():
            k = (qd, 0)
            s = out.get(k, 0) + c * value**td
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return _raw(out)

    def subs_q_int(self, value):
        """Substitute an integer for q, keeping t symbolic."""
        out = {}
        for (qd, td), c in self.terms.items():
            k = (0, td)
            s = out.get(k, 0) + c * value**qd
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return _raw(out)

    def subs_q_poly(self, value):
        """Substitute a BiPoly for q (used e.g. to shift a formal variable)."""
        powers = {0: ONE}
        result = ZERO
        for (qd, td), c in self.terms.items():
            if qd not in powers:
                powers[qd] = value**qd
            result = result + powers[qd] * BiPoly.term(c, 0, td)
        return result

    def divexact(self, divisor):
        """Exact division; raises ValueError when divisor does not divide self.

        Division runs on leading terms in (t, q)-lexicographic order, the
        order Bareiss elimination needs for its exact interior quotients.
        """
        divisor = _coerce(divisor)
        if not divisor:
            raise ValueError("division by zero polynomial")
        dk = max(divisor.terms, key=lambda k: (k[1], k[0]))
        dc = divisor.terms[dk]
        rem = dict(self.terms)
        quot = {}
        while rem:
            rk = max(rem, key=lambda k: (k[1], k[0]))
            rc = rem[rk]
            qd, td = rk[0] - dk[0], rk[1] - dk[1]
            if qd < 0 or td < 0 or rc % dc != 0:
                raise ValueError("inexact polynomial division")
            c = rc // dc
            quot[(qd, td)] = c
            for (q2, t2), c2 in divisor.terms.items():
                k = (q2 + qd, t2 + td)
                s = rem.get(k, 0) - c * c2
                if s:
                    rem[k] = s
                else:
                    del rem[k]
        return _raw(quot)

    # -- rendering -----------------------------------------------------

    def __repr__(self):
        return f"BiPoly({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    def to_text(self):
        """Render with ascending t-powers, q-coefficients in parentheses.

        >>> (BiPoly.const(1) + BiPoly.term(2, 0, 1) + BiPoly.term(1, 1, 1)
        ...  + BiPoly.term(1, 2, 1) + BiPoly.term(1, 0, 2)).to_text()
        '1 + (2 + q + q^2)*t + t^2'
        """
        if not self.terms:
            return "0"
        pieces = []
        for td in range(self.t_degree() + 1):
            coeff = self.coefficient_in_t(td)
            if not coeff:
                continue
            pieces.append(_render_t_term(coeff, td))
        return _join_signed(pieces)

    def to_json_terms(self):
        """Terms as JSON-ready dicts, sorted by (t, q); coefficients as strings."""
        return [
            {"q": qd, "t": td, "c": str(c)}
            for (qd, td), c in sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        ]

    @classmethod
    def from_json_terms(cls, terms):
        return cls({(int(e["q"]), int(e["t"])): int(e["c"]) for e in terms})

    def to_csv_rows(self):
        """Rows (t_deg, q_deg, coefficient-string), sorted by (t, q)."""
        return [
            (td, qd, str(c))
            for (qd, td), c in sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        ]


def _raw(terms):
    p = BiPoly.__new__(BiPoly)
    p.terms = terms
    return p


def _coerce(x):
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, int):
        return BiPoly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to BiPoly")


def _render_q_monomial(c, e):
    if e == 0:
        return str(c)
    var = "q" if e == 1 else f"q^{e}"
    if c == 1:
        return var
    if c == -1:
        return f"-{var}"
    return f"{c}*{var}"


def _render_q(poly):
    pieces = [_render_q_monomial(poly.terms[(e, 0)], e) for e in sorted(qd for qd, _ in poly.terms)]
    return _join_signed(pieces)


def _render_t_term(coeff, td):
    if td == 0:
        return _render_q(coeff)
    tvar = "t" if td == 1 else f"t^{td}"
    if coeff == ONE:
        return tvar
    if coeff == MINUS_ONE:
        return f"-{tvar}"
    if len(coeff.terms) == 1:
        ((qd, _), c) = next(iter(coeff.terms.items()))
        return f"{_render_q_monomial(c, qd)}*{tvar}"
    return f"({_render_q(coeff)})*{tvar}"


def _join_signed(pieces):
    out = pieces[0]
    for p in pieces[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def diff_terms(a, b):
    """Coefficients where a and b differ: list of (q_deg, t_deg, in_a, in_b)."""
    keys = sorted(set(a.terms) | set(b.terms), key=lambda k: (k[1], k[0]))
    return [
        (qd, td, a.terms.get((qd, td), 0), b.terms.get((qd, td), 0))
        for qd, td in keys
        if a.terms.get((qd, td), 0) != b.terms.get((qd, td), 0)
    ]


ZERO = BiPoly()
ONE = BiPoly.const(1)
MINUS_ONE = BiPoly.const(-1)
Q = BiPoly.term(1, 1, 0)
T = BiPoly.term(1, 0, 1)


# -- q- and t-analog constructors --------------------------------------


def t_quantum(n):
    """[n]_t = 1 + t + ... + t^(n-1); the empty sum 0 for n = 0."""
    return _raw({(0, d): 1 for d in range(n)})


def q_int(n):
    """[n]_q = 1 + q + ... + q^(n-1)."""
    return _raw({(d, 0): 1 for d in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n):
    """[n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def q_pochhammer(n):
    """(q;q)_n = (1 - q)(1 - q^2) ... (1 - q^n), with (q;q)_0 = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ONE
    return q_pochhammer(n - 1) * (ONE - BiPoly.term(1, n, 0))


@lru_cache(maxsize=None)
def gauss_binomial(n, k):
    """Gaussian binomial [n choose k]_q via the q-Pascal rule (division-free)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return gauss_binomial(n - 1, k - 1) + BiPoly.term(1, k, 0) * gauss_binomial(n - 1, k)


def binomial(n, k):
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)
