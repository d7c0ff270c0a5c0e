"""Hilbert series of Chow rings by four independent routes, plus the
difference series between consecutive ranks and its derangement data.

Routes
------
chain sum    : sum over strictly increasing rank tuples, each weighted by
               its chain count and the product of t*[gap-1]_t factors
               (level homogeneity collapses chains to rank profiles);
recurrence   : peel the lattice at each level and recurse into the upper
               interval (memoized over (kind, n, r));
closed form  : the full-rank polynomial minus the fixed-point permutation
               sums, with the inner exponent t^(j-exc);
monomial oracle : count flag-supported basis monomials with rank-gap
               exponent bounds directly on an explicit lattice.

All four must agree; the first three symbolically in q, the oracle after
evaluating q at the lattice's field size (q = 1 for uniform).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import ResourceBoundError, RouteDisagreementError
from .exactalg import BiPoly, ONE, T, diff_terms, gauss_binomial, t_quantum
from .flats import UNIFORM, FamilySpec, build_explicit, chains_above, level_size
from .permstat import PermClass, statistic_sum, w_maj_exc_complement, w_t_exc_complement
from .qeuler import classical_eulerian, q_eulerian_by_recurrence

ORACLE_MAX_ELEMENTS = 200


def hilbert_chain_sum(spec):
    """Hilbert series as the rank-tuple chain sum."""
    total = ONE
    for m in range(1, spec.r + 1):
        for ranks in combinations(range(1, spec.r + 1), m):
            term = ONE
            lower = 0
            for upper in ranks:
                gap = upper - lower
                if gap < 2:
                    term = BiPoly()
                    break
                term = term * chains_above(spec, lower, upper) * T * t_quantum(gap - 1)
                lower = upper
            total = total + term
    return total


def hilbert_recurrence(spec):
    """Hilbert series via the upper-interval recursion."""
    return _hilbert_recurrence(spec.kind, spec.n, spec.r)


@lru_cache(maxsize=None)
def _hilbert_recurrence(kind, n, r):
    spec = FamilySpec(kind, n, r)
    total = t_quantum(r)
    for i in range(2, r):
        sub = _hilbert_recurrence(kind, n - i, r - i)
        total = total + T * level_size(spec, i) * t_quantum(i - 1) * sub
    return total


def hilbert_closed_form(spec, bound=None):
    """Full-rank polynomial minus the minimum-fixed-point sums.

    For the vector family the full-rank polynomial is A_n(q,t); the uniform
    family is the same computation with q fixed to 1 throughout.
    """
    if spec.kind == UNIFORM:
        total, weight = classical_eulerian(spec.n), w_t_exc_complement
    else:
        total, weight = q_eulerian_by_recurrence(spec.n), w_maj_exc_complement
    for j in range(spec.r, spec.n):
        total = total - statistic_sum(
            PermClass.MinFixed(spec.n, spec.n - j), weight(j), bound
        )
    return total


def delta_series(n, r, bound=None):
    """Difference of Hilbert series between ranks r+1 and r, as the sum of
    q^(maj-exc) t^(r-exc) over permutations with at least n-r fixed points."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    return statistic_sum(PermClass.MinFixed(n, n - r), w_maj_exc_complement(r), bound)


def q_derangement_number(n, k, bound=None):
    """Sum of q^(maj-exc) over derangements of [n] with exc = n-k."""
    terms = {}
    for p in PermClass.Derangements(n).members(bound):
        s = p.stats()
        if s.exc == n - k:
            key = (s.maj - s.exc, 0)
            terms[key] = terms.get(key, 0) + 1
    return BiPoly(terms)


def delta_coefficient(n, r, k, bound=None):
    """Coefficient of t^k in the rank-(r+1) vs rank-r difference series,
    assembled from Gaussian binomials and derangement sums.

    Cross-checked against the direct permutation sum; a mismatch is an
    internal invariant violation.
    """
    total = BiPoly()
    for i in range(r + 1):
        if k - i < 0:
            continue
        total = total + gauss_binomial(n, r - i) * q_derangement_number(r - i, k - i, bound)
    direct = delta_series(n, r, bound).coefficient_in_t(k)
    if total != direct:
        raise RouteDisagreementError(
            f"delta coefficient (n={n}, r={r}, k={k})",
            total.to_text(),
            direct.to_text(),
            str(diff_terms(total, direct)),
        )
    return total


# -- brute-force oracle on explicit lattices ------------------------------


@dataclass(frozen=True)
class GradedDims:
    """Graded dimensions of a Chow ring, index = degree 0..r-1."""

    dims: tuple

    def __getitem__(self, k):
        return self.dims[k]

    def __len__(self):
        return len(self.dims)

    def to_poly(self):
        return BiPoly({(0, k): d for k, d in enumerate(self.dims)})

    def is_palindromic(self):
        return self.dims == tuple(reversed(self.dims))


def basis_monomial_oracle(lat, r, max_elements=ORACLE_MAX_ELEMENTS):
    """Count basis monomials per degree on an explicit lattice.

    A monomial is a descending chain of non-bottom flats with exponents
    1 <= a_i <= rank(F_i) - rank(F_next) - 1, the bottom closing the chain;
    the degree-k dimension is the number of monomials of total degree k.
    """
    if len(lat) > max_elements:
        raise ResourceBoundError(
            f"lattice with {len(lat)} elements exceeds oracle cap {max_elements}"
        )
    counts = [[0] * r for _ in range(len(lat))]

    # counts[i][d]: monomial tails of degree d whose topmost flat is element i.
    for i in sorted(range(len(lat)), key=lambda i: lat.ranks[i]):
        if i == lat.bottom:
            continue
        rank_i = lat.ranks[i]
        for alpha in range(1, rank_i):  # the tail ending at the bottom
            counts[i][alpha] += 1
        for j in lat.below[i]:
            if j == lat.bottom:
                continue
            for alpha in range(1, rank_i - lat.ranks[j]):
                for d, c in enumerate(counts[j]):
                    if c and d + alpha < r:
                        counts[i][d + alpha] += c
    dims = [0] * r
    dims[0] = 1  # the empty monomial
    for i in range(len(lat)):
        for d, c in enumerate(counts[i]):
            dims[d] += c
    return GradedDims(tuple(dims))


# -- route cross-validation ------------------------------------------------


def hilbert(spec, method="recurrence", bound=None, p=None):
    """Hilbert series by the named route: chain | recurrence | closed | oracle."""
    if method == "chain":
        return hilbert_chain_sum(spec)
    if method == "recurrence":
        return hilbert_recurrence(spec)
    if method == "closed":
        return hilbert_closed_form(spec, bound)
    if method == "oracle":
        from .flats import build_explicit

        lat = build_explicit(spec, p)
        return basis_monomial_oracle(lat, spec.r).to_poly()
    raise ValueError(f"unknown method {method!r}")


def assert_routes_agree(spec, bound=None):
    """Chain sum, recurrence, and closed form must agree exactly."""
    by_chain = hilbert_chain_sum(spec)
    by_rec = hilbert_recurrence(spec)
    by_closed = hilbert_closed_form(spec, bound)
    for name, other in (("recurrence", by_rec), ("closed form", by_closed)):
        if other != by_chain:
            raise RouteDisagreementError(
                f"hilbert series of {spec} (chain sum vs {name})",
                by_chain.to_text(),
                other.to_text(),
                str(diff_terms(by_chain, other)),
            )
    return by_chain
