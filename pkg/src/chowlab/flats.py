"""Matroid-family descriptors and explicit small lattices of flats.

Two families are supported, both with all upper intervals from a given
level isomorphic (so level data determines every chain count):

  * uniform(n, r): flats are the subsets of [n] of size <= r-1 plus [n];
  * vector(n, r):  flats are the subspaces of F_q^n of dim <= r-1 plus
    the full space, with q a formal variable.

The rank-r flat is always the unique top.  Symbolic computations never fix
q; only build_explicit instantiates a concrete prime for the brute-force
oracles, enumerating subspaces by reduced row echelon form.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .errors import ResourceBoundError
from .exactalg import BiPoly, binomial, gauss_binomial

UNIFORM = "uniform"
VECTOR = "vector"


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int
    r: int

    def __post_init__(self):
        if self.kind not in (UNIFORM, VECTOR):
            raise ValueError(f"unknown family kind {self.kind!r}")
        if not 1 <= self.r <= self.n:
            raise ValueError(f"need 1 <= r <= n, got r={self.r}, n={self.n}")

    @classmethod
    def uniform(cls, n, r):
        return cls(UNIFORM, n, r)

    @classmethod
    def vector(cls, n, r):
        return cls(VECTOR, n, r)

    def __str__(self):
        return f"{self.kind}({self.n},{self.r})"


def level_size(spec, i):
    """Number of rank-i flats as a q-polynomial (a constant for uniform)."""
    if not 0 <= i <= spec.r:
        raise ValueError(f"level {i} out of range 0..{spec.r}")
    if i == spec.r:
        return BiPoly.const(1)
    if spec.kind == UNIFORM:
        return BiPoly.const(binomial(spec.n, i))
    return gauss_binomial(spec.n, i)


def chains_above(spec, lower, upper):
    """Number of rank-`upper` flats above a fixed rank-`lower` flat (q-poly)."""
    if upper == spec.r:
        return BiPoly.const(1)
    if spec.kind == UNIFORM:
        return BiPoly.const(binomial(spec.n - lower, upper - lower))
    return gauss_binomial(spec.n - lower, upper - lower)


def upper_interval(spec, i):
    """The family whose lattice is [Z, top] for Z of rank i (1 <= i <= r-1)."""
    if not 1 <= i <= spec.r - 1:
        raise ValueError(f"level {i} out of range 1..{spec.r - 1}")
    return FamilySpec(spec.kind, spec.n - i, spec.r - i)


# -- explicit lattices ---------------------------------------------------

UNIFORM_EXPLICIT_MAX_N = 8
VECTOR_EXPLICIT_MAX_N = {2: 4, 3: 3}


class ExplicitLattice:
    """A concrete ranked lattice with full order relation and cover lists.

    Element 0 is the bottom; the top is the unique rank-`rank` element.
    `below[i]` is the set of indices strictly below element i.
    """

    def __init__(self, labels, ranks, rank):
        self.labels = labels
        self.ranks = ranks
        self.rank = rank
        self.bottom = ranks.index(0)
        self.top = ranks.index(rank)
        self.below = [
            {j for j in range(len(labels)) if j != i and labels[j] <= labels[i]}
            for i, _ in enumerate(labels)
        ]
        self.upper_covers = [
            sorted(
                j
                for j in range(len(labels))
                if ranks[j] == ranks[i] + 1 and i in self.below[j]
            )
            for i in range(len(labels))
        ]

    def __len__(self):
        return len(self.labels)

    def level_counts(self):
        counts = [0] * (self.rank + 1)
        for r in self.ranks:
            counts[r] += 1
        return counts

    def count_maximal_chains(self):
        """Bottom-to-top saturated chains, by depth-first enumeration."""
        def walk(i):
            if i == self.top:
                return 1
            return sum(walk(j) for j in self.upper_covers[i])

        return walk(self.bottom)

    def proper_elements(self):
        return [i for i in range(len(self)) if i not in (self.bottom, self.top)]

    def to_json(self):
        return {
            "rank": self.rank,
            "elements": [sorted(label) for label in self.labels],
            "ranks": list(self.ranks),
            "covers": sorted(
                [i, j] for i in range(len(self)) for j in self.upper_covers[i]
            ),
        }


def build_explicit(spec, p=None):
    """Materialize the lattice of flats; vector families need a prime p."""
    if spec.kind == UNIFORM:
        if spec.n > UNIFORM_EXPLICIT_MAX_N:
            raise ResourceBoundError(
                f"explicit uniform lattice capped at n <= {UNIFORM_EXPLICIT_MAX_N}"
            )
        return _build_uniform(spec.n, spec.r)
    if p is None:
        raise ValueError("vector-family lattices need a numeric prime p")
    if p < 2 or any(p % d == 0 for d in range(2, p)):
        raise ValueError(f"p = {p} is not prime")
    max_n = VECTOR_EXPLICIT_MAX_N.get(p)
    if max_n is None:
        raise ResourceBoundError(f"explicit subspace lattices support p in {{2, 3}}, got {p}")
    if spec.n > max_n:
        raise ResourceBoundError(f"explicit subspace lattice at p={p} capped at n <= {max_n}")
    return _build_vector(spec.n, spec.r, p)


def _build_uniform(n, r):
    ground = frozenset(range(1, n + 1))
    labels = [frozenset()]
    ranks = [0]
    for size in range(1, r):
        for subset in combinations(range(1, n + 1), size):
            labels.append(frozenset(subset))
            ranks.append(size)
    labels.append(ground)
    ranks.append(r)
    return ExplicitLattice(labels, ranks, r)


def _build_vector(n, r, p):
    labels = []
    ranks = []
    for dim in range(r):
        for basis in _rref_bases(n, dim, p):
            labels.append(_span(basis, n, p))
            ranks.append(dim)
    labels.append(frozenset(product(range(p), repeat=n)))
    ranks.append(r)
    return ExplicitLattice(labels, ranks, r)


def _rref_bases(n, k, p):
    """All k x n reduced row echelon matrices of rank k over F_p."""
    if k == 0:
        yield ()
        return
    for pivots in combinations(range(n), k):
        free_positions = [
            (row, col)
            for row in range(k)
            for col in range(pivots[row] + 1, n)
            if col not in pivots
        ]
        for values in product(range(p), repeat=len(free_positions)):
            matrix = [[0] * n for _ in range(k)]
            for row, pivot in enumerate(pivots):
                matrix[row][pivot] = 1
            for (row, col), v in zip(free_positions, values):
                matrix[row][col] = v
            yield tuple(tuple(row) for row in matrix)


def _span(basis, n, p):
    vectors = set()
    for coeffs in product(range(p), repeat=len(basis)):
        v = [0] * n
        for c, row in zip(coeffs, basis):
            if c:
                for i, x in enumerate(row):
                    v[i] = (v[i] + c * x) % p
        vectors.add(tuple(v))
    return frozenset(vectors)
