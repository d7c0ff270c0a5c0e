"""Hilbert series route agreement, the monomial-basis oracle, difference
series, and q-derangement assembly."""

import pytest

from chowlab.chow import (
    assert_routes_agree,
    basis_monomial_oracle,
    delta_coefficient,
    delta_series,
    hilbert,
    hilbert_chain_sum,
    hilbert_closed_form,
    hilbert_recurrence,
    q_derangement_number,
)
from chowlab.errors import ResourceBoundError, RouteDisagreementError
from chowlab.exactalg import BiPoly, ONE, T
from chowlab.flats import FamilySpec, build_explicit
from chowlab.permstat import PermClass, statistic_sum, w_maj_exc_offset
from chowlab.qeuler import classical_eulerian, q_eulerian_by_recurrence


def test_small_values():
    assert hilbert_chain_sum(FamilySpec.uniform(3, 3)) == ONE + 4 * T + T**2
    assert hilbert_chain_sum(FamilySpec.vector(3, 2)) == ONE + T
    assert hilbert_chain_sum(FamilySpec.vector(3, 3)) == BiPoly(
        {(0, 0): 1, (0, 1): 2, (1, 1): 1, (2, 1): 1, (0, 2): 1}
    )
    assert hilbert_recurrence(FamilySpec.uniform(5, 1)) == ONE
    assert hilbert_recurrence(FamilySpec.uniform(4, 4)) == classical_eulerian(4)


def test_route_agreement_symbolic():
    for kind in ("uniform", "vector"):
        for n in range(1, 7):
            for r in range(1, n + 1):
                assert_routes_agree(FamilySpec(kind, n, r))


def test_full_rank_is_q_eulerian():
    for n in range(1, 7):
        assert hilbert_recurrence(FamilySpec.vector(n, n)) == q_eulerian_by_recurrence(n)
        assert hilbert_recurrence(FamilySpec.uniform(n, n)) == classical_eulerian(n)


def test_uniform_is_q_one_specialization():
    for n in range(1, 7):
        for r in range(1, n + 1):
            vec = hilbert_recurrence(FamilySpec.vector(n, r))
            uni = hilbert_recurrence(FamilySpec.uniform(n, r))
            assert vec.subs_q_int(1) == uni


def test_corank_one_is_derangement_sum():
    for n in range(2, 7):
        expected = statistic_sum(PermClass.Derangements(n), w_maj_exc_offset(-1))
        assert hilbert_recurrence(FamilySpec.vector(n, n - 1)) == expected
        assert hilbert_recurrence(FamilySpec.uniform(n, n - 1)) == expected.subs_q_int(1)


def test_graded_dims_examples():
    dims = basis_monomial_oracle(build_explicit(FamilySpec.uniform(3, 3)), 3)
    assert dims.dims == (1, 4, 1)
    assert dims.is_palindromic()
    dims = basis_monomial_oracle(build_explicit(FamilySpec.uniform(4, 2)), 2)
    assert dims.dims == (1, 1)
    dims = basis_monomial_oracle(build_explicit(FamilySpec.vector(3, 3), 2), 3)
    assert dims.dims == (1, 8, 1)


def test_oracle_agrees_with_symbolic_series():
    for kind, p, top in (("uniform", None, 6), ("vector", 2, 4), ("vector", 3, 3)):
        q_value = 1 if p is None else p
        for n in range(1, top + 1):
            for r in range(1, n + 1):
                spec = FamilySpec(kind, n, r)
                dims = basis_monomial_oracle(build_explicit(spec, p), r)
                assert dims.to_poly() == hilbert_recurrence(spec).subs_q_int(q_value), spec
                assert dims[0] == 1 and dims[r - 1] == 1
                assert dims.is_palindromic()


def test_oracle_size_cap():
    lat = build_explicit(FamilySpec.uniform(8, 3))
    with pytest.raises(ResourceBoundError):
        basis_monomial_oracle(lat, 3, max_elements=30)


def test_delta_series():
    assert delta_series(3, 2) == BiPoly({(0, 2): 1, (0, 1): 1, (1, 1): 1, (2, 1): 1})
    for n in range(1, 7):
        for r in range(1, n + 1):
            poly = delta_series(n, r)
            # top coefficient is 1 (only the identity has no excedance)
            assert poly.coefficient_in_t(r) == ONE
            # total count at q = t = 1 is the number of permutations with
            # at least n - r fixed points
            count = sum(1 for _ in PermClass.MinFixed(n, n - r).members())
            assert poly.eval(1, 1) == count
    with pytest.raises(ValueError):
        delta_series(3, 0)


def test_delta_telescopes_to_full_rank():
    for n in range(1, 7):
        acc = hilbert_recurrence(FamilySpec.vector(n, 1))
        for j in range(1, n):
            acc = acc + delta_series(n, j)
        assert acc == q_eulerian_by_recurrence(n)


def test_delta_matches_hilbert_difference():
    for n in range(1, 7):
        for r in range(1, n):
            diff = hilbert_recurrence(FamilySpec.vector(n, r + 1)) - hilbert_recurrence(
                FamilySpec.vector(n, r)
            )
            assert diff == delta_series(n, r), (n, r)


def test_q_derangement_numbers():
    assert q_derangement_number(3, 1) == ONE
    assert q_derangement_number(3, 2) == ONE
    for n in range(1, 8):
        assert q_derangement_number(n, 0) == BiPoly()
    assert q_derangement_number(0, 0) == ONE


def test_delta_coefficient_assembly():
    for n in range(1, 7):
        for r in range(1, n + 1):
            for k in range(r + 1):
                delta_coefficient(n, r, k)  # raises RouteDisagreementError on mismatch


def test_delta_coefficient_detects_tampering(monkeypatch):
    import chowlab.chow as chow_module

    real = chow_module.delta_series

    def tampered(n, r, bound=None):
        return real(n, r, bound) + ONE

    monkeypatch.setattr(chow_module, "delta_series", tampered)
    with pytest.raises(RouteDisagreementError):
        delta_coefficient(3, 2, 0)


def test_full_rank_dims_are_q_eulerian_numbers():
    for n in range(1, 7):
        poly = hilbert_recurrence(FamilySpec.vector(n, n))
        for k in range(n):
            assert poly.coefficient_in_t(k) == q_eulerian_by_recurrence(n).coefficient_in_t(k)


def test_hilbert_dispatch():
    spec = FamilySpec.vector(3, 3)
    assert hilbert(spec, "chain") == hilbert(spec, "recurrence") == hilbert(spec, "closed")
    assert hilbert(spec, "oracle", p=2) == hilbert(spec, "recurrence").subs_q_int(2)
    with pytest.raises(ValueError):
        hilbert(spec, "magic")


def test_closed_form_needs_enumeration_bound():
    with pytest.raises(ResourceBoundError):
        hilbert_closed_form(FamilySpec.vector(12, 3))
