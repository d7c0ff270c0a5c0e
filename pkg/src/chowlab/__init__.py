"""Exact Hilbert series and Charney-Davis quantities of Chow rings of
uniform and finite-vector-space matroids, computed by multiple independent
formulas and cross-validated against brute-force permutation and lattice
oracles."""

from .charney import (
    CDResult,
    TangentSecantTable,
    alternating_probe,
    cd,
    cd_chain_alternating,
    cd_determinant,
    cd_direct,
    cd_qsecant,
    t_term,
    tangent_secant,
)
from .chow import (
    GradedDims,
    basis_monomial_oracle,
    delta_coefficient,
    delta_series,
    hilbert,
    hilbert_chain_sum,
    hilbert_closed_form,
    hilbert_recurrence,
    q_derangement_number,
)
from .errors import ResourceBoundError, RouteDisagreementError
from .exactalg import BiPoly, QRat, QSeries, gauss_binomial, q_factorial, q_pochhammer, t_quantum
from .flats import ExplicitLattice, FamilySpec, build_explicit, level_size, upper_interval
from .ordercx import FVector, bivariate_check, conjecture_check, h_polynomial, order_complex_fvector
from .permstat import Perm, PermClass, statistic_sum
from .qeuler import (
    EulerianTable,
    classical_eulerian,
    egf_identity_check,
    q_eulerian_by_definition,
    q_eulerian_by_recurrence,
)

__version__ = "0.1.0"
