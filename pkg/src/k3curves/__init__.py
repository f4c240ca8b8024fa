"""Exact generating functions for complex and real rational curve counts on K3 surfaces."""

from .asymptotics import (
    AsymptoteModel,
    big_log,
    convergence_report,
    convolution_exponent,
    growth_ratio,
    hr_estimate,
    partition_P,
    partition_Q,
    predicted_log_count,
)
from .congruences import (
    CLAUSES,
    check_3dissection,
    check_clause,
    check_j_congruence,
    check_lehner,
    check_theta_ninth_power,
    parity_sequence,
    parity_self_similarity,
    sweep_clauses,
)
from .eta import (
    RealTopology,
    all_topologies,
    eisenstein_e4_series,
    gauss_theta_series,
    inv_sqrt_delta_series,
    j_coefficients,
    klein_qj_series,
    sigma3,
    welschinger_series,
    welschinger_via_eta_quotient,
    yau_zaslow_series,
)
from .invariants import (
    bounds_for,
    compute_table,
    refined_count_bound,
    tritangent_bound,
    verify_sign_monotonicity,
)
from .series import ZZ, CoefficientRing, TruncatedSeries

__version__ = "0.1.0"
