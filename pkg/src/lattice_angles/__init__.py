"""Angles between integer vectors, decided and witnessed in exact arithmetic."""

from .angles import RIGHT, STRAIGHT, ZERO, AngleClass, angle_between
from .angleset import (
    ExclusionCert,
    Verdict,
    WitnessCert,
    classify_by_norm,
    classify_by_tangent,
    hilbert_criterion,
    excluded_angle,
    excluded_vector,
    s_theta_contains,
    theta_n_contains,
    theta_n_of_a_contains,
    vector_with_norm,
)
from .hilbert import hilbert_product_check, hilbert_symbol
from .oracle import angle_inventory, brute_force_witness, consistency_report
from .witness import (
    SearchBudget,
    enumerate_witness_directions,
    perpendicular,
    witness_dim2,
    witness_dim4,
    witness_for_angle,
)

__version__ = "0.1.0"


__all__ = [
    "AngleClass",
    "ExclusionCert",
    "RIGHT",
    "STRAIGHT",
    "SearchBudget",
    "Verdict",
    "WitnessCert",
    "ZERO",
    "angle_between",
    "angle_inventory",
    "brute_force_witness",
    "classify_by_norm",
    "classify_by_tangent",
    "consistency_report",
    "enumerate_witness_directions",
    "excluded_angle",
    "excluded_vector",
    "hilbert_criterion",
    "hilbert_product_check",
    "hilbert_symbol",
    "perpendicular",
    "s_theta_contains",
    "theta_n_contains",
    "theta_n_of_a_contains",
    "vector_with_norm",
    "witness_dim2",
    "witness_dim4",
    "witness_for_angle",
]
