"""Thermal entanglement of spins in the ferromagnetic Heisenberg ring.

Thin wrapper over the C++ core: exact per-sector diagonalization, the
truncated one-magnon model, and the closed-form gaussian concurrence
profile.
"""

from ._core import (
    CapacityError,
    ChainParams,
    GaussianProfileParams,
    InvalidInputError,
    TruncationReport,
    TwoSiteDensity,
    band_sum,
    entanglement_length,
    exact_rdm,
    gaussian_concurrence,
    gaussian_profile_params,
    gaussian_rdm,
    ground_state_energy,
    is_x_form,
    magnon_energy,
    profile,
    rdm_as_matrix,
    saddle_band_sum,
    spin_flip,
    truncated_log_partition,
    truncated_rdm,
    truncation_weight,
    validity_warnings,
    wootters_concurrence,
    xstate_concurrence,
)

__all__ = [
    "CapacityError",
    "ChainParams",
    "GaussianProfileParams",
    "InvalidInputError",
    "TruncationReport",
    "TwoSiteDensity",
    "band_sum",
    "entanglement_length",
    "exact_rdm",
    "gaussian_concurrence",
    "gaussian_profile_params",
    "gaussian_rdm",
    "ground_state_energy",
    "is_x_form",
    "magnon_energy",
    "profile",
    "rdm_as_matrix",
    "saddle_band_sum",
    "spin_flip",
    "truncated_log_partition",
    "truncated_rdm",
    "truncation_weight",
    "validity_warnings",
    "wootters_concurrence",
    "xstate_concurrence",
]
