#pragma once

#include <cstdint>

#include "heisenring/errors.hpp"

namespace heisenring {

/// Dimensionless description of the ferromagnetic Heisenberg ring.
///
/// Everything downstream depends on the couplings only through the products
/// beta*J and beta*mu*B (k_B = mu = 1), so no separate temperature field
/// exists and the Hamiltonian is always built directly as beta*H.
struct ChainParams {
    int n_sites = 0;       ///< ring length N, at least 3
    double beta_j = 0.0;   ///< J/kT, positive (ferromagnet)
    double beta_mub = 0.0; ///< muB/kT, nonnegative
};

/// Throws invalid_input_error unless n_sites >= 3, beta_j > 0, beta_mub >= 0
/// and both couplings are finite.
void validate(const ChainParams& params);

/// Additional requirement of the truncated-spectrum and gaussian methods:
/// beta_mub must be strictly positive (the one-magnon truncation is
/// controlled by the gap 2*mu*B/kT).
void validate_for_truncation(const ChainParams& params);

/// Fixed-magnetization block label: number of up spins, 0 <= n_up <= N.
struct SectorIndex {
    int n_up = 0;
};

/// X-form two-site reduced density matrix of the ring (all other entries
/// vanish by S^z conservation):
///
///   [ u+        ]
///   [    w  z   ]      basis |00>,|01>,|10>,|11>, |0> = spin up,
///   [    z  w   ]      z real by the reflection symmetry of the ring
///   [         u-]
struct TwoSiteDensity {
    double u_plus = 0.0;  ///< both spins up
    double u_minus = 0.0; ///< both spins down
    double w = 0.0;       ///< one up, one down (the two middle diagonals are equal)
    double z = 0.0;       ///< <sigma^-_m sigma^+_n>
};

} // namespace heisenring
