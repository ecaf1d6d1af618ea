#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "heisenring/chain.hpp"
#include "heisenring/types.hpp"

namespace heisenring {

/// Eigen-decomposition of one fixed-magnetization block of beta*H.
struct SectorSpectrum {
    SectorIndex sector;
    std::vector<std::uint64_t> basis; ///< ascending patterns spanning the block
    Eigen::VectorXd eigenvalues;      ///< beta*E, ascending
    Eigen::MatrixXd eigenvectors;     ///< orthonormal columns over basis
};

/// Full thermal solution of the ring: every sector diagonalized.
///
/// All Boltzmann weights carry the beta*epsilon_0 shift so that only ratios
/// ever materialize; log_partition_shifted = log(Z * e^{beta*epsilon_0}),
/// i.e. log Z = log_partition_shifted - beta*epsilon_0.
struct ThermalState {
    ChainParams params;
    std::vector<SectorSpectrum> spectra; ///< n_up = 0..N
    double log_partition_shifted = 0.0;
};

/// Ring size cap for the all-sectors solve (largest block 3432 at N=14).
inline constexpr int kDefaultExactNCap = 14;

/// Diagonalizes all N+1 sectors. Throws capacity_error when N exceeds
/// max_n (the message points at the truncated method) or when a block
/// exceeds dim_cap.
ThermalState solve_thermal(const ChainParams& params, int max_n = kDefaultExactNCap,
                           int dim_cap = kDefaultSectorDimCap);

/// Two-site reduced density matrix between sites m and n from the full
/// thermal state, via the spin correlation functions
///
///   u+ = <(1+sz_m)(1+sz_n)>/4   u- = <(1-sz_m)(1-sz_n)>/4
///   w  = <(1-sz_m)(1+sz_n)>/4   z  = <sigma^-_m sigma^+_n>
///
/// The off-diagonal z couples states within one sector only (S^z
/// conservation); its imaginary part is checked to vanish. Throws
/// invalid_input_error for m == n or out-of-range sites.
TwoSiteDensity two_site_rdm(const ThermalState& state, int site_m, int site_n);

/// The 4x4 matrix of a TwoSiteDensity in the basis |00>,|01>,|10>,|11>:
/// diag(u+, w, w, u-) with z at (01,10) and (10,01).
Eigen::Matrix4cd rdm_as_matrix(const TwoSiteDensity& d);

} // namespace heisenring
