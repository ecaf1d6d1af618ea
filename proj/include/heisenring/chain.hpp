#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "heisenring/types.hpp"

namespace heisenring {

// Basis convention used everywhere: a sector basis state is an N-bit
// pattern, bit k set <=> spin at site k is up (|+> = |0>), so the sigma^z_k
// eigenvalue of a pattern b is +1 when bit k is set and -1 otherwise.

/// Largest sector block the dense builders will materialize.
inline constexpr int kDefaultSectorDimCap = 20'000;

/// Exact binomial(n, k) in 64-bit arithmetic.
std::uint64_t binomial(int n, int k);

/// 2*popcount(pattern) - n_sites, the eigenvalue of 2*S^z.
int magnetization(std::uint64_t pattern, int n_sites);

/// All patterns with n_up bits set among n_sites, in ascending numeric order.
std::vector<std::uint64_t> enumerate_sector(int n_sites, int n_up);

/// beta * epsilon_0 = -(beta_j + beta_mub) * N, the all-down ground state
/// energy. Does not validate; callers outside the library boundary go
/// through validate() first.
double ground_state_energy(const ChainParams& params);

/// beta*H restricted to the fixed-magnetization block spanned by
/// enumerate_sector(N, sector.n_up), as a real symmetric matrix:
///
///   beta*H = beta_j*N - 2*beta_j * sum_l P_{l,l+1} + beta_mub * sum_l sigma^z_l
///
/// with periodic wrap l = N-1 -> 0. Throws capacity_error when the block
/// dimension binomial(N, n_up) exceeds dim_cap.
Eigen::MatrixXd sector_hamiltonian(const ChainParams& params, SectorIndex sector,
                                   int dim_cap = kDefaultSectorDimCap);

/// Applies beta*H to a full-space vector of dimension 2^N without building
/// the matrix. Index bit k of a component is the spin at site k.
Eigen::VectorXcd apply_full_hamiltonian(const ChainParams& params,
                                        const Eigen::VectorXcd& state);

} // namespace heisenring
