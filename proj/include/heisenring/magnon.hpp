#pragma once

#include <Eigen/Dense>

#include "heisenring/types.hpp"

namespace heisenring {

/// The N one-magnon levels beta*lambda_s = beta*eps0 + 2*beta_mub
/// + 8*beta_j*sin^2(pi*s/N), s = 0..N-1. Symmetric under s <-> N-s.
struct MagnonBand {
    Eigen::VectorXd energies; ///< beta*lambda_s by momentum index s
};

/// Relative Boltzmann weights diagnosing the spectrum truncation.
///
/// Weights are fractions of Z' + x, where Z' is the truncated partition
/// function (ground + one-magnon band, beta*eps0 shifted) and
/// x = e^{-4*beta_mub} is the weight of the flat two-magnon state sitting at
/// the bottom of the first neglected band. retained + neglected == 1; the
/// neglected figure is a lower bound on the true truncation error since the
/// two-magnon band is wider than its bottom state.
struct TruncationReport {
    double retained_weight = 0.0;
    double leading_neglected_weight = 0.0;
};

/// beta*lambda_s for a single momentum index, 0 <= s < N.
double magnon_energy(const ChainParams& params, int s);

/// All N one-magnon energies.
MagnonBand magnon_band(const ChainParams& params);

/// beta*H projected on the one-magnon subspace spanned by |k> (single up
/// spin at site k): the N x N circulant with -2*beta_j on the two cyclic
/// off-diagonals and beta*(J(4-N) + muB(2-N)) on the diagonal. Its
/// eigenvectors are the Fourier modes and its eigenvalues beta*lambda_s.
Eigen::MatrixXd one_magnon_hamiltonian(const ChainParams& params);

/// The exact finite band sum S = sum_s e^{-8*beta_j*sin^2(pi*s/N)}.
double band_sum(const ChainParams& params);

/// log(Z * e^{beta*eps0}) of the truncated spectrum:
/// log(1 + e^{-2*beta_mub} * S). No integral approximation: that layer
/// lives in asymptotics.
double truncated_log_partition(const ChainParams& params);

/// Two-site RDM of the truncated thermal ensemble (ground + one-magnon
/// band) at site separation d, 1 <= d <= N-1. All sums exact:
///
///   u+ = 0
///   w  = (1/Z) (sum_s e^{-beta*lambda_s}) / N
///   u- = (1/Z) (e^{-beta*eps0} + (1 - 2/N) sum_s e^{-beta*lambda_s})
///   z  = (1/(N Z)) sum_s e^{2*pi*i*d*s/N - beta*lambda_s}
///
/// The Fourier sum for z is accumulated in complex arithmetic and its
/// imaginary part checked to vanish. The ground-state term of u- carries
/// e^{-beta*eps0}; with that weight the trace is exactly 1 under the
/// truncated partition function.
TwoSiteDensity truncated_rdm(const ChainParams& params, int distance);

/// Truncation diagnostics; see TruncationReport.
TruncationReport truncation_weight(const ChainParams& params);

} // namespace heisenring
