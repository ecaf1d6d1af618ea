#pragma once

#include "heisenring/types.hpp"

namespace heisenring {

/// Gaussian concurrence profile C(d) = C0 * exp(-d^2 / (2 l^2)).
struct GaussianProfileParams {
    double amplitude = 0.0; ///< C0 = 2 / (N + sqrt(8*pi*beta_j) e^{2*beta_mub})
    double length = 0.0;    ///< l = 2*sqrt(beta_j), lattice spacings
};

/// Saddle-point value of the band sum: N * sqrt(1/(8*pi*beta_j)).
double saddle_band_sum(const ChainParams& params);

/// Closed-form two-site RDM: w = 1/(N + sqrt(8*pi*beta_j) e^{2*beta_mub}),
/// z = w * exp(-d_eff^2/(8*beta_j)), u+ = 0, u- = 1 - 2w, with
/// d_eff = min(d, N-d). The closed form is derived for |m-n| << N; folding
/// the distance preserves the d <-> N-d symmetry the exact sum obeys.
TwoSiteDensity gaussian_rdm(const ChainParams& params, int distance);

/// Amplitude and length of the profile.
GaussianProfileParams gaussian_profile_params(const ChainParams& params);

/// l = 2*sqrt(beta_j); independent of the field and of N.
double entanglement_length(const ChainParams& params);

/// C(d) = C0 * exp(-d_eff^2/(2 l^2)) = 2*z of gaussian_rdm. Accepts d = 0
/// as the formal amplitude point C(0) = C0.
double gaussian_concurrence(const ChainParams& params, int distance);

} // namespace heisenring
