#include "heisenring/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "heisenring/chain.hpp"

namespace heisenring {

double saddle_band_sum(const ChainParams& params) {
    validate(params);
    return params.n_sites / std::sqrt(8.0 * std::numbers::pi * params.beta_j);
}

TwoSiteDensity gaussian_rdm(const ChainParams& params, int distance) {
    validate_for_truncation(params);
    const int n = params.n_sites;
    if (distance < 1 || distance > n - 1)
        throw invalid_input_error("distance out of range 1.." + std::to_string(n - 1));

    const double denom = n + std::sqrt(8.0 * std::numbers::pi * params.beta_j) *
                                 std::exp(2.0 * params.beta_mub);
    const double d_eff = std::min(distance, n - distance);
    TwoSiteDensity d;
    d.w = 1.0 / denom;
    d.z = d.w * std::exp(-d_eff * d_eff / (8.0 * params.beta_j));
    d.u_plus = 0.0;
    d.u_minus = 1.0 - 2.0 * d.w;
    return d;
}

GaussianProfileParams gaussian_profile_params(const ChainParams& params) {
    validate_for_truncation(params);
    GaussianProfileParams p;
    p.amplitude = 2.0 / (params.n_sites +
                         std::sqrt(8.0 * std::numbers::pi * params.beta_j) *
                             std::exp(2.0 * params.beta_mub));
    p.length = entanglement_length(params);
    return p;
}

double entanglement_length(const ChainParams& params) {
    if (!(params.beta_j > 0.0))
        throw invalid_input_error("entanglement length needs beta_j > 0");
    return 2.0 * std::sqrt(params.beta_j);
}

double gaussian_concurrence(const ChainParams& params, int distance) {
    validate_for_truncation(params);
    const int n = params.n_sites;
    if (distance < 0 || distance > n - 1)
        throw invalid_input_error("distance out of range 0.." + std::to_string(n - 1));
    const double d_eff = std::min(distance, n - distance);
    const GaussianProfileParams p = gaussian_profile_params(params);
    return p.amplitude * std::exp(-d_eff * d_eff / (2.0 * p.length * p.length));
}

} // namespace heisenring
