#include "heisenring/magnon.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "heisenring/chain.hpp"

namespace heisenring {

namespace {

double band_offset(const ChainParams& params, int s) {
    const double x = std::sin(std::numbers::pi * s / params.n_sites);
    return 8.0 * params.beta_j * x * x;
}

} // namespace

double magnon_energy(const ChainParams& params, int s) {
    if (s < 0 || s >= params.n_sites)
        throw invalid_input_error("momentum index out of range 0.." +
                                  std::to_string(params.n_sites - 1));
    return ground_state_energy(params) + 2.0 * params.beta_mub + band_offset(params, s);
}

MagnonBand magnon_band(const ChainParams& params) {
    MagnonBand band;
    band.energies.resize(params.n_sites);
    for (int s = 0; s < params.n_sites; ++s)
        band.energies(s) = magnon_energy(params, s);
    return band;
}

Eigen::MatrixXd one_magnon_hamiltonian(const ChainParams& params) {
    validate(params);
    const int n = params.n_sites;
    const double diag =
        params.beta_j * (4.0 - n) + params.beta_mub * (2.0 - n);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        h(k, k) = diag;
        h((k + 1) % n, k) -= 2.0 * params.beta_j;
        h((k + n - 1) % n, k) -= 2.0 * params.beta_j;
    }
    return h;
}

double band_sum(const ChainParams& params) {
    double sum = 0.0;
    for (int s = 0; s < params.n_sites; ++s)
        sum += std::exp(-band_offset(params, s));
    return sum;
}

double truncated_log_partition(const ChainParams& params) {
    validate_for_truncation(params);
    return std::log1p(std::exp(-2.0 * params.beta_mub) * band_sum(params));
}

TwoSiteDensity truncated_rdm(const ChainParams& params, int distance) {
    validate_for_truncation(params);
    const int n = params.n_sites;
    if (distance < 1 || distance > n - 1)
        throw invalid_input_error("distance out of range 1.." + std::to_string(n - 1));

    const double gap_weight = std::exp(-2.0 * params.beta_mub);
    const double s_band = band_sum(params);
    const double z_shifted = 1.0 + gap_weight * s_band; // Z * e^{beta*eps0}

    std::complex<double> fourier = 0.0;
    for (int s = 0; s < n; ++s) {
        const double angle = 2.0 * std::numbers::pi * distance * s / n;
        fourier += std::polar(std::exp(-band_offset(params, s)), angle);
    }
    if (std::abs(fourier.imag()) > 1e-10 * (1.0 + std::abs(fourier.real())))
        throw numerical_error("truncated_rdm: Fourier sum acquired an imaginary part");

    TwoSiteDensity d;
    d.u_plus = 0.0;
    d.w = gap_weight * s_band / (n * z_shifted);
    d.u_minus = (1.0 + (1.0 - 2.0 / n) * gap_weight * s_band) / z_shifted;
    d.z = gap_weight * fourier.real() / (n * z_shifted);
    return d;
}

TruncationReport truncation_weight(const ChainParams& params) {
    validate(params);
    const double z_shifted = 1.0 + std::exp(-2.0 * params.beta_mub) * band_sum(params);
    // flat two-magnon state at eps0 + 4*muB, bottom of the first neglected band
    const double neglected = std::exp(-4.0 * params.beta_mub);
    TruncationReport report;
    report.retained_weight = z_shifted / (z_shifted + neglected);
    report.leading_neglected_weight = neglected / (z_shifted + neglected);
    return report;
}

} // namespace heisenring
