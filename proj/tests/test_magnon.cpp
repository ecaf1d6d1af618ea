#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "heisenring/exact.hpp"
#include "heisenring/magnon.hpp"

using namespace heisenring;

namespace {

// Fourier one-magnon state in the full 2^N space: amplitude
// e^{2*pi*i*s*k/N}/sqrt(N) on the pattern with site k up.
Eigen::VectorXcd fourier_state(int n, int s) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
    for (int k = 0; k < n; ++k)
        psi(Eigen::Index{1} << k) =
            std::polar(1.0 / std::sqrt(n), 2.0 * std::numbers::pi * s * k / n);
    return psi;
}

double max_rdm_error(const TwoSiteDensity& a, const TwoSiteDensity& b) {
    return std::max({std::abs(a.u_plus - b.u_plus), std::abs(a.u_minus - b.u_minus),
                     std::abs(a.w - b.w), std::abs(a.z - b.z)});
}

} // namespace

TEST_SUITE("magnon") {

TEST_CASE("band formula") {
    const ChainParams params{20, 0.6, 3.0};
    CHECK(magnon_energy(params, 0) ==
          doctest::Approx(ground_state_energy(params) + 2.0 * params.beta_mub)
              .epsilon(1e-14));
    CHECK(magnon_energy(params, 10) ==
          doctest::Approx(ground_state_energy(params) + 2.0 * params.beta_mub +
                          8.0 * params.beta_j)
              .epsilon(1e-14));
    CHECK(magnon_energy(params, 5) == doctest::Approx(-63.6).epsilon(1e-14));
    CHECK_THROWS_AS(magnon_energy(params, 20), invalid_input_error);

    // sin(pi/6) = 1/2 makes the s=1 offset exactly 2 at beta_j = 1
    const ChainParams six{6, 1.0, 0.4};
    CHECK(magnon_energy(six, 1) - magnon_energy(six, 0) == doctest::Approx(2.0).epsilon(1e-14));

    const MagnonBand band = magnon_band(params);
    for (int s = 1; s < params.n_sites; ++s)
        CHECK(band.energies(s) ==
              doctest::Approx(band.energies(params.n_sites - s)).epsilon(1e-14));
}

TEST_CASE("one-magnon matrix reproduces the band") {
    const ChainParams params{4, 1.0, 0.0};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(one_magnon_hamiltonian(params));
    const Eigen::VectorXd vals = solver.eigenvalues();
    CHECK(vals(0) == doctest::Approx(-4.0).epsilon(1e-12));
    CHECK(vals(1) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(vals(2) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(vals(3) == doctest::Approx(4.0).epsilon(1e-12));

    // Fourier modes diagonalize the circulant
    const ChainParams twelve{12, 0.7, 1.1};
    const Eigen::MatrixXd h = one_magnon_hamiltonian(twelve);
    for (int s = 0; s < twelve.n_sites; ++s) {
        Eigen::VectorXcd mode(twelve.n_sites);
        for (int k = 0; k < twelve.n_sites; ++k)
            mode(k) = std::polar(1.0 / std::sqrt(12.0),
                                 2.0 * std::numbers::pi * s * k / twelve.n_sites);
        const double lambda = magnon_energy(twelve, s);
        CHECK((h.cast<std::complex<double>>() * mode - lambda * mode).norm() < 1e-10);
    }
}

TEST_CASE("fourier states are eigenstates of the full hamiltonian") {
    for (int n : {4, 6, 8, 10}) {
        const ChainParams params{n, 0.6, 3.0};
        for (int s = 0; s < n; ++s) {
            const Eigen::VectorXcd psi = fourier_state(n, s);
            const Eigen::VectorXcd applied = apply_full_hamiltonian(params, psi);
            CHECK((applied - magnon_energy(params, s) * psi).norm() < 1e-10);
        }
    }
}

TEST_CASE("flat two-magnon state is an eigenstate at eps0 + 4 muB") {
    const ChainParams params{6, 0.7, 1.3};
    const auto patterns = enumerate_sector(params.n_sites, 2);
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(Eigen::Index{1} << params.n_sites);
    for (const std::uint64_t b : patterns)
        psi(static_cast<Eigen::Index>(b)) = 1.0 / std::sqrt(double(patterns.size()));
    const double expected = ground_state_energy(params) + 4.0 * params.beta_mub;
    CHECK((apply_full_hamiltonian(params, psi) - expected * psi).norm() < 1e-10);
}

TEST_CASE("truncated partition limits") {
    // collapsing band: only s = 0 survives
    CHECK(truncated_log_partition({8, 1e3, 2.0}) ==
          doctest::Approx(std::log1p(std::exp(-4.0))).epsilon(1e-12));
    // degenerate band of N states at J -> 0
    CHECK(truncated_log_partition({8, 1e-12, 2.0}) ==
          doctest::Approx(std::log1p(8.0 * std::exp(-4.0))).epsilon(1e-9));
    // four-term hand sum, sin^2 in {0, 1/2, 1, 1/2}
    const double hand =
        std::log1p(std::exp(-4.0) * (1.0 + 2.0 * std::exp(-2.0) + std::exp(-4.0)));
    CHECK(truncated_log_partition({4, 0.5, 2.0}) == doctest::Approx(hand).epsilon(1e-14));
}

TEST_CASE("truncated rdm structure") {
    const ChainParams params{8, 0.6, 3.0};
    for (int d = 1; d < params.n_sites; ++d) {
        const TwoSiteDensity rdm = truncated_rdm(params, d);
        CHECK(rdm.u_plus == 0.0);
        CHECK(rdm.u_plus + 2.0 * rdm.w + rdm.u_minus == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(rdm.z) <= rdm.w + 1e-15);
        const TwoSiteDensity mirrored = truncated_rdm(params, params.n_sites - d);
        CHECK(rdm.z == doctest::Approx(mirrored.z).epsilon(1e-12).scale(1.0));
    }
    CHECK_THROWS_AS(truncated_rdm(params, 0), invalid_input_error);
    CHECK_THROWS_AS(truncated_rdm(params, 8), invalid_input_error);

    const TwoSiteDensity frozen = truncated_rdm({8, 0.6, 50.0}, 1);
    CHECK(frozen.u_minus > 1.0 - 1e-12);
    CHECK(frozen.w < 1e-40);
    CHECK(std::abs(frozen.z) < 1e-40);
}

TEST_CASE("truncated rdm agrees with the oracle within the reported bound") {
    const ChainParams params{8, 0.6, 3.0};
    const ThermalState state = solve_thermal(params);
    const double bound = 5.0 * truncation_weight(params).leading_neglected_weight;
    for (int d = 1; d < params.n_sites; ++d)
        CHECK(max_rdm_error(truncated_rdm(params, d), two_site_rdm(state, 0, d)) <= bound);
}

TEST_CASE("oracle error shrinks as the field grows") {
    double errs[2];
    int idx = 0;
    for (const double bmu : {2.0, 5.0}) {
        const ChainParams params{8, 0.6, bmu};
        const ThermalState state = solve_thermal(params);
        double worst = 0.0;
        for (int d = 1; d < params.n_sites; ++d)
            worst = std::max(worst,
                             max_rdm_error(truncated_rdm(params, d), two_site_rdm(state, 0, d)));
        errs[idx++] = worst;
    }
    CHECK(errs[1] < errs[0]);
}

TEST_CASE("truncation report") {
    const ChainParams params{20, 0.6, 3.0};
    const TruncationReport report = truncation_weight(params);
    CHECK(report.retained_weight + report.leading_neglected_weight ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(report.retained_weight >= 0.0);
    CHECK(report.retained_weight <= 1.0);
    // approx e^{-4*beta_mub} / (Z e^{beta eps0})
    const double z_shifted = std::exp(truncated_log_partition(params));
    CHECK(report.leading_neglected_weight ==
          doctest::Approx(std::exp(-12.0) / z_shifted).epsilon(1e-4));

    CHECK(truncation_weight({20, 0.6, 300.0}).retained_weight == doctest::Approx(1.0));
}

} // TEST_SUITE
