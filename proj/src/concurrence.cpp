#include "heisenring/concurrence.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace heisenring {

namespace {

constexpr double kClipFloor = -1e-12;

// sigma^y (x) sigma^y in the basis |00>,|01>,|10>,|11>: antidiagonal
// with entries (-1, 1, 1, -1).
Eigen::Matrix4cd flip_matrix() {
    Eigen::Matrix4cd f = Eigen::Matrix4cd::Zero();
    f(0, 3) = -1.0;
    f(1, 2) = 1.0;
    f(2, 1) = 1.0;
    f(3, 0) = -1.0;
    return f;
}

// PSD square root via eigen-decomposition; eigenvalues in [-1e-12, 0)
// clipped to zero.
Eigen::Matrix4cd matrix_sqrt(const Eigen::Matrix4cd& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho);
    if (solver.info() != Eigen::Success)
        throw numerical_error("eigensolve failed on the density matrix");
    Eigen::Vector4d vals = solver.eigenvalues();
    for (int i = 0; i < 4; ++i) {
        if (vals(i) < kClipFloor)
            throw numerical_error("density matrix eigenvalue " + std::to_string(vals(i)) +
                                  " below the -1e-12 floor");
        vals(i) = std::sqrt(std::max(vals(i), 0.0));
    }
    return solver.eigenvectors() * vals.asDiagonal() *
           solver.eigenvectors().adjoint();
}

} // namespace

void validate_density(const Eigen::Matrix4cd& rho, double tol) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol)
        throw invalid_input_error("density matrix is not Hermitian within tolerance");
    if (std::abs(rho.trace() - 1.0) > tol)
        throw invalid_input_error("density matrix trace differs from 1");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tol)
        throw invalid_input_error("density matrix has a negative eigenvalue");
}

Eigen::Matrix4cd spin_flip(const Eigen::Matrix4cd& rho) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw invalid_input_error("spin_flip input is not Hermitian within tolerance");
    static const Eigen::Matrix4cd f = flip_matrix();
    return f * rho.conjugate() * f;
}

double wootters_concurrence(const Eigen::Matrix4cd& rho) {
    validate_density(rho);
    const Eigen::Matrix4cd root = matrix_sqrt(rho);
    // sqrt(rho) rho~ sqrt(rho) is Hermitian PSD with the spectrum of rho*rho~
    const Eigen::Matrix4cd hermitian_form = root * spin_flip(rho) * root;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(hermitian_form,
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw numerical_error("eigensolve failed on rho * rho~");

    std::array<double, 4> lambdas{};
    for (int i = 0; i < 4; ++i) {
        const double v = solver.eigenvalues()(i);
        if (v < kClipFloor)
            throw numerical_error("rho * rho~ eigenvalue " + std::to_string(v) +
                                  " below the -1e-12 floor");
        lambdas[static_cast<std::size_t>(i)] = std::sqrt(std::max(v, 0.0));
    }
    std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
    return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

double xstate_concurrence(const TwoSiteDensity& d) {
    const double geometric = std::sqrt(std::max(d.u_plus, 0.0) * std::max(d.u_minus, 0.0));
    return 2.0 * std::max(0.0, std::abs(d.z) - geometric);
}

bool is_x_form(const Eigen::Matrix4cd& rho, double tol) {
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            const bool diagonal = r == c;
            const bool center = (r == 1 && c == 2) || (r == 2 && c == 1);
            if (!diagonal && !center && std::abs(rho(r, c)) >= tol) return false;
        }
    }
    return std::abs(rho(1, 1) - rho(2, 2)) < tol;
}

} // namespace heisenring
