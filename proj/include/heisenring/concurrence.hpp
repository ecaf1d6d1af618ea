#pragma once

#include <Eigen/Dense>

#include "heisenring/types.hpp"

namespace heisenring {

/// Checks Hermiticity, unit trace and positivity (within tol) of a 4x4
/// density matrix; throws invalid_input_error on violation.
void validate_density(const Eigen::Matrix4cd& rho, double tol = 1e-10);

/// The spin-flipped matrix (sigma^y x sigma^y) conj(rho) (sigma^y x sigma^y),
/// conjugation taken in the computational basis.
Eigen::Matrix4cd spin_flip(const Eigen::Matrix4cd& rho);

/// Wootters concurrence of an arbitrary two-qubit density matrix:
/// C = max(0, l1 - l2 - l3 - l4) with l_i the decreasing positive square
/// roots of the eigenvalues of rho * spin_flip(rho).
///
/// The spectrum is computed from the Hermitian form
/// sqrt(rho) * rho~ * sqrt(rho) (same eigenvalues, numerically stable);
/// eigenvalues in [-1e-12, 0) are clipped to zero, anything lower throws
/// numerical_error.
double wootters_concurrence(const Eigen::Matrix4cd& rho);

/// Closed form for X-form states: C = 2 * max(0, |z| - sqrt(u+ u-)).
double xstate_concurrence(const TwoSiteDensity& d);

/// True iff every entry outside the X pattern (diagonal plus the central
/// anti-diagonal block) has magnitude below tol and the two middle diagonal
/// entries agree within tol.
bool is_x_form(const Eigen::Matrix4cd& rho, double tol = 1e-10);

} // namespace heisenring
