/**
 * @file response.hpp
 * @brief Mechanical susceptibilities of the coupled x/y modes.
 *
 * Fourier convention O(w) = \int dt O(t) e^{+iwt}. All functions take the
 * detuning delta = w - omega_b from mechanical resonance.
 */
#pragma once

#include <complex>

namespace gyro {

using cplx = std::complex<double>;

/// chi_x(delta) = (i delta - gy/2) / [(i delta - gx/2)(i delta - gy/2) + Omega^2]
cplx chi_x(double delta, double omega_rot_sq, double gamma_x, double gamma_y);

/// chi_y(delta) = 1 / (i delta - gy/2)
cplx chi_y(double delta, double gamma_y);

/// d chi_x / d(Omega^2) = -(i delta - gy/2) / D^2, D the denominator of chi_x.
cplx dchi_x_domega2(double delta, double omega_rot_sq, double gamma_x, double gamma_y);

/// Denominator of chi_x, exposed for pole checks.
cplx chi_x_denominator(double delta, double omega_rot_sq, double gamma_x, double gamma_y);

namespace testing {
/// Mutation hook for the verification suite: flips the sign of the Omega^2
/// term in chi_x's denominator. Never enable outside of self-tests.
void set_chi_x_fault(bool enabled) noexcept;
bool chi_x_fault() noexcept;
}  // namespace testing

}  // namespace gyro
