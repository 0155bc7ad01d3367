/**
 * @file metrics.hpp
 * @brief Signal, SNR, operating range and sensitivity of the gyroscope.
 *
 * Metrics are parameterized by the cooperativity C_o directly. Range bounds
 * are returned in units of gamma_x gamma_y. A signal is readable when the SNR
 * per photon is at least 1.
 */
#pragma once

#include "gyro/params.hpp"

namespace gyro {

/// S(omega) = 16 N_in gamma_x^2 C_o^2 |chi_x(w-wb) + c.c. - chi_x(w+wb) - c.c.|^2.
double signal_psd(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq);

/// S(omega_b) ~ 16 N_in C_o^2 gamma_x^2 gamma_y^2 / (gamma_x gamma_y/4 + Omega^2)^2.
double signal_resonance(const ValidatedConfig& cfg, double co, double omega_rot_sq);

/// Inverts signal_resonance for Omega^2. Throws SignalOutOfRange when the
/// measured signal exceeds the Omega = 0 value (negative Omega^2).
double solve_omega_sq_from_signal(const ValidatedConfig& cfg, double co, double signal);

/// Exact SNR(omega)/N_in = S(omega) / (N_in N̄_I(omega)).
double snr_per_photon(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq,
                      const InputField& input);

/// Closed-form SNR per photon at omega_b. The squeezed form is
///   16 e^{2r} C^2 K / (1 + C (C + 2 e^{2r} A/(gx gy)) K),  A = gx gy/4 + Omega^2,
/// K = gx^2 gy^2 / A^2, which is S(omega_b)/N̄_I(omega_b) of the squeezed spectra.
double snr_per_photon_resonance(const ValidatedConfig& cfg, double co, double omega_rot_sq,
                                const InputField& input);

struct DesignBounds {
    double omega_sq_ub = 0.0;  ///< upper bound on Omega^2 / (gamma_x gamma_y)
    double co_min = 0.0;
};

/// sqrt(e^{4r} + 16 e^{2r} - 1) - e^{2r}, evaluated without cancellation. Equals 3 at r = 0.
double range_slope(double r);

/// Minimum cooperativity for a non-empty range: 1/12 for vacuum.
double co_min(const InputField& input);

/// Upper bound on Omega^2/(gamma_x gamma_y) at which SNR per photon = 1.
/// Throws EmptyRange when co < co_min(input).
double omega_range(double co, const InputField& input);

DesignBounds design_bounds(double co, const InputField& input);

/// General sensitivity, sqrt(N̄_I) / |d_{Omega^2} (<I(w)> - <I(-w)>)|, using the
/// analytic derivative of chi_x. Returns +inf where the derivative vanishes.
double sensitivity(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq,
                   const InputField& input);

/// Same quantity with a central finite difference of the signal amplitude
/// (relative step 1e-6); cross-check for sensitivity().
double sensitivity_finite_difference(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq,
                                     const InputField& input);

/// Closed-form sensitivity at omega_b (vacuum and squeezed forms).
double sensitivity_resonance(const ValidatedConfig& cfg, double co, double omega_rot_sq, const InputField& input);

/// Squeezed sensitivity floor at fixed C_o:
///   sqrt(2(1+e^{-2r})) A^{3/2} / (4 sqrt(N_in C_o gx gy)).
/// Also the r -> infinity asymptote of sensitivity_resonance at fixed C_o.
double squeezed_sensitivity_floor(const ValidatedConfig& cfg, double co, double omega_rot_sq, double r);

struct SensitivityLimit {
    double limit = 0.0;
    double co_at_equality = 0.0;  ///< (gx gy/4 + Omega^2) / (gx gy)
};

/// Vacuum: A / (2 sqrt(N_in)). Squeezed: squeezed_sensitivity_floor at co_at_equality.
/// For vacuum the bound holds for C_o <= co_at_equality only; sensitivity_resonance
/// keeps decreasing with C_o beyond it.
SensitivityLimit sensitivity_limit(const ValidatedConfig& cfg, double omega_rot_sq, const InputField& input);

struct SensitivityRatio {
    double ratio = 1.0;  ///< squeezed / vacuum resonance sensitivity
    double bound = 1.0;  ///< (sqrt 2 / 2) sqrt(1 + e^{-2r})
};

SensitivityRatio sensitivity_ratio(double co, double omega_rot_sq, const ValidatedConfig& cfg, double r);

struct MetricsReport {
    double signal = 0.0;
    double psd = 0.0;
    double snr_per_photon = 0.0;
    double sensitivity = 0.0;
    double limit = 0.0;
    double ratio_to_vacuum = 1.0;

    double signal_resonance = 0.0;
    double snr_per_photon_resonance = 0.0;
    double sensitivity_resonance = 0.0;
    double co_at_equality = 0.0;
};

MetricsReport metrics_report(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq,
                             const InputField& input);

}  // namespace gyro
