/**
 * @file spectra.hpp
 * @brief Noise budget of the measured quadrature X = b_x + b_x^dag and the
 *        homodyne photocurrent PSD, after adiabatic elimination of the readout
 *        cavity (omega_b << kappa) at zero thermal occupancy.
 *
 * Vacuum input is the r = 0 case of every squeezed formula. The squeezed
 * branch attenuates both the shot noise and the back-action noise by e^{-2r}.
 */
#pragma once

#include "gyro/params.hpp"

namespace gyro {

/// PSD components of X, in units of 1/rate. `n_x` is the PSD of X itself
/// (zero-point + attenuated back-action + angular); `n_x_total` is the noise
/// referred back to X, with the imprecision noise folded into `n_add`.
struct NoiseBudget {
    double n_zpf = 0.0;
    double n_ba = 0.0;  ///< back-action, before squeeze attenuation
    double n_ang = 0.0;
    double n_im = 0.0;  ///< 1/G^2 with G = 2 sqrt(gamma_x C_o)
    double n_add = 0.0;
    double n_x = 0.0;
    double n_x_total = 0.0;
    bool symmetrized = false;
};

struct PhotocurrentPsd {
    double raw = 0.0;        ///< real part of the unsymmetrized PSD
    double raw_imag = 0.0;   ///< imaginary residue of the cross term; zero up to rounding
    double symmetric = 0.0;  ///< shot + 4 gamma_x C_o N̄_X
};

/// Unsymmetrized N(omega) components.
NoiseBudget noise_budget_raw(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq,
                             const InputField& input);

/// Symmetrized N̄(omega) = (N(omega) + N(-omega)) / 2, by explicit evaluation at +-omega.
NoiseBudget noise_budget(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq,
                         const InputField& input);

PhotocurrentPsd photocurrent_psd(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq,
                                 const InputField& input);

/// Shot-noise floor of the photocurrent: 1 for vacuum, e^{-2r} when squeezed.
double shot_noise(const InputField& input);

/// Closed-form symmetrized budget at omega = omega_b for a low-damped oscillator.
NoiseBudget resonance_budget(const ValidatedConfig& cfg, double co, double omega_rot_sq, const InputField& input);

/// gamma_x, gamma_y <= 1e-2 omega_b; resonance_budget is only an approximation otherwise.
bool resonance_regime_ok(const ValidatedConfig& cfg);

struct SqlReport {
    double co_star = 0.0;  ///< cooperativity minimizing N̄_add(omega_b)
    double gap = 0.0;      ///< N̄_add - N̄_zpf at co_star
    bool reaches_sql = false;
    /// Lower bound quoted for the rotating case, gamma_y/(2A) (e^{-r} - 1/2).
    /// Only a valid bound on `gap` when bound_applies.
    double gap_bound = 0.0;
    bool bound_applies = false;  ///< Omega^2 >= gamma_x gamma_y / 4
    double crossing_r = 0.0;     ///< r at which the exact gap changes sign, ln(1 + 4 Omega^2/(gamma_x gamma_y))
    double bound_crossing_r = 0.0;  ///< r at which gap_bound changes sign, ln 2
};

SqlReport sql_report(const ValidatedConfig& cfg, double omega_rot_sq, const InputField& input);

}  // namespace gyro
