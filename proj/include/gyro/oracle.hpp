/**
 * @file oracle.hpp
 * @brief Brute-force reference solutions of the linearized two-cavity model.
 *
 * The readout cavity is kept as a dynamical mode (no adiabatic elimination).
 * Modes and inputs are ordered (a, a^dag, b_x, b_x^dag, b_y, b_y^dag) and
 * (alpha_in, alpha_in^dag, f_x, f_x^dag, f_y, f_y^dag); the equations of
 * motion are v' = A v + B u, with <u_j(t) u_k(t')> = K_jk delta(t - t') for
 * the fluctuating part of the inputs.
 */
#pragma once

#include <Eigen/Dense>
#include <complex>

#include "gyro/params.hpp"

namespace gyro::oracle {

using cplx = std::complex<double>;
using Matrix6c = Eigen::Matrix<cplx, 6, 6>;
using Matrix6d = Eigen::Matrix<double, 6, 6>;
using ModeVector = Eigen::Matrix<cplx, 6, 1>;

enum Mode : int { kA = 0, kADag = 1, kBx = 2, kBxDag = 3, kBy = 4, kByDag = 5 };

/// Which quadrature of the input a squeezed vacuum reduces. The printed
/// normal-ordered correlations <a a^dag> = cosh^2 r, <a^dag a> = sinh^2 r need
/// an anomalous term <a a> = M to be a complete Gaussian state:
///   Amplitude: M = -sinh r cosh r, reduces alpha_in + alpha_in^dag (shot noise -> e^{-2r})
///   Phase:     M = +sinh r cosh r, reduces alpha_in - alpha_in^dag (back-action -> e^{-2r})
enum class SqueezedQuadrature { Amplitude, Phase };

struct OracleOptions {
    SqueezedQuadrature quadrature = SqueezedQuadrature::Amplitude;
};

/// Drift matrix A in the mode basis. C_o >= 0 sets g = sqrt(C_o kappa gamma_x)/2.
Matrix6c drift_matrix(const GyroParams& params, double co, double omega_rot_sq);

/// Diagonal noise-input matrix B.
Matrix6d input_matrix(const GyroParams& params);

/// Input correlation matrix K (mode basis) for the quantum input and thermal
/// baths with occupancy params.n_th.
Matrix6c input_correlation(const InputField& input, double n_th, const OracleOptions& options = {});

/// T(omega) = (-i omega - A)^{-1} B: maps inputs to modes at frequency omega.
/// Throws SingularSystem for a numerically singular system matrix.
Matrix6c exact_transfer_matrix(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq);

/// Symmetrized PSD of I = alpha_out + alpha_out^dag, alpha_out = alpha_in + sqrt(kappa) a.
double exact_photocurrent_psd(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq,
                              const InputField& input, const OracleOptions& options = {});

/// Unsymmetrized photocurrent PSD N_I(omega); complex to expose any imaginary residue.
cplx exact_photocurrent_psd_raw(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq,
                                const InputField& input, const OracleOptions& options = {});

/// Symmetrized PSD of X = b_x + b_x^dag from the exact transfer matrix.
double exact_quadrature_psd(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq,
                            const InputField& input, const OracleOptions& options = {});

/// Mode-to-quadrature map q = Q v, pairs (o, o^dag) -> (o + o^dag, -i(o - o^dag)).
Matrix6c quadrature_transform();

/// Real drift matrix in the quadrature basis, Q A Q^{-1}.
Matrix6d quadrature_drift(const GyroParams& params, double co, double omega_rot_sq);

/// Symmetrized diffusion of the quadrature inputs, Re sym(Q K Q^T).
Matrix6d quadrature_diffusion(const InputField& input, double n_th, const OracleOptions& options = {});

/// Solves A S + S A^T + Q = 0 for the symmetric steady-state covariance S.
/// Throws UnstableSystem unless every eigenvalue of A has negative real part.
Matrix6d solve_lyapunov(const Matrix6d& drift, const Matrix6d& diffusion);

/// Steady-state symmetrized covariance of the quadratures (Xa, Pa, Xbx, Pbx, Xby, Pby).
Matrix6d steady_state_covariance(const ValidatedConfig& cfg, double co, double omega_rot_sq, const InputField& input,
                                 const OracleOptions& options = {});

/// (1/2pi) \int N̄_X d omega over the whole real line, N̄_X from the closed-form spectra.
double spectral_variance(const ValidatedConfig& cfg, double co, double omega_rot_sq, const InputField& input);

struct VarianceComparison {
    double lyapunov = 0.0;
    double spectral = 0.0;
    double relative_difference = 0.0;
};

/// Var(X) from the Lyapunov route and from the integrated spectrum.
VarianceComparison steady_state_variance(const ValidatedConfig& cfg, double co, double omega_rot_sq,
                                         const InputField& input, const OracleOptions& options = {});

}  // namespace gyro::oracle
