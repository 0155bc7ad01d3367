/**
 * @file classical.hpp
 * @brief Classical check of the rotating-frame Hamiltonian of the double-mode oscillator.
 *
 * The platform frame rotates counterclockwise with angle theta(t) = Omega t;
 * coordinates map as r = R(theta) r_o with R = [[cos, sin], [-sin, cos]].
 * Canonical momenta in the rotating frame are p_x = m x' - m Omega y,
 * p_y = m y' + m Omega x, which equals R(theta) applied to the inertial momentum.
 */
#pragma once

#include <cstddef>
#include <vector>

namespace gyro::classical {

enum class Frame { Inertial, Rotating };

struct ClassicalState {
    double x = 0.0;
    double y = 0.0;
    double px = 0.0;
    double py = 0.0;
    Frame frame = Frame::Rotating;
};

/// Mass, spring constants and the equilibrium position (x_e, y_e), which is
/// fixed in the rotating frame. In the inertial frame the anchor rotates:
/// r_oe(t) = R(theta)^T (x_e, y_e).
struct OscillatorSpec {
    double mass = 1.0;
    double k_x = 1.0;
    double k_y = 1.0;
    double x_e = 0.0;
    double y_e = 0.0;

    double omega_x() const;
    double omega_y() const;
};

/// x_zpf = sqrt(hbar / (2 m omega_b)), the scale of X = x / x_zpf.
double zero_point_amplitude(double mass, double omega_b);

ClassicalState to_rotating(const ClassicalState& inertial, double theta);
ClassicalState to_inertial(const ClassicalState& rotating, double theta);

enum class RotatingModel {
    Full,           ///< Coriolis and centrifugal terms
    NoCentrifugal,  ///< -m Omega^2 (x^2 + y^2)/2 dropped from the Hamiltonian
};

/// Time derivative of (x, y, px, py) under the inertial Hamiltonian with the
/// potential rotated by theta.
ClassicalState inertial_rhs(const ClassicalState& s, const OscillatorSpec& spec, double theta);

/// Time derivative of (x, y, px, py) under the rotating-frame Hamiltonian.
ClassicalState rotating_rhs(const ClassicalState& s, const OscillatorSpec& spec, double omega_rot,
                            RotatingModel model = RotatingModel::Full);

double inertial_energy(const ClassicalState& s, const OscillatorSpec& spec, double theta);
double rotating_hamiltonian(const ClassicalState& s, const OscillatorSpec& spec, double omega_rot,
                            RotatingModel model = RotatingModel::Full);

struct FrameCheckOptions {
    RotatingModel model = RotatingModel::Full;
    std::size_t record_stride = 0;  ///< keep every n-th step in the result (0: none)
};

struct FrameSample {
    double t = 0.0;
    ClassicalState rotating;
    ClassicalState inertial;
};

struct FrameCheckResult {
    double max_deviation = 0.0;       ///< max |r_rot(t) - R(theta) r_o(t)|, m
    double amplitude = 0.0;           ///< max |r_o(t) - r_oe(t)| of the inertial trajectory
    double max_momentum_residual = 0.0;  ///< max |p - (m r' + canonical shift)| / max |p|, r' by central difference
    double energy_drift = 0.0;        ///< relative drift of the inertial energy (meaningful for Omega = 0)
    std::size_t steps = 0;
    std::vector<FrameSample> trajectory;
};

/// Integrates the inertial and rotating-frame equations with fixed-step RK4
/// from the same physical initial condition and compares the positions.
/// Throws StepTooLarge when dt max(omega_x, omega_y, |Omega|) >= 0.1.
FrameCheckResult rotating_frame_check(const ClassicalState& initial, const OscillatorSpec& spec, double omega_rot,
                                      double duration, double dt, const FrameCheckOptions& options = {});

}  // namespace gyro::classical
