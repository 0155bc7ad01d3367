/**
 * @file params.hpp
 * @brief Physical parameters of the two-cavity gyroscope and the quantum input field.
 *
 * Every rate is an angular frequency in rad/s. The readout cavity is driven on
 * resonance with drive phase pi/2, and squeezed inputs use squeeze phase pi;
 * these are fixed properties of the model and are not stored.
 */
#pragma once

#include <variant>

namespace gyro {

/// Physical rates and couplings. omega_x = omega_y = omega_b and g_1 = g_2 = g.
struct GyroParams {
    double omega_b = 1.0e4;  ///< mechanical frequency
    double kappa = 1.0e7;    ///< readout-cavity decay rate
    double gamma_x = 1.0;    ///< x-mode damping
    double gamma_y = 1.0;    ///< y-mode damping
    double g = 1581.1388300841897;  ///< linearized coupling (C_o = 1 with the defaults)
    double n_in = 1.0;       ///< input photon number |alpha|^2
    double mass = 1.0;       ///< effective mass, kg (classical frame check only)
    double n_th = 0.0;       ///< thermal phonon number

    bool operator==(const GyroParams&) const = default;
};

struct Vacuum {
    bool operator==(const Vacuum&) const = default;
};

/// Single-mode squeezed vacuum with squeeze phase pi.
struct SqueezedVacuum {
    double r = 0.0;
    bool operator==(const SqueezedVacuum&) const = default;
};

using InputField = std::variant<Vacuum, SqueezedVacuum>;

/// Squeeze parameter of an input; vacuum is r = 0.
double squeeze_r(const InputField& input) noexcept;

/// True for SqueezedVacuum (including r = 0).
bool is_squeezed(const InputField& input) noexcept;

/// Squared angular velocity Omega^2 of the platform, (rad/s)^2.
class AngularVelocity {
public:
    AngularVelocity() = default;
    explicit AngularVelocity(double omega_rot_sq);
    static AngularVelocity from_rate(double omega_rot);

    double squared() const noexcept { return omega_rot_sq_; }
    double rate() const noexcept;

private:
    double omega_rot_sq_ = 0.0;
};

struct ValidationOptions {
    double adiabatic_threshold = 1.0e-2;
    double r_max = 5.0;

    bool operator==(const ValidationOptions&) const = default;
};

/// Output of validate(). adiabatic_ok marks whether omega_b/kappa is small
/// enough for the adiabatically eliminated spectra to be trusted.
struct ValidatedConfig {
    GyroParams params;
    InputField input;
    ValidationOptions options;
    bool adiabatic_ok = false;

    bool operator==(const ValidatedConfig&) const = default;
};

ValidatedConfig validate(const GyroParams& params, const InputField& input,
                         const ValidationOptions& options = {});
ValidatedConfig validate(const ValidatedConfig& config);

/// C_o = 4 g^2 / (kappa gamma_x).
double cooperativity(double g, double kappa, double gamma_x);
/// Inverse of cooperativity(): g = sqrt(C_o kappa gamma_x) / 2.
double g_from_cooperativity(double co, double kappa, double gamma_x);

/// Squeezing in dB: 10 log10(e^{2r}).
double squeeze_db(double r) noexcept;
double squeeze_from_db(double db) noexcept;

}  // namespace gyro
