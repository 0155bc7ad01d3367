#include "gyro/params.hpp"

#include <cmath>
#include <string>

#include "gyro/errors.hpp"

namespace gyro {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonPositiveRate: return "NonPositiveRate";
        case ErrorKind::NegativeSqueeze: return "NegativeSqueeze";
        case ErrorKind::SqueezeOutOfRange: return "SqueezeOutOfRange";
        case ErrorKind::ThermalOccupancyUnsupported: return "ThermalOccupancyUnsupported";
        case ErrorKind::SignalOutOfRange: return "SignalOutOfRange";
        case ErrorKind::EmptyRange: return "EmptyRange";
        case ErrorKind::SingularSystem: return "SingularSystem";
        case ErrorKind::UnstableSystem: return "UnstableSystem";
        case ErrorKind::StepTooLarge: return "StepTooLarge";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

namespace {

void require_positive(double value, const char* name) {
    // !(v > 0) also rejects NaN
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw GyroError(ErrorKind::NonPositiveRate,
                        std::string(name) + " must be positive and finite, got " + std::to_string(value));
    }
}

}  // namespace

double squeeze_r(const InputField& input) noexcept {
    if (const auto* s = std::get_if<SqueezedVacuum>(&input)) return s->r;
    return 0.0;
}

bool is_squeezed(const InputField& input) noexcept {
    return std::holds_alternative<SqueezedVacuum>(input);
}

AngularVelocity::AngularVelocity(double omega_rot_sq) : omega_rot_sq_(omega_rot_sq) {
    if (!(omega_rot_sq >= 0.0) || !std::isfinite(omega_rot_sq)) {
        throw GyroError(ErrorKind::InvalidArgument, "Omega^2 must be finite and >= 0");
    }
}

AngularVelocity AngularVelocity::from_rate(double omega_rot) {
    return AngularVelocity(omega_rot * omega_rot);
}

double AngularVelocity::rate() const noexcept { return std::sqrt(omega_rot_sq_); }

ValidatedConfig validate(const GyroParams& p, const InputField& input, const ValidationOptions& options) {
    require_positive(p.omega_b, "omega_b");
    require_positive(p.kappa, "kappa");
    require_positive(p.gamma_x, "gamma_x");
    require_positive(p.gamma_y, "gamma_y");
    require_positive(p.g, "g");
    require_positive(p.n_in, "n_in");
    require_positive(p.mass, "mass");
    if (!(p.n_th >= 0.0) || !std::isfinite(p.n_th)) {
        throw GyroError(ErrorKind::InvalidArgument, "n_th must be finite and >= 0");
    }
    require_positive(options.adiabatic_threshold, "adiabatic_threshold");

    const double r = squeeze_r(input);
    if (!(r >= 0.0)) {
        throw GyroError(ErrorKind::NegativeSqueeze, "squeeze parameter r must be >= 0, got " + std::to_string(r));
    }
    if (r > options.r_max || !std::isfinite(r)) {
        throw GyroError(ErrorKind::SqueezeOutOfRange,
                        "squeeze parameter r = " + std::to_string(r) + " exceeds r_max = " +
                            std::to_string(options.r_max));
    }

    ValidatedConfig cfg{p, input, options, false};
    cfg.adiabatic_ok = (p.omega_b / p.kappa) <= options.adiabatic_threshold;
    return cfg;
}

ValidatedConfig validate(const ValidatedConfig& config) {
    return validate(config.params, config.input, config.options);
}

double cooperativity(double g, double kappa, double gamma_x) {
    require_positive(g, "g");
    require_positive(kappa, "kappa");
    require_positive(gamma_x, "gamma_x");
    return 4.0 * g * g / (kappa * gamma_x);
}

double g_from_cooperativity(double co, double kappa, double gamma_x) {
    require_positive(co, "co");
    require_positive(kappa, "kappa");
    require_positive(gamma_x, "gamma_x");
    return std::sqrt(co * kappa * gamma_x) / 2.0;
}

double squeeze_db(double r) noexcept { return 10.0 * std::log10(std::exp(2.0 * r)); }

double squeeze_from_db(double db) noexcept { return db * std::log(10.0) / 20.0; }

}  // namespace gyro
