#include "gyro/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gyro/errors.hpp"
#include "gyro/response.hpp"
#include "gyro/spectra.hpp"

namespace gyro {

namespace {

void check_co(double co) {
    if (!(co > 0.0) || !std::isfinite(co)) throw GyroError(ErrorKind::NonPositiveRate, "co must be positive");
}

void check_omega_sq(double omega_rot_sq) {
    if (!(omega_rot_sq >= 0.0) || !std::isfinite(omega_rot_sq)) {
        throw GyroError(ErrorKind::InvalidArgument, "Omega^2 must be finite and >= 0");
    }
}

double rate_a(const GyroParams& p, double omega_rot_sq) { return p.gamma_x * p.gamma_y / 4.0 + omega_rot_sq; }

// Signal amplitude <I(w)> - <I(-w)> up to the constant phase i:
// 2 gamma_x C_o * 2 sqrt(N_in) * (2 Re chi_x(w-wb) - 2 Re chi_x(w+wb)).
double signal_amplitude(double omega, const GyroParams& p, double co, double omega_rot_sq) {
    const double re_minus = chi_x(omega - p.omega_b, omega_rot_sq, p.gamma_x, p.gamma_y).real();
    const double re_plus = chi_x(omega + p.omega_b, omega_rot_sq, p.gamma_x, p.gamma_y).real();
    return 4.0 * p.gamma_x * co * std::sqrt(p.n_in) * 2.0 * (re_minus - re_plus);
}

double signal_amplitude_derivative(double omega, const GyroParams& p, double co, double omega_rot_sq) {
    const double d_minus = dchi_x_domega2(omega - p.omega_b, omega_rot_sq, p.gamma_x, p.gamma_y).real();
    const double d_plus = dchi_x_domega2(omega + p.omega_b, omega_rot_sq, p.gamma_x, p.gamma_y).real();
    return 4.0 * p.gamma_x * co * std::sqrt(p.n_in) * 2.0 * (d_minus - d_plus);
}

double ratio_or_inf(double numerator, double denominator) {
    if (denominator == 0.0) return std::numeric_limits<double>::infinity();
    return numerator / std::abs(denominator);
}

}  // namespace

double signal_psd(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq) {
    check_co(co);
    check_omega_sq(omega_rot_sq);
    const GyroParams& p = cfg.params;
    const cplx cm = chi_x(omega - p.omega_b, omega_rot_sq, p.gamma_x, p.gamma_y);
    const cplx cp = chi_x(omega + p.omega_b, omega_rot_sq, p.gamma_x, p.gamma_y);
    const cplx bracket = cm + std::conj(cm) - cp - std::conj(cp);
    return 16.0 * p.n_in * p.gamma_x * p.gamma_x * co * co * std::norm(bracket);
}

double signal_resonance(const ValidatedConfig& cfg, double co, double omega_rot_sq) {
    check_co(co);
    check_omega_sq(omega_rot_sq);
    const GyroParams& p = cfg.params;
    const double a = rate_a(p, omega_rot_sq);
    const double gg = p.gamma_x * p.gamma_y;
    return 16.0 * p.n_in * co * co * gg * gg / (a * a);
}

double solve_omega_sq_from_signal(const ValidatedConfig& cfg, double co, double signal) {
    check_co(co);
    if (!(signal > 0.0)) throw GyroError(ErrorKind::SignalOutOfRange, "signal must be positive");
    const GyroParams& p = cfg.params;
    const double gg = p.gamma_x * p.gamma_y;
    const double omega_sq = 4.0 * co * gg * std::sqrt(p.n_in / signal) - gg / 4.0;
    if (omega_sq < 0.0) {
        throw GyroError(ErrorKind::SignalOutOfRange,
                        "signal exceeds its Omega = 0 value; inversion gives Omega^2 = " + std::to_string(omega_sq));
    }
    return omega_sq;
}

double snr_per_photon(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq,
                      const InputField& input) {
    const double s = signal_psd(omega, cfg, co, omega_rot_sq);
    const double n = photocurrent_psd(omega, cfg, co, omega_rot_sq, input).symmetric;
    return s / (n * cfg.params.n_in);
}

double snr_per_photon_resonance(const ValidatedConfig& cfg, double co, double omega_rot_sq,
                                const InputField& input) {
    check_co(co);
    check_omega_sq(omega_rot_sq);
    const GyroParams& p = cfg.params;
    const double gg = p.gamma_x * p.gamma_y;
    const double a = rate_a(p, omega_rot_sq);
    const double k = gg * gg / (a * a);
    const double e2r = std::exp(2.0 * squeeze_r(input));
    return 16.0 * e2r * co * co * k / (1.0 + co * (co + 2.0 * e2r * a / gg) * k);
}

double range_slope(double r) {
    const double e2r = std::exp(2.0 * r);
    // sqrt(e^{4r} + 16 e^{2r} - 1) - e^{2r} = (16 e^{2r} - 1) / (sqrt(...) + e^{2r})
    const double root = std::sqrt(e2r * e2r + 16.0 * e2r - 1.0);
    return (16.0 * e2r - 1.0) / (root + e2r);
}

double co_min(const InputField& input) {
    if (!is_squeezed(input)) return 1.0 / 12.0;
    const double r = squeeze_r(input);
    if (r < 0.0) throw GyroError(ErrorKind::NegativeSqueeze, "r must be >= 0");
    return 0.25 / range_slope(r);
}

double omega_range(double co, const InputField& input) {
    check_co(co);
    const double floor = co_min(input);
    if (co < floor) {
        throw GyroError(ErrorKind::EmptyRange, "co = " + std::to_string(co) + " is below co_min = " +
                                                   std::to_string(floor));
    }
    const double slope = is_squeezed(input) ? range_slope(squeeze_r(input)) : 3.0;
    return std::max(0.0, slope * co - 0.25);
}

DesignBounds design_bounds(double co, const InputField& input) {
    return DesignBounds{omega_range(co, input), co_min(input)};
}

double sensitivity(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq,
                   const InputField& input) {
    const double noise = photocurrent_psd(omega, cfg, co, omega_rot_sq, input).symmetric;
    const double slope = signal_amplitude_derivative(omega, cfg.params, co, omega_rot_sq);
    return ratio_or_inf(std::sqrt(noise), slope);
}

double sensitivity_finite_difference(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq,
                                     const InputField& input) {
    const GyroParams& p = cfg.params;
    const double noise = photocurrent_psd(omega, cfg, co, omega_rot_sq, input).symmetric;
    const double h = 1.0e-6 * std::max(omega_rot_sq, p.gamma_x * p.gamma_y);
    double slope = 0.0;
    if (omega_rot_sq >= h) {
        slope = (signal_amplitude(omega, p, co, omega_rot_sq + h) - signal_amplitude(omega, p, co, omega_rot_sq - h)) /
                (2.0 * h);
    } else {
        // Omega^2 is bounded below by 0: second-order one-sided difference
        slope = (-3.0 * signal_amplitude(omega, p, co, omega_rot_sq) +
                 4.0 * signal_amplitude(omega, p, co, omega_rot_sq + h) -
                 signal_amplitude(omega, p, co, omega_rot_sq + 2.0 * h)) /
                (2.0 * h);
    }
    return ratio_or_inf(std::sqrt(noise), slope);
}

double sensitivity_resonance(const ValidatedConfig& cfg, double co, double omega_rot_sq, const InputField& input) {
    check_co(co);
    check_omega_sq(omega_rot_sq);
    const GyroParams& p = cfg.params;
    const double gg = p.gamma_x * p.gamma_y;
    const double a = rate_a(p, omega_rot_sq);
    const double sqrt_n = std::sqrt(p.n_in);

    if (!is_squeezed(input)) {
        return a / (4.0 * sqrt_n) * (1.0 + a / (co * gg));
    }
    const double r = squeeze_r(input);
    const double x = co * gg;
    // (a + e^{2r} x)^2 + (1 - e^{4r}) x^2 without the cancellation at large r
    const double radicand = (a + x) * (a + x) + 2.0 * std::expm1(2.0 * r) * a * x;
    return std::exp(-r) * a / (4.0 * sqrt_n * x) * std::sqrt(radicand);
}

double squeezed_sensitivity_floor(const ValidatedConfig& cfg, double co, double omega_rot_sq, double r) {
    check_co(co);
    check_omega_sq(omega_rot_sq);
    const GyroParams& p = cfg.params;
    const double a = rate_a(p, omega_rot_sq);
    return std::sqrt(2.0 * (1.0 + std::exp(-2.0 * r))) * std::pow(a, 1.5) /
           (4.0 * std::sqrt(p.n_in * co * p.gamma_x * p.gamma_y));
}

SensitivityLimit sensitivity_limit(const ValidatedConfig& cfg, double omega_rot_sq, const InputField& input) {
    check_omega_sq(omega_rot_sq);
    const GyroParams& p = cfg.params;
    const double a = rate_a(p, omega_rot_sq);
    SensitivityLimit out;
    out.co_at_equality = a / (p.gamma_x * p.gamma_y);
    if (!is_squeezed(input)) {
        out.limit = a / (2.0 * std::sqrt(p.n_in));
    } else {
        out.limit = squeezed_sensitivity_floor(cfg, out.co_at_equality, omega_rot_sq, squeeze_r(input));
    }
    return out;
}

SensitivityRatio sensitivity_ratio(double co, double omega_rot_sq, const ValidatedConfig& cfg, double r) {
    check_co(co);
    check_omega_sq(omega_rot_sq);
    if (r < 0.0) throw GyroError(ErrorKind::NegativeSqueeze, "r must be >= 0");
    const GyroParams& p = cfg.params;
    const double a = rate_a(p, omega_rot_sq);
    const double x = co * p.gamma_x * p.gamma_y;
    const double e = std::exp(-2.0 * r);
    SensitivityRatio out;
    out.ratio = std::sqrt(e + 2.0 * (1.0 - e) * x * a / ((a + x) * (a + x)));
    out.bound = std::sqrt(0.5 * (1.0 + e));
    return out;
}

MetricsReport metrics_report(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq,
                             const InputField& input) {
    MetricsReport m;
    m.signal = signal_psd(omega, cfg, co, omega_rot_sq);
    m.psd = photocurrent_psd(omega, cfg, co, omega_rot_sq, input).symmetric;
    m.snr_per_photon = m.signal / (m.psd * cfg.params.n_in);
    m.sensitivity = sensitivity(omega, cfg, co, omega_rot_sq, input);
    const SensitivityLimit lim = sensitivity_limit(cfg, omega_rot_sq, input);
    m.limit = lim.limit;
    m.co_at_equality = lim.co_at_equality;
    m.ratio_to_vacuum = sensitivity_ratio(co, omega_rot_sq, cfg, squeeze_r(input)).ratio;
    m.signal_resonance = signal_resonance(cfg, co, omega_rot_sq);
    m.snr_per_photon_resonance = snr_per_photon_resonance(cfg, co, omega_rot_sq, input);
    m.sensitivity_resonance = sensitivity_resonance(cfg, co, omega_rot_sq, input);
    return m;
}

}  // namespace gyro
