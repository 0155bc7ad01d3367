#include "gyro/spectra.hpp"

#include <cmath>
#include <complex>

#include "gyro/errors.hpp"
#include "gyro/response.hpp"

namespace gyro {

namespace {

void check_inputs(const ValidatedConfig& cfg, double co, double omega_rot_sq, const InputField& input) {
    if (cfg.params.n_th != 0.0) {
        throw GyroError(ErrorKind::ThermalOccupancyUnsupported,
                        "closed-form spectra require n_th = 0; use the exact oracle for n_th > 0");
    }
    if (!(co > 0.0) || !std::isfinite(co)) throw GyroError(ErrorKind::NonPositiveRate, "co must be positive");
    if (!(omega_rot_sq >= 0.0)) throw GyroError(ErrorKind::InvalidArgument, "Omega^2 must be >= 0");
    if (squeeze_r(input) < 0.0) throw GyroError(ErrorKind::NegativeSqueeze, "r must be >= 0");
}

// e^{-2r}; one code path for vacuum (r = 0) and squeezed inputs.
double attenuation(const InputField& input) { return std::exp(-2.0 * squeeze_r(input)); }

NoiseBudget raw_components(double omega, const GyroParams& p, double co, double omega_rot_sq, double atten) {
    const double wb = p.omega_b;
    const cplx chi_minus = chi_x(omega - wb, omega_rot_sq, p.gamma_x, p.gamma_y);
    const cplx chi_plus = chi_x(omega + wb, omega_rot_sq, p.gamma_x, p.gamma_y);
    const double chi_y_sq = std::norm(chi_y(omega - wb, p.gamma_y));

    NoiseBudget b;
    b.n_zpf = p.gamma_x * std::norm(chi_minus);
    b.n_ba = p.gamma_x * co * std::norm(chi_minus - chi_plus);
    b.n_ang = omega_rot_sq * p.gamma_y * std::norm(chi_minus) * chi_y_sq;
    b.n_im = 1.0 / (4.0 * p.gamma_x * co);
    b.n_add = atten * b.n_ba + b.n_im;
    b.n_x = b.n_zpf + atten * b.n_ba + b.n_ang;
    b.n_x_total = b.n_zpf + b.n_add + b.n_ang;
    b.symmetrized = false;
    return b;
}

}  // namespace

double shot_noise(const InputField& input) { return attenuation(input); }

NoiseBudget noise_budget_raw(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq,
                             const InputField& input) {
    check_inputs(cfg, co, omega_rot_sq, input);
    return raw_components(omega, cfg.params, co, omega_rot_sq, attenuation(input));
}

NoiseBudget noise_budget(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq,
                         const InputField& input) {
    check_inputs(cfg, co, omega_rot_sq, input);
    const double atten = attenuation(input);
    const NoiseBudget pos = raw_components(omega, cfg.params, co, omega_rot_sq, atten);
    const NoiseBudget neg = raw_components(-omega, cfg.params, co, omega_rot_sq, atten);

    NoiseBudget b;
    b.n_zpf = 0.5 * (pos.n_zpf + neg.n_zpf);
    b.n_ba = 0.5 * (pos.n_ba + neg.n_ba);
    b.n_ang = 0.5 * (pos.n_ang + neg.n_ang);
    b.n_im = pos.n_im;
    b.n_add = atten * b.n_ba + b.n_im;
    b.n_x = b.n_zpf + atten * b.n_ba + b.n_ang;
    b.n_x_total = b.n_zpf + b.n_add + b.n_ang;
    b.symmetrized = true;
    return b;
}

PhotocurrentPsd photocurrent_psd(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq,
                                 const InputField& input) {
    check_inputs(cfg, co, omega_rot_sq, input);
    const GyroParams& p = cfg.params;
    const double atten = attenuation(input);
    const double gain_sq = 4.0 * p.gamma_x * co;
    const double wb = p.omega_b;

    const NoiseBudget pos = raw_components(omega, p, co, omega_rot_sq, atten);
    const NoiseBudget neg = raw_components(-omega, p, co, omega_rot_sq, atten);

    // cross-correlation between X and the input amplitude quadrature
    const cplx cross = 2.0 * p.gamma_x * co *
                       (chi_x(omega - wb, omega_rot_sq, p.gamma_x, p.gamma_y) -
                        chi_x(omega + wb, omega_rot_sq, p.gamma_x, p.gamma_y) +
                        chi_x(-omega + wb, omega_rot_sq, p.gamma_x, p.gamma_y) -
                        chi_x(-omega - wb, omega_rot_sq, p.gamma_x, p.gamma_y));

    PhotocurrentPsd out;
    const cplx raw = atten + gain_sq * pos.n_x + cross;
    out.raw = raw.real();
    out.raw_imag = raw.imag();
    out.symmetric = atten + gain_sq * 0.5 * (pos.n_x + neg.n_x);
    return out;
}

bool resonance_regime_ok(const ValidatedConfig& cfg) {
    const GyroParams& p = cfg.params;
    return p.gamma_x <= 1.0e-2 * p.omega_b && p.gamma_y <= 1.0e-2 * p.omega_b;
}

NoiseBudget resonance_budget(const ValidatedConfig& cfg, double co, double omega_rot_sq, const InputField& input) {
    check_inputs(cfg, co, omega_rot_sq, input);
    const GyroParams& p = cfg.params;
    const double atten = attenuation(input);
    const double a = p.gamma_x * p.gamma_y / 4.0 + omega_rot_sq;
    const double lorentz = (p.gamma_y * p.gamma_y / 4.0) / (a * a);

    NoiseBudget b;
    b.n_zpf = 0.5 * p.gamma_x * lorentz;
    b.n_ba = p.gamma_x * co * lorentz;
    b.n_ang = 2.0 * omega_rot_sq / p.gamma_y * lorentz;
    b.n_im = 1.0 / (4.0 * p.gamma_x * co);
    b.n_add = atten * b.n_ba + b.n_im;
    b.n_x = b.n_zpf + atten * b.n_ba + b.n_ang;
    b.n_x_total = b.n_zpf + b.n_add + b.n_ang;
    b.symmetrized = true;
    return b;
}

SqlReport sql_report(const ValidatedConfig& cfg, double omega_rot_sq, const InputField& input) {
    if (!(omega_rot_sq >= 0.0)) throw GyroError(ErrorKind::InvalidArgument, "Omega^2 must be >= 0");
    const GyroParams& p = cfg.params;
    const double r = squeeze_r(input);
    if (r < 0.0) throw GyroError(ErrorKind::NegativeSqueeze, "r must be >= 0");

    const double gxgy = p.gamma_x * p.gamma_y;
    const double a = gxgy / 4.0 + omega_rot_sq;
    const double u = 4.0 * omega_rot_sq / gxgy;
    const double e = std::exp(-r);
    const double prefactor = 0.5 * p.gamma_y / a;

    SqlReport rep;
    rep.co_star = std::exp(r) * a / gxgy;
    rep.gap = prefactor * (e - 1.0 / (1.0 + u));
    rep.reaches_sql = rep.gap <= 0.0;
    rep.gap_bound = prefactor * (e - 0.5);
    rep.bound_applies = u >= 1.0;
    rep.crossing_r = std::log1p(u);
    rep.bound_crossing_r = std::log(2.0);
    return rep;
}

}  // namespace gyro
