#include "gyro/sweep.hpp"

#include <cmath>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gyro/errors.hpp"
#include "gyro/metrics.hpp"
#include "gyro/spectra.hpp"

namespace gyro {

namespace {

SpectrumRow spectrum_point(double omega, const ValidatedConfig& cfg, double co, double omega_rot_sq,
                           const InputField& input) {
    const NoiseBudget b = noise_budget(omega, cfg, co, omega_rot_sq, input);
    const PhotocurrentPsd psd = photocurrent_psd(omega, cfg, co, omega_rot_sq, input);
    SpectrumRow row;
    row.omega = omega;
    row.n_zpf = b.n_zpf;
    row.n_ba = b.n_ba;
    row.n_ang = b.n_ang;
    row.n_im = b.n_im;
    row.n_add = b.n_add;
    row.n_x_total = b.n_x_total;
    row.n_i_raw = psd.raw;
    row.n_i_sym = psd.symmetric;
    row.signal = signal_psd(omega, cfg, co, omega_rot_sq);
    return row;
}

// Runs body(i) over [0, n) in parallel; the first exception thrown by any
// iteration is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<double> make_grid(double start, double stop, int points, bool log_scale) {
    if (points < 2) throw GyroError(ErrorKind::InvalidArgument, "a grid needs at least 2 points");
    if (!(start < stop)) throw GyroError(ErrorKind::InvalidArgument, "grid start must be < stop");
    if (log_scale && !(start > 0.0)) throw GyroError(ErrorKind::InvalidArgument, "log grid needs start > 0");

    std::vector<double> grid(static_cast<std::size_t>(points));
    const double n = static_cast<double>(points - 1);
    for (int i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / n;
        grid[static_cast<std::size_t>(i)] =
            log_scale ? std::exp(std::log(start) + t * (std::log(stop) - std::log(start))) : start + t * (stop - start);
    }
    grid.front() = start;
    grid.back() = stop;
    return grid;
}

std::vector<SpectrumRow> spectrum_sweep(std::span<const double> omegas, const ValidatedConfig& cfg, double co,
                                        double omega_rot_sq, const InputField& input) {
    std::vector<SpectrumRow> rows(omegas.size());
    parallel_for(omegas.size(), [&](std::size_t i) { rows[i] = spectrum_point(omegas[i], cfg, co, omega_rot_sq, input); });
    return rows;
}

std::vector<SpectrumRow> spectrum_sweep_serial(std::span<const double> omegas, const ValidatedConfig& cfg, double co,
                                               double omega_rot_sq, const InputField& input) {
    std::vector<SpectrumRow> rows;
    rows.reserve(omegas.size());
    for (double w : omegas) rows.push_back(spectrum_point(w, cfg, co, omega_rot_sq, input));
    return rows;
}

std::vector<double> exact_psd_sweep(std::span<const double> omegas, const ValidatedConfig& cfg, double co,
                                    double omega_rot_sq, const InputField& input,
                                    const oracle::OracleOptions& options) {
    std::vector<double> out(omegas.size());
    parallel_for(omegas.size(), [&](std::size_t i) {
        out[i] = oracle::exact_photocurrent_psd(omegas[i], cfg, co, omega_rot_sq, input, options);
    });
    return out;
}

std::vector<double> exact_psd_sweep_serial(std::span<const double> omegas, const ValidatedConfig& cfg, double co,
                                           double omega_rot_sq, const InputField& input,
                                           const oracle::OracleOptions& options) {
    std::vector<double> out;
    out.reserve(omegas.size());
    for (double w : omegas) out.push_back(oracle::exact_photocurrent_psd(w, cfg, co, omega_rot_sq, input, options));
    return out;
}

int sweep_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace gyro
