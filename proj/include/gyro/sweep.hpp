/**
 * @file sweep.hpp
 * @brief Frequency-sweep kernels. Each OpenMP kernel has a serial twin with
 *        identical per-point arithmetic, kept as the reference for tests and
 *        the benchmark.
 */
#pragma once

#include <span>
#include <vector>

#include "gyro/oracle.hpp"
#include "gyro/params.hpp"

namespace gyro {

struct SpectrumRow {
    double omega = 0.0;
    double n_zpf = 0.0;
    double n_ba = 0.0;
    double n_ang = 0.0;
    double n_im = 0.0;
    double n_add = 0.0;
    double n_x_total = 0.0;
    double n_i_raw = 0.0;
    double n_i_sym = 0.0;
    double signal = 0.0;

    bool operator==(const SpectrumRow&) const = default;
};

/// Evenly spaced (or log-spaced) grid of `points` values from start to stop inclusive.
std::vector<double> make_grid(double start, double stop, int points, bool log_scale);

/// Symmetrized noise budget, photocurrent PSD and signal at each frequency.
std::vector<SpectrumRow> spectrum_sweep(std::span<const double> omegas, const ValidatedConfig& cfg, double co,
                                        double omega_rot_sq, const InputField& input);
std::vector<SpectrumRow> spectrum_sweep_serial(std::span<const double> omegas, const ValidatedConfig& cfg, double co,
                                               double omega_rot_sq, const InputField& input);

/// Exact (6x6) symmetrized photocurrent PSD at each frequency.
std::vector<double> exact_psd_sweep(std::span<const double> omegas, const ValidatedConfig& cfg, double co,
                                    double omega_rot_sq, const InputField& input,
                                    const oracle::OracleOptions& options = {});
std::vector<double> exact_psd_sweep_serial(std::span<const double> omegas, const ValidatedConfig& cfg, double co,
                                           double omega_rot_sq, const InputField& input,
                                           const oracle::OracleOptions& options = {});

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int sweep_threads();

}  // namespace gyro
