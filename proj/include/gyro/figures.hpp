/**
 * @file figures.hpp
 * @brief Dimensionless curve tables for the range, SNR and sensitivity figures.
 *
 * All curves use gamma_x = gamma_y = 1 and N_in = 1, so Omega^2 is in units of
 * gamma_x gamma_y, SNR is per photon and sensitivities are sqrt(N_in) DeltaOmega^2.
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gyro/io.hpp"

namespace gyro::figures {

struct FigureOptions {
    std::vector<double> co_values{0.75, 1.0, 1.25};
    std::vector<double> co_values_snr_vs_r{0.25, 0.5, 1.0};
    double r_experiment = 1.73;
    double r_max_sensitivity = 5.0;
    double omega_sq_max_sensitivity = 3.0;
    int points = 201;
};

/// fig2, fig3a, fig3b, fig3c, fig4a, fig4b, fig4c.
const std::vector<std::string>& figure_ids();

/// One table per curve; table.name is the file stem (e.g. "fig2_squeezed_co1").
/// Throws InvalidArgument for an unknown id.
std::vector<io::Table> make_figure(std::string_view id, const FigureOptions& options = {});

/// Writes every table of `id` as <out_dir>/<name>.csv and returns the paths.
std::vector<std::string> write_figure(std::string_view id, const std::string& out_dir,
                                      const FigureOptions& options = {});

}  // namespace gyro::figures
