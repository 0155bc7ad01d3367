// Serial vs OpenMP sweep timing. Usage: gyro_bench [points] [repeats]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "gyro/sweep.hpp"

namespace {

template <class F>
double best_of(int repeats, F&& f) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (dt < best) best = dt;
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const int points = argc > 1 ? std::atoi(argv[1]) : 200000;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

    const gyro::ValidatedConfig cfg = gyro::validate(gyro::GyroParams{}, gyro::Vacuum{});
    const double wb = cfg.params.omega_b;
    const auto grid = gyro::make_grid(wb - 50.0, wb + 50.0, points, false);
    const gyro::InputField input = gyro::SqueezedVacuum{1.0};

    std::vector<gyro::SpectrumRow> a, b;
    const double t_serial = best_of(repeats, [&] { a = gyro::spectrum_sweep_serial(grid, cfg, 1.0, 0.5, input); });
    const double t_omp = best_of(repeats, [&] { b = gyro::spectrum_sweep(grid, cfg, 1.0, 0.5, input); });

    const int exact_points = points / 10;
    const auto egrid = gyro::make_grid(wb - 50.0, wb + 50.0, exact_points, false);
    std::vector<double> ea, eb;
    const double te_serial = best_of(repeats, [&] { ea = gyro::exact_psd_sweep_serial(egrid, cfg, 1.0, 0.5, input); });
    const double te_omp = best_of(repeats, [&] { eb = gyro::exact_psd_sweep(egrid, cfg, 1.0, 0.5, input); });

    std::printf("threads %d\n", gyro::sweep_threads());
    std::printf("%-16s %10s %12s %12s %8s %s\n", "kernel", "points", "serial_s", "openmp_s", "speedup", "identical");
    std::printf("%-16s %10d %12.4f %12.4f %8.2f %s\n", "spectrum", points, t_serial, t_omp, t_serial / t_omp,
                a == b ? "yes" : "NO");
    std::printf("%-16s %10d %12.4f %12.4f %8.2f %s\n", "exact_psd", exact_points, te_serial, te_omp,
                te_serial / te_omp, ea == eb ? "yes" : "NO");
    return (a == b && ea == eb) ? 0 : 1;
}
