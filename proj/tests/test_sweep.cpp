#include <doctest.h>

#include <cmath>

#include "gyro/errors.hpp"
#include "gyro/spectra.hpp"
#include "gyro/sweep.hpp"
#include "support/gen.hpp"

using namespace gyro;

TEST_CASE("grids") {
    const auto lin = make_grid(-1.0, 1.0, 5, false);
    CHECK(lin == std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0});
    const auto lg = make_grid(1e-2, 1e2, 5, true);
    CHECK(lg.front() == 1e-2);
    CHECK(lg.back() == 1e2);
    CHECK(lg[2] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(make_grid(0.0, 1.0, 1, false), GyroError);
    CHECK_THROWS_AS(make_grid(0.0, 1.0, 4, true), GyroError);
}

TEST_CASE("parallel sweeps equal their serial references (property)") {
    gen::Gen g(701);
    CHECK(sweep_threads() >= 1);
    for (int i = 0; i < 10; ++i) {
        const ValidatedConfig cfg = validate(g.params(), Vacuum{});
        const double wb = cfg.params.omega_b;
        const auto grid = make_grid(wb - 10.0, wb + 10.0, g.integer(2, 3000), false);
        const double co = g.co(), w2 = g.omega_sq();
        const InputField in = g.input();
        CHECK(spectrum_sweep(grid, cfg, co, w2, in) == spectrum_sweep_serial(grid, cfg, co, w2, in));
    }
    const ValidatedConfig cfg = validate(GyroParams{}, Vacuum{});
    const auto grid = make_grid(1e4 - 5.0, 1e4 + 5.0, 257, false);
    CHECK(exact_psd_sweep(grid, cfg, 1.0, 0.5, Vacuum{}) == exact_psd_sweep_serial(grid, cfg, 1.0, 0.5, Vacuum{}));
}

TEST_CASE("spectrum rows carry the budget") {
    const ValidatedConfig cfg = validate(GyroParams{}, Vacuum{});
    const std::vector<double> grid{1e4 - 1.0, 1e4, 1e4 + 2.0};
    const auto rows = spectrum_sweep_serial(grid, cfg, 1.0, 0.3, SqueezedVacuum{1.0});
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const NoiseBudget b = noise_budget(grid[i], cfg, 1.0, 0.3, SqueezedVacuum{1.0});
        CHECK(rows[i].omega == grid[i]);
        CHECK(rows[i].n_x_total == b.n_x_total);
        CHECK(rows[i].n_add == b.n_add);
        CHECK(rows[i].n_i_sym >= std::exp(-2.0));
    }
    CHECK(spectrum_sweep(std::vector<double>{}, cfg, 1.0, 0.3, Vacuum{}).empty());
}
