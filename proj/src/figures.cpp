#include "gyro/figures.hpp"

#include <cmath>
#include <filesystem>
#include <cstdio>

#include "gyro/errors.hpp"
#include "gyro/metrics.hpp"
#include "gyro/sweep.hpp"

namespace gyro::figures {

namespace {

ValidatedConfig unit_config() {
    GyroParams p;
    p.gamma_x = 1.0;
    p.gamma_y = 1.0;
    p.n_in = 1.0;
    return validate(p, Vacuum{});
}

std::string label(double value) {
    // 0.75 -> "0.75", 1 -> "1"
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", value);
    return buf;
}

io::Table new_table(std::string_view id, const std::string& name, const std::string& curve,
                    std::vector<std::string> columns) {
    io::Table t;
    t.name = name;
    t.metadata = {"gyro " + std::string(io::kVersion), "figure " + std::string(id), "curve " + curve,
                  "units gamma_x = gamma_y = 1, n_in = 1"};
    t.columns = std::move(columns);
    return t;
}

std::vector<double> linspace(double a, double b, int n) { return make_grid(a, b, n, false); }

std::vector<io::Table> fig2(const FigureOptions& o) {
    std::vector<io::Table> out;
    const auto rs = linspace(0.0, o.r_experiment, o.points);
    for (double co : o.co_values) {
        auto sq = new_table("fig2", "fig2_squeezed_co" + label(co), "squeezed vacuum, co=" + label(co),
                            {"r", "omega_sq_ub"});
        auto vac = new_table("fig2", "fig2_vacuum_co" + label(co), "vacuum, co=" + label(co), {"r", "omega_sq_ub"});
        const double vac_ub = omega_range(co, Vacuum{});
        for (double r : rs) {
            sq.rows.push_back({r, omega_range(co, SqueezedVacuum{r})});
            vac.rows.push_back({r, vac_ub});
        }
        out.push_back(std::move(sq));
        out.push_back(std::move(vac));
    }
    return out;
}

std::vector<io::Table> fig3_vs_omega(std::string_view id, const InputField& input, const FigureOptions& o) {
    const ValidatedConfig cfg = unit_config();
    const std::string kind = is_squeezed(input) ? "squeezed r=" + label(squeeze_r(input)) : "vacuum";
    std::vector<io::Table> out;
    for (double co : o.co_values) {
        auto t = new_table(id, std::string(id) + "_co" + label(co), kind + ", co=" + label(co),
                           {"omega_sq", "snr_per_photon"});
        // curve ends on the readability bound
        for (double w2 : linspace(0.0, omega_range(co, input), o.points)) {
            t.rows.push_back({w2, snr_per_photon_resonance(cfg, co, w2, input)});
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<io::Table> fig3c(const FigureOptions& o) {
    const ValidatedConfig cfg = unit_config();
    std::vector<io::Table> out;
    for (double co : o.co_values_snr_vs_r) {
        auto t = new_table("fig3c", "fig3c_co" + label(co), "squeezed vacuum at omega_sq=1, co=" + label(co),
                           {"r", "snr_per_photon"});
        for (double r : linspace(0.0, o.r_experiment, o.points)) {
            t.rows.push_back({r, snr_per_photon_resonance(cfg, co, 1.0, SqueezedVacuum{r})});
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<io::Table> fig4a(const FigureOptions& o) {
    const ValidatedConfig cfg = unit_config();
    std::vector<io::Table> out;
    const auto w2s = linspace(0.0, o.omega_sq_max_sensitivity, o.points);
    for (double co : o.co_values) {
        for (const InputField& input : {InputField{Vacuum{}}, InputField{SqueezedVacuum{o.r_experiment}}}) {
            const bool sq = is_squeezed(input);
            auto t = new_table("fig4a", std::string("fig4a_") + (sq ? "squeezed" : "vacuum") + "_co" + label(co),
                               (sq ? "squeezed r=" + label(o.r_experiment) : std::string("vacuum")) +
                                   ", co=" + label(co),
                               {"omega_sq", "sensitivity"});
            for (double w2 : w2s) t.rows.push_back({w2, sensitivity_resonance(cfg, co, w2, input)});
            out.push_back(std::move(t));
        }
    }
    return out;
}

std::vector<io::Table> fig4b(const FigureOptions& o) {
    const ValidatedConfig cfg = unit_config();
    const double sql = sensitivity_limit(cfg, 0.0, Vacuum{}).limit;
    std::vector<io::Table> out;
    for (double co : o.co_values) {
        auto t = new_table("fig4b", "fig4b_co" + label(co), "squeezed vacuum at omega_sq=0, co=" + label(co),
                           {"r", "sensitivity", "floor", "sql"});
        for (double r : linspace(0.0, o.r_max_sensitivity, o.points)) {
            t.rows.push_back({r, sensitivity_resonance(cfg, co, 0.0, SqueezedVacuum{r}),
                              squeezed_sensitivity_floor(cfg, co, 0.0, r), sql});
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<io::Table> fig4c(const FigureOptions& o) {
    const ValidatedConfig cfg = unit_config();
    std::vector<io::Table> out;
    for (double co : o.co_values) {
        auto t = new_table("fig4c", "fig4c_co" + label(co), "ratio at omega_sq=0, co=" + label(co),
                           {"r", "ratio", "bound"});
        for (double r : linspace(0.0, o.r_max_sensitivity, o.points)) {
            const SensitivityRatio s = sensitivity_ratio(co, 0.0, cfg, r);
            t.rows.push_back({r, s.ratio, s.bound});
        }
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids{"fig2", "fig3a", "fig3b", "fig3c", "fig4a", "fig4b", "fig4c"};
    return ids;
}

std::vector<io::Table> make_figure(std::string_view id, const FigureOptions& options) {
    if (options.points < 2) throw GyroError(ErrorKind::InvalidArgument, "figure grids need at least 2 points");
    if (id == "fig2") return fig2(options);
    if (id == "fig3a") return fig3_vs_omega(id, Vacuum{}, options);
    if (id == "fig3b") return fig3_vs_omega(id, SqueezedVacuum{options.r_experiment}, options);
    if (id == "fig3c") return fig3c(options);
    if (id == "fig4a") return fig4a(options);
    if (id == "fig4b") return fig4b(options);
    if (id == "fig4c") return fig4c(options);
    throw GyroError(ErrorKind::InvalidArgument, "unknown figure '" + std::string(id) + "'");
}

std::vector<std::string> write_figure(std::string_view id, const std::string& out_dir,
                                      const FigureOptions& options) {
    const auto tables = make_figure(id, options);
    std::filesystem::create_directories(out_dir);
    std::vector<std::string> paths;
    for (const auto& t : tables) {
        const std::string path = (std::filesystem::path(out_dir) / (t.name + ".csv")).string();
        io::write_csv_file(path, t);
        paths.push_back(path);
    }
    return paths;
}

}  // namespace gyro::figures
