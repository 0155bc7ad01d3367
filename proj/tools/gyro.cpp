// gyro: command-line front end for spectra, figure tables, design bounds,
// operating-point metrics and the self-verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or validation error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>

#include "gyro/errors.hpp"
#include "gyro/figures.hpp"
#include "gyro/io.hpp"
#include "gyro/metrics.hpp"
#include "gyro/response.hpp"
#include "gyro/spectra.hpp"
#include "gyro/sweep.hpp"
#include "gyro/verify.hpp"

namespace {

constexpr int kUsage = 2;

struct Common {
    std::string params_file;
    std::string input = "vacuum";
    std::string sweep;
    std::string out;
    double omega_rot_sq = 0.0;
    std::optional<double> co;
    std::optional<double> omega;
};

struct Setup {
    gyro::ValidatedConfig cfg;
    gyro::InputField input;
    double co = 0.0;
};

Setup load(const Common& c) {
    gyro::io::ParamFile pf;
    if (!c.params_file.empty()) pf = gyro::io::load_params(c.params_file);
    Setup s;
    s.input = gyro::io::parse_input(c.input);
    s.cfg = gyro::validate(pf.params, s.input);
    s.co = c.co ? *c.co : gyro::cooperativity(pf.params.g, pf.params.kappa, pf.params.gamma_x);
    if (!(s.co > 0.0)) throw gyro::GyroError(gyro::ErrorKind::NonPositiveRate, "co must be positive");
    if (!(c.omega_rot_sq >= 0.0)) throw gyro::GyroError(gyro::ErrorKind::InvalidArgument, "omega_rot_sq must be >= 0");
    if (!s.cfg.adiabatic_ok) std::cerr << "warning: omega_b/kappa above the adiabatic threshold\n";
    return s;
}

std::vector<std::string> metadata(const Setup& s, const Common& c) {
    return {"gyro " + std::string(gyro::io::kVersion), "params " + gyro::io::params_to_json(s.cfg.params),
            "input " + gyro::io::input_to_string(s.input), "co " + gyro::io::format_number(s.co),
            "omega_rot_sq " + gyro::io::format_number(c.omega_rot_sq), "sweep " + c.sweep};
}

void emit(const gyro::io::Table& t, const std::string& out) {
    if (out.empty() || out == "-") {
        gyro::io::write_csv(std::cout, t);
    } else {
        gyro::io::write_csv_file(out, t);
    }
}

void emit_json(const nlohmann::json& doc, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw gyro::GyroError(gyro::ErrorKind::Parse, "cannot write '" + out + "'");
    f << doc.dump(2) << '\n';
}

int cmd_spectrum(const Common& c) {
    const Setup s = load(c);
    const gyro::io::SweepSpec spec = gyro::io::parse_sweep(c.sweep);
    if (spec.variable != gyro::io::SweepVariable::Omega) {
        throw gyro::GyroError(gyro::ErrorKind::InvalidArgument, "spectrum sweeps must be over omega");
    }
    const auto grid = gyro::io::sweep_grid(spec);
    const auto rows = gyro::spectrum_sweep(grid, s.cfg, s.co, c.omega_rot_sq, s.input);

    gyro::io::Table t;
    t.name = "spectrum";
    t.metadata = metadata(s, c);
    t.columns = {"omega", "n_zpf", "n_ba", "n_ang", "n_im", "n_add", "n_x_total", "n_i_raw", "n_i_sym", "signal"};
    for (const auto& r : rows) {
        t.rows.push_back({r.omega, r.n_zpf, r.n_ba, r.n_ang, r.n_im, r.n_add, r.n_x_total, r.n_i_raw, r.n_i_sym,
                          r.signal});
    }
    emit(t, c.out);
    return 0;
}

int cmd_figure(const std::string& which, const std::string& out_dir, int points) {
    gyro::figures::FigureOptions opts;
    opts.points = points;
    const auto ids = which == "all" ? gyro::figures::figure_ids() : std::vector<std::string>{which};
    for (const auto& id : ids) {
        for (const auto& path : gyro::figures::write_figure(id, out_dir, opts)) std::cout << path << '\n';
    }
    return 0;
}

int cmd_bounds(double co, double r) {
    if (!(co > 0.0)) throw gyro::GyroError(gyro::ErrorKind::NonPositiveRate, "co must be positive");
    if (r < 0.0) throw gyro::GyroError(gyro::ErrorKind::NegativeSqueeze, "r must be >= 0");
    const gyro::InputField sq = gyro::SqueezedVacuum{r};
    gyro::GyroParams p;
    p.gamma_x = p.gamma_y = p.n_in = 1.0;
    const auto cfg = gyro::validate(p, gyro::Vacuum{});

    auto range_or_null = [&](const gyro::InputField& in) -> nlohmann::json {
        if (co < gyro::co_min(in)) return nullptr;
        return gyro::omega_range(co, in);
    };
    const auto lim_v = gyro::sensitivity_limit(cfg, 0.0, gyro::Vacuum{});
    const auto lim_s = gyro::sensitivity_limit(cfg, 0.0, sq);
    nlohmann::json doc = {
        {"co", co},
        {"r", r},
        {"squeeze_db", gyro::squeeze_db(r)},
        {"omega_sq_ub_vacuum", range_or_null(gyro::Vacuum{})},
        {"omega_sq_ub_squeezed", range_or_null(sq)},
        {"co_min_vacuum", gyro::co_min(gyro::Vacuum{})},
        {"co_min_squeezed", gyro::co_min(sq)},
        {"co_star", {{"vacuum", gyro::sql_report(cfg, 0.0, gyro::Vacuum{}).co_star},
                     {"squeezed", gyro::sql_report(cfg, 0.0, sq).co_star}}},
        {"sensitivity_limits",
         {{"omega_sq", 0.0},
          {"vacuum", lim_v.limit},
          {"squeezed", lim_s.limit},
          {"co_at_equality", lim_v.co_at_equality},
          {"ratio_bound", gyro::sensitivity_ratio(co, 0.0, cfg, r).bound}}},
    };
    std::cout << doc.dump(2) << '\n';
    return 0;
}

nlohmann::json report_json(const gyro::MetricsReport& m) {
    return {{"signal", m.signal},
            {"psd", m.psd},
            {"snr_per_photon", m.snr_per_photon},
            {"sensitivity", m.sensitivity},
            {"limit", m.limit},
            {"ratio_to_vacuum", m.ratio_to_vacuum},
            {"signal_resonance", m.signal_resonance},
            {"snr_per_photon_resonance", m.snr_per_photon_resonance},
            {"sensitivity_resonance", m.sensitivity_resonance},
            {"co_at_equality", m.co_at_equality}};
}

int cmd_metrics(const Common& c) {
    const Setup s = load(c);
    const double omega = c.omega ? *c.omega : s.cfg.params.omega_b;
    if (c.sweep.empty()) {
        nlohmann::json doc = report_json(gyro::metrics_report(omega, s.cfg, s.co, c.omega_rot_sq, s.input));
        doc["omega"] = omega;
        doc["co"] = s.co;
        doc["omega_rot_sq"] = c.omega_rot_sq;
        doc["input"] = gyro::io::input_to_string(s.input);
        emit_json(doc, c.out);
        return 0;
    }

    const gyro::io::SweepSpec spec = gyro::io::parse_sweep(c.sweep);
    const auto grid = gyro::io::sweep_grid(spec);
    gyro::io::Table t;
    t.name = "metrics";
    t.metadata = metadata(s, c);
    t.columns = {std::string(gyro::io::to_string(spec.variable)),
                 "signal",
                 "psd",
                 "snr_per_photon",
                 "sensitivity",
                 "limit",
                 "ratio_to_vacuum",
                 "signal_resonance",
                 "snr_per_photon_resonance",
                 "sensitivity_resonance"};
    for (double v : grid) {
        double w = omega, w2 = c.omega_rot_sq, co = s.co;
        gyro::InputField in = s.input;
        switch (spec.variable) {
            case gyro::io::SweepVariable::Omega: w = v; break;
            case gyro::io::SweepVariable::OmegaRotSq: w2 = v; break;
            case gyro::io::SweepVariable::Co: co = v; break;
            case gyro::io::SweepVariable::R:
                in = gyro::SqueezedVacuum{v};
                gyro::validate(s.cfg.params, in, s.cfg.options);
                break;
        }
        const auto m = gyro::metrics_report(w, s.cfg, co, w2, in);
        t.rows.push_back({v, m.signal, m.psd, m.snr_per_photon, m.sensitivity, m.limit, m.ratio_to_vacuum,
                          m.signal_resonance, m.snr_per_photon_resonance, m.sensitivity_resonance});
    }
    emit(t, c.out);
    return 0;
}

int cmd_verify(const std::string& level, bool inject_fault) {
    if (inject_fault) gyro::testing::set_chi_x_fault(true);
    const auto rep = gyro::verify::run(level == "full" ? gyro::verify::Level::Full : gyro::verify::Level::Quick);
    gyro::verify::print(std::cout, rep);
    return rep.all_passed() ? 0 : 1;
}

void add_common(CLI::App* sub, Common& c, bool with_sweep_required) {
    sub->add_option("--params", c.params_file, "parameter file (flat JSON)")->check(CLI::ExistingFile);
    sub->add_option("--input", c.input, "vacuum | squeezed:r=<float>");
    auto* sw = sub->add_option("--sweep", c.sweep, "<var>:<start>:<stop>:<points>[:log]");
    if (with_sweep_required) sw->required();
    sub->add_option("--out", c.out, "output file (default stdout)");
    sub->add_option("--omega-rot-sq", c.omega_rot_sq, "squared angular velocity, (rad/s)^2");
    sub->add_option("--co", c.co, "cooperativity (overrides g from the parameter file)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum SAW gyroscope: spectra, figures, bounds, metrics and verification"};
    app.set_version_flag("--version", "gyro " + std::string(gyro::io::kVersion));
    app.require_subcommand(1);

    Common spectrum_opts;
    auto* spectrum = app.add_subcommand("spectrum", "noise budget and photocurrent PSD over an omega sweep");
    add_common(spectrum, spectrum_opts, true);

    std::string figure_id;
    std::string figure_out;
    int figure_points = 201;
    auto* figure = app.add_subcommand("figure", "dimensionless figure tables, one CSV per curve");
    figure->add_option("which", figure_id, "fig2|fig3a|fig3b|fig3c|fig4a|fig4b|fig4c|all")->required();
    figure->add_option("--out", figure_out, "output directory")->required();
    figure->add_option("--points", figure_points, "grid points per curve")->check(CLI::Range(2, 1000000));

    double bounds_co = 1.0;
    double bounds_r = 0.0;
    auto* bounds = app.add_subcommand("bounds", "range and cooperativity bounds as JSON");
    bounds->add_option("--co", bounds_co, "cooperativity");
    bounds->add_option("--r", bounds_r, "squeeze parameter");

    Common metrics_opts;
    auto* metrics = app.add_subcommand("metrics", "signal, SNR and sensitivity (JSON, or CSV with --sweep)");
    add_common(metrics, metrics_opts, false);
    metrics->add_option("--omega", metrics_opts.omega, "analysis frequency (default omega_b)");

    std::string verify_level = "quick";
    bool inject_fault = false;
    auto* verify = app.add_subcommand("verify", "run the self-verification suite");
    verify->add_option("level", verify_level, "quick|full")->check(CLI::IsMember({"quick", "full"}));
    verify->add_flag("--inject-fault", inject_fault, "")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        if (*spectrum) return cmd_spectrum(spectrum_opts);
        if (*figure) return cmd_figure(figure_id, figure_out, figure_points);
        if (*bounds) return cmd_bounds(bounds_co, bounds_r);
        if (*metrics) return cmd_metrics(metrics_opts);
        if (*verify) return cmd_verify(verify_level, inject_fault);
    } catch (const gyro::GyroError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
