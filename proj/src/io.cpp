#include "gyro/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gyro/errors.hpp"
#include "gyro/sweep.hpp"

namespace gyro::io {

namespace {

using nlohmann::json;

double parse_double(std::string_view text, std::string_view what) {
    std::string s(text);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &used);
    } catch (const std::exception&) {
        throw GyroError(ErrorKind::Parse, "invalid number for " + std::string(what) + ": '" + s + "'");
    }
    if (used != s.size()) {
        throw GyroError(ErrorKind::Parse, "trailing characters in " + std::string(what) + ": '" + s + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = text.find(sep, pos);
        parts.push_back(text.substr(pos, next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return parts;
}

}  // namespace

ParamFile parse_params_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // byte offset -> line number for the message
        const std::size_t offset = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n');
        throw GyroError(ErrorKind::Parse, "parameter file line " + std::to_string(line) + ": " + e.what());
    }
    if (!doc.is_object()) throw GyroError(ErrorKind::Parse, "parameter file must contain a JSON object");

    ParamFile out;
    GyroParams& p = out.params;
    bool saw_g = false;
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_number()) throw GyroError(ErrorKind::Parse, "parameter '" + key + "' must be a number");
        const double v = value.get<double>();
        if (key == "omega_b") p.omega_b = v;
        else if (key == "kappa") p.kappa = v;
        else if (key == "gamma_x") p.gamma_x = v;
        else if (key == "gamma_y") p.gamma_y = v;
        else if (key == "g") { p.g = v; saw_g = true; }
        else if (key == "co") out.co = v;
        else if (key == "n_in") p.n_in = v;
        else if (key == "mass") p.mass = v;
        else if (key == "n_th") p.n_th = v;
        else throw GyroError(ErrorKind::Parse, "unknown parameter '" + key + "'");
    }
    if (saw_g && out.co) throw GyroError(ErrorKind::Parse, "give either 'g' or 'co', not both");
    if (out.co) p.g = g_from_cooperativity(*out.co, p.kappa, p.gamma_x);
    return out;
}

ParamFile load_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GyroError(ErrorKind::Parse, "cannot open parameter file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_params_json(buf.str());
}

std::string params_to_json(const GyroParams& p) {
    json doc = {{"omega_b", p.omega_b}, {"kappa", p.kappa}, {"gamma_x", p.gamma_x}, {"gamma_y", p.gamma_y},
                {"g", p.g},             {"n_in", p.n_in},   {"mass", p.mass},       {"n_th", p.n_th}};
    return doc.dump();
}

InputField parse_input(std::string_view text) {
    if (text == "vacuum") return Vacuum{};
    constexpr std::string_view prefix = "squeezed:r=";
    if (text.substr(0, prefix.size()) == prefix) {
        const double r = parse_double(text.substr(prefix.size()), "squeeze parameter");
        if (r < 0.0) throw GyroError(ErrorKind::NegativeSqueeze, "squeeze parameter must be >= 0");
        return SqueezedVacuum{r};
    }
    throw GyroError(ErrorKind::Parse, "input must be 'vacuum' or 'squeezed:r=<float>', got '" + std::string(text) + "'");
}

std::string input_to_string(const InputField& input) {
    if (!is_squeezed(input)) return "vacuum";
    return "squeezed:r=" + format_number(squeeze_r(input));
}

std::string_view to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::Omega: return "omega";
        case SweepVariable::OmegaRotSq: return "omega_rot_sq";
        case SweepVariable::Co: return "co";
        case SweepVariable::R: return "r";
    }
    return "?";
}

SweepSpec parse_sweep(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() != 4 && parts.size() != 5) {
        throw GyroError(ErrorKind::Parse, "sweep must be <var>:<start>:<stop>:<points>[:log]");
    }
    SweepSpec spec;
    if (parts[0] == "omega") spec.variable = SweepVariable::Omega;
    else if (parts[0] == "omega_rot_sq") spec.variable = SweepVariable::OmegaRotSq;
    else if (parts[0] == "co") spec.variable = SweepVariable::Co;
    else if (parts[0] == "r") spec.variable = SweepVariable::R;
    else throw GyroError(ErrorKind::Parse, "unknown sweep variable '" + std::string(parts[0]) + "'");

    spec.start = parse_double(parts[1], "sweep start");
    spec.stop = parse_double(parts[2], "sweep stop");
    const double points = parse_double(parts[3], "sweep points");
    if (points != std::floor(points) || points < 2 || points > 1e8) {
        throw GyroError(ErrorKind::InvalidArgument, "sweep points must be an integer >= 2");
    }
    spec.points = static_cast<int>(points);
    if (parts.size() == 5) {
        if (parts[4] != "log") throw GyroError(ErrorKind::Parse, "sweep scale must be 'log' when given");
        spec.log_scale = true;
    }
    if (!(spec.start < spec.stop)) throw GyroError(ErrorKind::InvalidArgument, "sweep start must be < stop");
    if (spec.log_scale && !(spec.start > 0.0)) {
        throw GyroError(ErrorKind::InvalidArgument, "log sweep needs start > 0");
    }
    return spec;
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
    return make_grid(spec.start, spec.stop, spec.points, spec.log_scale);
}

std::size_t Table::column_index(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return i;
    throw GyroError(ErrorKind::InvalidArgument, "no column '" + std::string(name) + "' in table " + this->name);
}

std::vector<double> Table::column(std::string_view name) const {
    const std::size_t idx = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(row.at(idx));
    return out;
}

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_csv(std::ostream& out, const Table& table) {
    for (const auto& line : table.metadata) out << "# " << line << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
        out << '\n';
    }
}

void write_csv_file(const std::string& path, const Table& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GyroError(ErrorKind::Parse, "cannot write '" + path + "'");
    write_csv(out, table);
}

Table read_csv(std::istream& in) {
    Table t;
    std::string line;
    bool header = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') {
            t.metadata.push_back(line.size() > 2 ? line.substr(2) : std::string());
            continue;
        }
        const auto parts = split(line, ',');
        if (!header) {
            for (auto p : parts) t.columns.emplace_back(p);
            header = true;
            continue;
        }
        if (parts.size() != t.columns.size()) {
            throw GyroError(ErrorKind::Parse, "CSV line " + std::to_string(line_no) + " has " +
                                                  std::to_string(parts.size()) + " fields, expected " +
                                                  std::to_string(t.columns.size()));
        }
        std::vector<double> row;
        for (auto p : parts) row.push_back(parse_double(p, "CSV line " + std::to_string(line_no)));
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace gyro::io
