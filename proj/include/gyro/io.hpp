/**
 * @file io.hpp
 * @brief Parameter files, command-line value syntax and CSV/JSON output.
 */
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gyro/params.hpp"

namespace gyro::io {

inline constexpr std::string_view kVersion = "1.0.0";

/// Parameters loaded from a flat JSON object. Keys are the GyroParams field
/// names; "co" may replace "g". Missing keys keep their defaults, unknown keys
/// are rejected. `co` is set when the file gave a cooperativity.
struct ParamFile {
    GyroParams params;
    std::optional<double> co;
};

ParamFile parse_params_json(std::string_view text);
ParamFile load_params(const std::string& path);
std::string params_to_json(const GyroParams& params);

/// "vacuum" or "squeezed:r=<float>".
InputField parse_input(std::string_view text);
std::string input_to_string(const InputField& input);

enum class SweepVariable { Omega, OmegaRotSq, Co, R };

struct SweepSpec {
    SweepVariable variable = SweepVariable::Omega;
    double start = 0.0;
    double stop = 1.0;
    int points = 2;
    bool log_scale = false;
};

/// "<var>:<start>:<stop>:<points>[:log]" with var in omega, omega_rot_sq, co, r.
SweepSpec parse_sweep(std::string_view text);
std::vector<double> sweep_grid(const SweepSpec& spec);
std::string_view to_string(SweepVariable v);

/// Column-oriented numeric table written as CSV: `#` metadata lines, a header
/// row, then one LF-terminated row per entry, numbers at 17 significant digits.
struct Table {
    std::string name;
    std::vector<std::string> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::size_t column_index(std::string_view column) const;
    std::vector<double> column(std::string_view column) const;
};

std::string format_number(double value);
void write_csv(std::ostream& out, const Table& table);
void write_csv_file(const std::string& path, const Table& table);

/// Reads a CSV written by write_csv back into a table (used by tests and tools).
Table read_csv(std::istream& in);

}  // namespace gyro::io
