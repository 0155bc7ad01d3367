/**
 * @file verify.hpp
 * @brief Self-verification suite: module invariants and oracle comparisons.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gyro::verify {

enum class Level { Quick, Full };

struct Check {
    std::string name;
    std::string anchor;  ///< the property or result being checked
    bool passed = false;
    double value = 0.0;  ///< measured error (or measured quantity)
    double tolerance = 0.0;
    double seconds = 0.0;
    std::string detail;
};

struct Report {
    Level level = Level::Quick;
    std::vector<Check> checks;
    double seconds = 0.0;
    bool all_passed() const;
    std::size_t failures() const;
};

/// Runs every check; quick uses fixed seeds and small grids, full widens sampling.
Report run(Level level);

/// One line per check; timings are included for the full level.
void print(std::ostream& out, const Report& report);

}  // namespace gyro::verify
