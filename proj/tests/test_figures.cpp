#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "gyro/errors.hpp"
#include "gyro/figures.hpp"
#include "gyro/metrics.hpp"

using namespace gyro;
using namespace gyro::figures;

namespace {

const io::Table& find(const std::vector<io::Table>& tables, const std::string& name) {
    for (const auto& t : tables)
        if (t.name == name) return t;
    FAIL("missing table " << name);
    return tables.front();
}

}  // namespace

TEST_CASE("every figure is finite and labelled") {
    FigureOptions o;
    o.points = 101;
    for (const std::string& id : figure_ids()) {
        const auto tables = make_figure(id, o);
        CHECK_FALSE(tables.empty());
        for (const auto& t : tables) {
            CHECK(t.name.rfind(id + "_", 0) == 0);
            CHECK(t.rows.size() == 101);
            CHECK(t.metadata.front() == "gyro 1.0.0");
            for (const auto& row : t.rows) {
                CHECK(row.size() == t.columns.size());
                for (double v : row) CHECK(std::isfinite(v));
            }
        }
    }
    CHECK_THROWS_AS(make_figure("fig5"), GyroError);
}

TEST_CASE("range figure") {
    const auto tables = make_figure("fig2");
    for (double v : find(tables, "fig2_vacuum_co1").column("omega_sq_ub")) CHECK(v == 2.75);
    const auto sq = find(tables, "fig2_squeezed_co1");
    CHECK(sq.rows.front()[1] == doctest::Approx(2.75).epsilon(1e-12));
    CHECK(sq.rows.back()[1] == doctest::Approx(6.94).epsilon(2e-3));
    // larger cooperativity lifts the whole curve
    const auto lo = find(tables, "fig2_squeezed_co0.75").column("omega_sq_ub");
    const auto hi = find(tables, "fig2_squeezed_co1.25").column("omega_sq_ub");
    for (std::size_t i = 0; i < lo.size(); ++i) CHECK(hi[i] > lo[i]);
}

TEST_CASE("SNR figures end on the readability bound") {
    for (const char* id : {"fig3a", "fig3b"}) {
        for (const auto& t : make_figure(id)) {
            CHECK(t.rows.back()[1] == doctest::Approx(1.0).epsilon(1e-8));
            for (std::size_t i = 1; i < t.rows.size(); ++i) CHECK(t.rows[i][1] < t.rows[i - 1][1]);
        }
    }
    for (const auto& t : make_figure("fig3c")) {
        for (std::size_t i = 1; i < t.rows.size(); ++i) CHECK(t.rows[i][1] > t.rows[i - 1][1]);
    }
}

TEST_CASE("sensitivity figures") {
    for (const auto& t : make_figure("fig4a")) {
        for (std::size_t i = 1; i < t.rows.size(); ++i) CHECK(t.rows[i][1] > t.rows[i - 1][1]);
    }
    for (const auto& t : make_figure("fig4b")) {
        CHECK(t.rows.front()[3] == 0.125);
        for (std::size_t i = 1; i < t.rows.size(); ++i) CHECK(t.rows[i][1] < t.rows[i - 1][1]);
        for (const auto& row : t.rows) {
            CHECK(row[1] >= row[2] * (1.0 - 1e-12));
            if (row[0] >= std::numbers::ln2) CHECK(row[1] < row[3]);
        }
    }
    for (const auto& t : make_figure("fig4c")) {
        CHECK(t.rows.front()[1] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(t.rows.front()[2] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(t.rows.back()[2] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-4));
        for (const auto& row : t.rows) CHECK(row[1] <= row[2] + 1e-12);
    }
}

TEST_CASE("figure files are byte-identical across runs") {
    const auto dir = std::filesystem::temp_directory_path() / "gyro_fig_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir / "a");
    std::filesystem::create_directories(dir / "b");
    const auto pa = write_figure("fig4c", (dir / "a").string());
    const auto pb = write_figure("fig4c", (dir / "b").string());
    REQUIRE(pa.size() == 3);
    for (std::size_t i = 0; i < pa.size(); ++i) {
        std::ifstream fa(pa[i], std::ios::binary), fb(pb[i], std::ios::binary);
        const std::string a((std::istreambuf_iterator<char>(fa)), {});
        const std::string b((std::istreambuf_iterator<char>(fb)), {});
        CHECK(!a.empty());
        CHECK(a == b);
    }
    std::filesystem::remove_all(dir);
}
