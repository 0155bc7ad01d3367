#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "gyro/errors.hpp"
#include "gyro/io.hpp"

using namespace gyro;
using namespace gyro::io;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const GyroError& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("parameter files") {
    const ParamFile f = parse_params_json(R"({"omega_b": 2e4, "kappa": 1e8, "gamma_y": 0.5})");
    CHECK(f.params.omega_b == 2e4);
    CHECK(f.params.kappa == 1e8);
    CHECK(f.params.gamma_y == 0.5);
    CHECK(f.params.gamma_x == GyroParams{}.gamma_x);
    CHECK_FALSE(f.co.has_value());

    const ParamFile c = parse_params_json(R"({"co": 2.5})");
    REQUIRE(c.co.has_value());
    CHECK(*c.co == 2.5);
    CHECK(cooperativity(c.params.g, c.params.kappa, c.params.gamma_x) == doctest::Approx(2.5).epsilon(1e-14));

    CHECK(kind_of([] { parse_params_json(R"({"omega": 1})"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_params_json(R"({"kappa": "big"})"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_params_json(R"({"g": 1, "co": 1})"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_params_json("[1, 2]"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { load_params("/nonexistent/params.json"); }) == ErrorKind::Parse);
}

TEST_CASE("parse errors carry the line number") {
    try {
        parse_params_json("{\n  \"kappa\": 1e7,\n  \"gamma_x\": ,\n}");
        FAIL("expected a parse error");
    } catch (const GyroError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("parameter JSON round trip") {
    GyroParams p;
    p.omega_b = 12345.678901234567;
    p.n_th = 0.25;
    const ParamFile back = parse_params_json(params_to_json(p));
    CHECK(back.params.omega_b == p.omega_b);
    CHECK(back.params.g == p.g);
    CHECK(back.params.n_th == p.n_th);
}

TEST_CASE("input specifications") {
    CHECK(std::holds_alternative<Vacuum>(parse_input("vacuum")));
    const InputField s = parse_input("squeezed:r=1.73");
    REQUIRE(std::holds_alternative<SqueezedVacuum>(s));
    CHECK(squeeze_r(s) == 1.73);
    CHECK(squeeze_r(parse_input(input_to_string(SqueezedVacuum{0.123456789}))) == 0.123456789);
    for (const char* bad : {"", "squeezed", "squeezed:r=", "squeezed:r=abc", "squeezed:x=1", "coherent"}) {
        CHECK(kind_of([&] { parse_input(bad); }) == ErrorKind::Parse);
    }
}

TEST_CASE("sweep specifications") {
    const SweepSpec s = parse_sweep("omega:9990:10010:1001");
    CHECK(s.variable == SweepVariable::Omega);
    CHECK(s.points == 1001);
    const auto grid = sweep_grid(s);
    CHECK(grid.size() == 1001);
    CHECK(grid.front() == 9990.0);
    CHECK(grid.back() == 10010.0);

    const SweepSpec l = parse_sweep("co:0.01:100:5:log");
    CHECK(l.log_scale);
    CHECK(sweep_grid(l)[2] == doctest::Approx(1.0));
    CHECK(parse_sweep("r:0:1.73:10").variable == SweepVariable::R);
    CHECK(parse_sweep("omega_rot_sq:0:3:4").variable == SweepVariable::OmegaRotSq);
    CHECK(to_string(SweepVariable::OmegaRotSq) == "omega_rot_sq");

    CHECK(kind_of([] { parse_sweep("omega:10:10:5"); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { parse_sweep("omega:10:1:5"); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { parse_sweep("co:0:1:5:log"); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { parse_sweep("omega:1:2:1"); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { parse_sweep("speed:1:2:3"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_sweep("omega:1:2"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_sweep("omega:1:2:3:lin"); }) == ErrorKind::Parse);
}

TEST_CASE("CSV output is deterministic and round-trips") {
    Table t;
    t.name = "demo";
    t.metadata = {"gyro 1.0.0", "demo table"};
    t.columns = {"a", "b"};
    t.rows = {{0.1, 1.0 / 3.0}, {-2.5e-300, 6.02214076e23}};
    std::ostringstream a, b;
    write_csv(a, t);
    write_csv(b, t);
    CHECK(a.str() == b.str());
    CHECK(a.str().find('\r') == std::string::npos);
    CHECK(a.str().rfind("# gyro 1.0.0\n# demo table\na,b\n", 0) == 0);

    std::istringstream in(a.str());
    const Table back = read_csv(in);
    CHECK(back.metadata == t.metadata);
    CHECK(back.columns == t.columns);
    CHECK(back.rows == t.rows);
    CHECK(back.column("b")[0] == 1.0 / 3.0);
    CHECK_THROWS_AS(back.column_index("c"), GyroError);
    CHECK(format_number(0.1) == "0.10000000000000001");
}
