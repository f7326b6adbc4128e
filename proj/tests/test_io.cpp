#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "rodwave/io.hpp"

using namespace rodwave;
namespace fs = std::filesystem;

namespace {

fs::path tmp_dir() {
    const fs::path dir = fs::current_path() / "test_tmp";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("format_double round-trips through 17 significant digits") {
    for (double v : {0.1, -1.0 / 3.0, 2.0, 1e-30, 123456.789, 0.0})
        CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("field CSV round trip") {
    const Grid grid = make_grid(5.0, 32);
    std::mt19937 rng(3);
    const Field f = oracles::random_rough(grid, rng);
    const fs::path path = tmp_dir() / "field.csv";
    write_field_csv(path.string(), f);
    const std::vector<double> values = read_csv_column(path.string(), 1);
    REQUIRE(values.size() == static_cast<size_t>(grid.n));
    for (int j = 0; j < grid.n; ++j) CHECK(values[static_cast<size_t>(j)] == f[j]);
}

TEST_CASE("binary snapshot round trip and exact layout") {
    const Grid grid = make_grid(7.5, 16);
    std::mt19937 rng(4);
    State state;
    state.t = 1.25;
    state.u = oracles::random_rough(grid, rng);
    const fs::path path = tmp_dir() / "snap.bin";
    write_snapshot(path.string(), state);

    CHECK(fs::file_size(path) == 8 + 8 + 8 + 16 * 8);
    const State back = read_snapshot(path.string());
    CHECK(back.t == state.t);
    CHECK(back.u.grid.length == grid.length);
    CHECK(back.u.grid.n == grid.n);
    for (int j = 0; j < grid.n; ++j) CHECK(back.u[j] == state.u[j]);

    // header starts with L as a little-endian f64
    const std::string bytes = slurp(path);
    double l = 0.0;
    std::memcpy(&l, bytes.data(), sizeof(double));
    CHECK(l == 7.5);
    std::uint64_t n = 0;
    std::memcpy(&n, bytes.data() + 8, sizeof(n));
    CHECK(n == 16);
}

TEST_CASE("diagnostics and traces CSVs carry the documented headers") {
    const fs::path dpath = tmp_dir() / "diag.csv";
    write_diagnostics_csv(dpath.string(), {{0.0, 1.0, -0.5, 2.0, 1.5}});
    CHECK(slurp(dpath).rfind("t,energy,min_ux,argmin_x,max_abs_u\n", 0) == 0);

    CharTrace trace;
    trace.x0 = 0.5;
    trace.samples.push_back({0.0, 0.5, 1.0, -1.0, 1.0});
    const fs::path tpath = tmp_dir() / "traces.csv";
    write_traces_csv(tpath.string(), {trace});
    CHECK(slurp(tpath).rfind("x0,t,q,A,B,h\n", 0) == 0);
}
