#include "rodwave/io.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rodwave {

static_assert(std::endian::native == std::endian::little,
              "snapshot format assumes a little-endian host");

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_field_csv(const std::string& path, const Field& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "x,value\n";
    for (int j = 0; j < f.grid.n; ++j)
        out << format_double(f.grid.x(j)) << ',' << format_double(f[j]) << '\n';
}

std::vector<double> read_csv_column(const std::string& path, int column) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::vector<double> values;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {  // skip the header row
            header = false;
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        int i = 0;
        while (std::getline(ss, cell, ',')) {
            if (i == column) {
                values.push_back(std::stod(cell));
                break;
            }
            ++i;
        }
    }
    return values;
}

namespace {

template <typename T>
void put(std::ofstream& out, T v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::ifstream& in) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw std::runtime_error("truncated snapshot");
    return v;
}

}  // namespace

void write_snapshot(const std::string& path, const State& state) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    put<double>(out, state.u.grid.length);
    put<std::uint64_t>(out, static_cast<std::uint64_t>(state.u.grid.n));
    put<double>(out, state.t);
    for (double v : state.u.values) put<double>(out, v);
}

State read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    const double length = get<double>(in);
    const auto n = get<std::uint64_t>(in);
    const double t = get<double>(in);
    State state;
    state.t = t;
    state.u = make_field(make_grid(length, static_cast<int>(n)));
    for (int j = 0; j < state.u.grid.n; ++j) state.u[j] = get<double>(in);
    return state;
}

void write_diagnostics_csv(const std::string& path, const std::vector<Diagnostics>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "t,energy,min_ux,argmin_x,max_abs_u\n";
    for (const Diagnostics& d : rows)
        out << format_double(d.t) << ',' << format_double(d.energy) << ','
            << format_double(d.min_ux) << ',' << format_double(d.argmin_x) << ','
            << format_double(d.max_abs_u) << '\n';
}

void write_traces_csv(const std::string& path, const std::vector<CharTrace>& traces) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "x0,t,q,A,B,h\n";
    for (const CharTrace& trace : traces)
        for (const CharSample& s : trace.samples)
            out << format_double(trace.x0) << ',' << format_double(s.t) << ','
                << format_double(s.q) << ',' << format_double(s.a) << ','
                << format_double(s.b) << ',' << format_double(s.h) << '\n';
}

}  // namespace rodwave
