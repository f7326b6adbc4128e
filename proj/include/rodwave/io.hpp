#ifndef RODWAVE_IO_HPP
#define RODWAVE_IO_HPP

#include <string>
#include <vector>

#include "rodwave/dynamics.hpp"
#include "rodwave/grid.hpp"

namespace rodwave {

/// Shortest exact decimal form with 17 significant digits (%.17g).
std::string format_double(double v);

// Field CSV: header "x,value", one row per grid point.
void write_field_csv(const std::string& path, const Field& f);
std::vector<double> read_csv_column(const std::string& path, int column);

// Binary snapshot, little-endian: f64 L, u64 n, f64 t, then n f64 samples.
void write_snapshot(const std::string& path, const State& state);
State read_snapshot(const std::string& path);

// diagnostics.csv: t,energy,min_ux,argmin_x,max_abs_u
void write_diagnostics_csv(const std::string& path, const std::vector<Diagnostics>& rows);
// traces.csv: x0,t,q,A,B,h (one block per seed)
void write_traces_csv(const std::string& path, const std::vector<CharTrace>& traces);

}  // namespace rodwave

#endif
