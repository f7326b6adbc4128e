#ifndef RODWAVE_GRID_HPP
#define RODWAVE_GRID_HPP

#include <functional>
#include <vector>

namespace rodwave {

/// Uniform periodic grid on [0, L): points x_j = j*dx, j = 0..n-1.
/// n must be a power of two, n >= 16.
struct Grid {
    double length = 0.0;
    int n = 0;
    double dx = 0.0;

    double x(int j) const { return dx * j; }
};

Grid make_grid(double length, int n);  // throws std::invalid_argument

/// Real-valued samples on a Grid.
struct Field {
    Grid grid;
    std::vector<double> values;

    int size() const { return static_cast<int>(values.size()); }
    double& operator[](int j) { return values[static_cast<size_t>(j)]; }
    double operator[](int j) const { return values[static_cast<size_t>(j)]; }
};

Field make_field(const Grid& grid);  // zero-initialized
Field make_field(const Grid& grid, const std::function<double(double)>& profile);

bool all_finite(const Field& f);
double max_abs(const Field& f);
double mean(const Field& f);

/// Periodic representative of x in [0, L).
double wrap_position(double x, double length);
/// Signed periodic distance in [-L/2, L/2).
double periodic_delta(double x, double length);

}  // namespace rodwave

#endif
