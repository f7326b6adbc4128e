#include "rodwave/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace rodwave {

namespace {
bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}

Grid make_grid(double length, int n) {
    if (!(length > 0.0)) throw std::invalid_argument("grid length must be positive");
    if (!is_power_of_two(n) || n < 16)
        throw std::invalid_argument("grid n must be a power of two >= 16");
    Grid g;
    g.length = length;
    g.n = n;
    g.dx = length / n;
    return g;
}

Field make_field(const Grid& grid) {
    return Field{grid, std::vector<double>(static_cast<size_t>(grid.n), 0.0)};
}

Field make_field(const Grid& grid, const std::function<double(double)>& profile) {
    Field f = make_field(grid);
    for (int j = 0; j < grid.n; ++j) f[j] = profile(grid.x(j));
    return f;
}

bool all_finite(const Field& f) {
    for (double v : f.values)
        if (!std::isfinite(v)) return false;
    return true;
}

double max_abs(const Field& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
}

double mean(const Field& f) {
    double s = 0.0;
    for (double v : f.values) s += v;
    return s / f.size();
}

double wrap_position(double x, double length) {
    double y = std::fmod(x, length);
    if (y < 0.0) y += length;
    return y;
}

double periodic_delta(double x, double length) {
    double y = wrap_position(x + 0.5 * length, length);
    return y - 0.5 * length;
}

}  // namespace rodwave
