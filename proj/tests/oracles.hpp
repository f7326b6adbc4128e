// Test-only oracles, independent of the library's FFT/multiplier path.
#ifndef RODWAVE_TESTS_ORACLES_HPP
#define RODWAVE_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "rodwave/grid.hpp"

namespace oracles {

using rodwave::Field;
using rodwave::Grid;

// ---------------------------------------------------------------------------
// slow DFT (direct O(n^2) sums)
// ---------------------------------------------------------------------------

inline std::vector<std::complex<double>> slow_dft(const std::vector<std::complex<double>>& a) {
    const size_t n = a.size();
    std::vector<std::complex<double>> out(n);
    for (size_t k = 0; k < n; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (size_t j = 0; j < n; ++j) {
            const double ang = -2.0 * std::numbers::pi * static_cast<double>(j * k % n) / n;
            acc += a[j] * std::polar(1.0, ang);
        }
        out[k] = acc;
    }
    return out;
}

// ---------------------------------------------------------------------------
// closed-form periodized kernels on [0, L)
// ---------------------------------------------------------------------------

enum class Kernel { p, dp, half_plus, half_minus };

inline double kernel_value(Kernel which, double d, double length) {
    switch (which) {
        case Kernel::p:
            return std::cosh(d - 0.5 * length) / (2.0 * std::sinh(0.5 * length));
        case Kernel::dp:
            return std::sinh(d - 0.5 * length) / (2.0 * std::sinh(0.5 * length));
        case Kernel::half_plus:
            return std::exp(-d) / (2.0 * (1.0 - std::exp(-length)));
        case Kernel::half_minus:
            return std::exp(d - length) / (2.0 * (1.0 - std::exp(-length)));
    }
    return 0.0;
}

// Dirichlet-kernel (band-limited) interpolation of grid samples, even-n convention:
// D(d) = sin(n pi d / L) / (n tan(pi d / L)).
inline double dirichlet_interpolate(const Field& v, double y) {
    const int n = v.grid.n;
    const double length = v.grid.length;
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
        const double d = y - v.grid.x(j);
        const double phase = std::numbers::pi * d / length;
        const double s = std::sin(phase);
        double dval;
        if (std::abs(s) < 1e-14) {
            // y collides with a grid point (mod L): interpolation is exact there
            dval = std::abs(std::remainder(d, length)) < 1e-12 * length ? 1.0 : 0.0;
        } else {
            dval = std::sin(n * phase) * std::cos(phase) / (n * s);
        }
        acc += v[j] * dval;
    }
    return acc;
}

// O(n^2) quadrature of the periodized-kernel convolution against the band-limited
// interpolant: per-cell 10-point Gauss-Legendre (kernel corner sits on cell boundaries,
// so every cell integrand is smooth).
inline Field quadrature_convolution(const Field& v, Kernel which) {
    static const double nodes[5] = {0.1488743389816312, 0.4333953941292472, 0.6794095682990244,
                                    0.8650633666889845, 0.9739065285171717};
    static const double weights[5] = {0.2955242247147529, 0.2692667193099963, 0.2190863625159820,
                                      0.1494513491505806, 0.0666713443086881};
    const int n = v.grid.n;
    const double dx = v.grid.dx;
    const double length = v.grid.length;

    // tabulate interpolant and quadrature weights at all Gauss nodes
    std::vector<double> ys, ws, vt;
    ys.reserve(static_cast<size_t>(n) * 10);
    for (int i = 0; i < n; ++i) {
        const double mid = v.grid.x(i) + 0.5 * dx;
        for (int g = 0; g < 5; ++g) {
            for (double sign : {-1.0, 1.0}) {
                const double y = mid + sign * 0.5 * dx * nodes[g];
                ys.push_back(y);
                ws.push_back(0.5 * dx * weights[g]);
                vt.push_back(dirichlet_interpolate(v, y));
            }
        }
    }

    Field out = rodwave::make_field(v.grid);
    for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (size_t q = 0; q < ys.size(); ++q) {
            const double d = rodwave::wrap_position(v.grid.x(j) - ys[q], length);
            acc += ws[q] * kernel_value(which, d, length) * vt[q];
        }
        out[j] = acc;
    }
    return out;
}

// Direct O(n^2) twin of the one-sided trapezoid scans (same cell rule, same closure).
inline Field scan_quadrature_plus(const Field& v) {
    const int n = v.grid.n;
    const double dx = v.grid.dx;
    const double decay = std::exp(-dx);
    const double closure = 1.0 - std::exp(-v.grid.length);
    Field out = rodwave::make_field(v.grid);
    for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int m = 0; m < n; ++m) {
            const int i = (j - m + n) % n;
            const int prev = (i + n - 1) % n;
            const double cell = 0.5 * dx * (decay * v[prev] + v[i]);
            acc += std::exp(-m * dx) * cell;
        }
        out[j] = 0.5 * acc / closure;
    }
    return out;
}

inline Field scan_quadrature_minus(const Field& v) {
    const int n = v.grid.n;
    const double dx = v.grid.dx;
    const double decay = std::exp(-dx);
    const double closure = 1.0 - std::exp(-v.grid.length);
    Field out = rodwave::make_field(v.grid);
    for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int m = 0; m < n; ++m) {
            const int i = (j + m) % n;          // cell [x_i, x_{i+1}]
            const int next = (i + 1) % n;
            const double cell = 0.5 * dx * (v[i] + decay * v[next]);
            acc += std::exp(-m * dx) * cell;
        }
        out[j] = 0.5 * acc / closure;
    }
    return out;
}

// ---------------------------------------------------------------------------
// finite differences
// ---------------------------------------------------------------------------

inline Field fd4_derivative(const Field& v) {
    const int n = v.grid.n;
    Field out = rodwave::make_field(v.grid);
    for (int j = 0; j < n; ++j) {
        const double vm2 = v[(j + n - 2) % n], vm1 = v[(j + n - 1) % n];
        const double vp1 = v[(j + 1) % n], vp2 = v[(j + 2) % n];
        out[j] = (-vp2 + 8.0 * vp1 - 8.0 * vm1 + vm2) / (12.0 * v.grid.dx);
    }
    return out;
}

// ---------------------------------------------------------------------------
// random fields
// ---------------------------------------------------------------------------

inline Field random_rough(const Grid& grid, std::mt19937& rng, double amplitude = 1.0) {
    std::uniform_real_distribution<double> dist(-amplitude, amplitude);
    Field f = rodwave::make_field(grid);
    for (int j = 0; j < grid.n; ++j) f[j] = dist(rng);
    return f;
}

/// Band-limited random field: modes 1..kmax with geometrically decaying amplitudes
/// plus a random offset; sup-norm ~ amplitude.
inline Field random_smooth(const Grid& grid, std::mt19937& rng, int kmax = 8,
                           double amplitude = 0.5, double offset_range = 0.5) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(-offset_range, offset_range);
    std::vector<double> a(static_cast<size_t>(kmax) + 1), b(static_cast<size_t>(kmax) + 1);
    double norm = 0.0;
    for (int k = 1; k <= kmax; ++k) {
        const double decay = std::pow(0.6, k - 1);
        a[static_cast<size_t>(k)] = gauss(rng) * decay;
        b[static_cast<size_t>(k)] = gauss(rng) * decay;
        norm += std::abs(a[static_cast<size_t>(k)]) + std::abs(b[static_cast<size_t>(k)]);
    }
    const double scale = norm > 0.0 ? amplitude / norm : 0.0;
    const double offset = unif(rng);
    const double w = 2.0 * std::numbers::pi / grid.length;
    Field f = rodwave::make_field(grid);
    for (int j = 0; j < grid.n; ++j) {
        double acc = offset;
        for (int k = 1; k <= kmax; ++k)
            acc += scale * (a[static_cast<size_t>(k)] * std::cos(w * k * grid.x(j)) +
                            b[static_cast<size_t>(k)] * std::sin(w * k * grid.x(j)));
        f[j] = acc;
    }
    return f;
}

/// Remove the (convention-dependent) Nyquist mode: v_j -= c * (-1)^j.
inline Field zero_nyquist(const Field& v) {
    double c = 0.0;
    for (int j = 0; j < v.grid.n; ++j) c += (j % 2 == 0 ? 1.0 : -1.0) * v[j];
    c /= v.grid.n;
    Field out = v;
    for (int j = 0; j < v.grid.n; ++j) out[j] -= c * (j % 2 == 0 ? 1.0 : -1.0);
    return out;
}

// rod-model specialization of the slope-criterion coefficient
inline double res_cmp_beta(double gamma) {
    return std::abs(std::sqrt(12.0 - 3.0 * gamma) - std::sqrt(gamma)) / (2.0 * std::sqrt(gamma));
}

inline double max_abs_diff(const Field& a, const Field& b) {
    double m = 0.0;
    for (int j = 0; j < a.grid.n; ++j) m = std::max(m, std::abs(a[j] - b[j]));
    return m;
}

}  // namespace oracles

#endif
