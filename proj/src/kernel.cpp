#include "rodwave/kernel.hpp"

#include <cmath>
#include <numbers>

#include "rodwave/fft.hpp"

namespace rodwave {

namespace {

using cd = std::complex<double>;

enum class Multiplier { helmholtz, helmholtz_dx, half_plus, half_minus, derivative };

cd multiplier_value(Multiplier which, double k, bool nyquist) {
    const double k2 = k * k;
    switch (which) {
        case Multiplier::helmholtz:
            return cd(1.0 / (1.0 + k2), 0.0);
        case Multiplier::helmholtz_dx:
            if (nyquist) return cd(0.0, 0.0);
            return cd(0.0, k / (1.0 + k2));
        case Multiplier::half_plus:
            if (nyquist) return cd(0.5 / (1.0 + k2), 0.0);
            return 0.5 / cd(1.0, k);
        case Multiplier::half_minus:
            if (nyquist) return cd(0.5 / (1.0 + k2), 0.0);
            return 0.5 / cd(1.0, -k);
        case Multiplier::derivative:
            if (nyquist) return cd(0.0, 0.0);
            return cd(0.0, k);
    }
    return cd(0.0, 0.0);
}

Field apply_multiplier(const Field& v, Multiplier which) {
    const int n = v.grid.n;
    const double two_pi_over_l = 2.0 * std::numbers::pi / v.grid.length;
    std::vector<cd> a(v.values.begin(), v.values.end());
    fft::forward(a);
    for (int j = 0; j < n; ++j) {
        const int freq = (j <= n / 2) ? j : j - n;
        a[static_cast<size_t>(j)] *= multiplier_value(which, two_pi_over_l * freq, j == n / 2);
    }
    fft::inverse(a);
    Field out = make_field(v.grid);
    for (int j = 0; j < n; ++j) out[j] = a[static_cast<size_t>(j)].real();
    return out;
}

}  // namespace

Field convolve_p(const Field& v) { return apply_multiplier(v, Multiplier::helmholtz); }
Field convolve_dp(const Field& v) { return apply_multiplier(v, Multiplier::helmholtz_dx); }
Field convolve_half_plus(const Field& v) { return apply_multiplier(v, Multiplier::half_plus); }
Field convolve_half_minus(const Field& v) { return apply_multiplier(v, Multiplier::half_minus); }
Field spectral_derivative(const Field& v) { return apply_multiplier(v, Multiplier::derivative); }

// (p*1_{R+} conv v)(x_j) = (1/2) * S_j,  S_j = sum_{m>=0} e^{-m dx} c_{j-m},
// c_i = trapezoid of e^{xi - x_i} v(xi) over the cell [x_{i-1}, x_i]. One warm-up pass
// determines the cyclic closure S_{n-1} = P_{n-1}/(1 - e^{-L}); a second pass records.
Field convolve_half_plus_scan(const Field& v) {
    const int n = v.grid.n;
    const double dx = v.grid.dx;
    const double decay = std::exp(-dx);
    const double closure = 1.0 - std::exp(-v.grid.length);

    std::vector<double> cell(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int prev = (i + n - 1) % n;
        cell[static_cast<size_t>(i)] = 0.5 * dx * (decay * v[prev] + v[i]);
    }

    double acc = cell[0];
    for (int j = 1; j < n; ++j) acc = decay * acc + cell[static_cast<size_t>(j)];
    double s = acc / closure;  // S_{n-1}

    Field out = make_field(v.grid);
    for (int j = 0; j < n; ++j) {
        s = decay * s + cell[static_cast<size_t>(j)];
        out[j] = 0.5 * s;
    }
    return out;
}

Field convolve_half_minus_scan(const Field& v) {
    const int n = v.grid.n;
    const double dx = v.grid.dx;
    const double decay = std::exp(-dx);
    const double closure = 1.0 - std::exp(-v.grid.length);

    // cell [x_{i-1}, x_i], weight e^{x_{i-1} - xi}; contributes to points left of the cell
    std::vector<double> cell(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int prev = (i + n - 1) % n;
        cell[static_cast<size_t>(i)] = 0.5 * dx * (v[prev] + decay * v[i]);
    }

    double acc = cell[0];
    for (int j = n - 1; j >= 1; --j) acc = decay * acc + cell[static_cast<size_t>(j)];
    double s = acc / closure;  // T_0 = sum_{m>=0} e^{-m dx} c_{1+m}

    Field out = make_field(v.grid);
    out[0] = 0.5 * s;
    for (int j = n - 1; j >= 1; --j) {
        s = decay * s + cell[static_cast<size_t>((j + 1) % n)];
        out[j] = 0.5 * s;
    }
    return out;
}

Field dealias_two_thirds(const Field& v) {
    const int n = v.grid.n;
    std::vector<cd> a(v.values.begin(), v.values.end());
    fft::forward(a);
    for (int j = 0; j < n; ++j) {
        const int freq = (j <= n / 2) ? j : j - n;
        if (std::abs(freq) > n / 3) a[static_cast<size_t>(j)] = cd(0.0, 0.0);
    }
    fft::inverse(a);
    Field out = make_field(v.grid);
    for (int j = 0; j < n; ++j) out[j] = a[static_cast<size_t>(j)].real();
    return out;
}

Spectrum analyze(const Field& v) {
    Spectrum s;
    s.grid = v.grid;
    s.coeff.assign(v.values.begin(), v.values.end());
    fft::forward(s.coeff);
    return s;
}

double trig_eval(const Spectrum& s, double x) {
    const int n = s.grid.n;
    const double two_pi_over_l = 2.0 * std::numbers::pi / s.grid.length;
    double acc = s.coeff[0].real();
    for (int j = 1; j < n / 2; ++j) {
        const double k = two_pi_over_l * j;
        const cd c = s.coeff[static_cast<size_t>(j)];
        acc += 2.0 * (c.real() * std::cos(k * x) - c.imag() * std::sin(k * x));
    }
    const double k_nyq = two_pi_over_l * (n / 2);
    acc += s.coeff[static_cast<size_t>(n / 2)].real() * std::cos(k_nyq * x);
    return acc / n;
}

double trig_eval_derivative(const Spectrum& s, double x) {
    const int n = s.grid.n;
    const double two_pi_over_l = 2.0 * std::numbers::pi / s.grid.length;
    double acc = 0.0;
    for (int j = 1; j < n / 2; ++j) {
        const double k = two_pi_over_l * j;
        const cd c = s.coeff[static_cast<size_t>(j)];
        acc += 2.0 * k * (-c.real() * std::sin(k * x) - c.imag() * std::cos(k * x));
    }
    return acc / n;  // Nyquist zeroed, as in spectral_derivative
}

double cubic_interpolate(const Field& v, double x) {
    const int n = v.grid.n;
    const double s = wrap_position(x, v.grid.length) / v.grid.dx;
    const int j1 = static_cast<int>(std::floor(s)) % n;
    const double f = s - std::floor(s);
    const int j0 = (j1 + n - 1) % n;
    const int j2 = (j1 + 1) % n;
    const int j3 = (j1 + 2) % n;
    const double p0 = v[j0], p1 = v[j1], p2 = v[j2], p3 = v[j3];
    const double f2 = f * f;
    const double f3 = f2 * f;
    return 0.5 * (2.0 * p1 + (-p0 + p2) * f + (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) * f2 +
                  (-p0 + 3.0 * p1 - 3.0 * p2 + p3) * f3);
}

}  // namespace rodwave
