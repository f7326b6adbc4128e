#ifndef RODWAVE_KERNEL_HPP
#define RODWAVE_KERNEL_HPP

#include <complex>
#include <vector>

#include "rodwave/grid.hpp"

namespace rodwave {

// Discrete convolution operators for the Green's function p(x) = e^{-|x|}/2 of 1 - d^2/dx^2
// on the periodic grid, realized as exact Fourier multipliers (k = 2*pi*freq/L):
//
//   convolve_p          1/(1+k^2)          periodized convolution with p
//   convolve_dp         ik/(1+k^2)         convolution with p' (Nyquist zeroed)
//   convolve_half_plus  1/(2(1+ik))        one-sided kernel p*1_{R+}, e^{-d}/(2(1-e^{-L}))
//   convolve_half_minus 1/(2(1-ik))        one-sided kernel p*1_{R-}, e^{d-L}/(2(1-e^{-L}))
//   spectral_derivative ik                 d/dx (Nyquist zeroed)
//
// At the Nyquist mode the one-sided multipliers take their real part 1/(2(1+k^2)), so the
// identities p = p+ + p- and p' = p- - p+ hold exactly, mode by mode.
Field convolve_p(const Field& v);
Field convolve_dp(const Field& v);
Field convolve_half_plus(const Field& v);
Field convolve_half_minus(const Field& v);
Field spectral_derivative(const Field& v);

// Alternative one-sided backend: O(n) causal/anticausal exponential recursion with trapezoidal
// cell quadrature and periodic closure factor 1/(1-e^{-L}). Second-order accurate; agrees with
// its direct O(n^2) quadrature twin (tests) to roundoff.
Field convolve_half_plus_scan(const Field& v);
Field convolve_half_minus_scan(const Field& v);

/// Zero all modes with |freq| > n/3 (2/3-rule).
Field dealias_two_thirds(const Field& v);

/// DFT coefficients of a field (unnormalized, layout: freq j for j<=n/2, j-n above).
struct Spectrum {
    Grid grid;
    std::vector<std::complex<double>> coeff;
};

Spectrum analyze(const Field& v);
/// Band-limited (trigonometric) interpolant evaluated at x; Nyquist mode treated as cosine.
double trig_eval(const Spectrum& s, double x);
/// Derivative of the interpolant at x (Nyquist zeroed).
double trig_eval_derivative(const Spectrum& s, double x);

/// Periodic 4-point Catmull-Rom interpolation of grid samples at x.
double cubic_interpolate(const Field& v, double x);

}  // namespace rodwave

#endif
