#ifndef RODWAVE_FFT_HPP
#define RODWAVE_FFT_HPP

#include <complex>
#include <vector>

namespace rodwave::fft {

/// In-place radix-2 FFT, size must be a power of two.
/// forward: X_k = sum_j x_j e^{-2*pi*i*jk/n} (unnormalized).
/// inverse: x_j = (1/n) sum_k X_k e^{+2*pi*i*jk/n}.
void forward(std::vector<std::complex<double>>& a);
void inverse(std::vector<std::complex<double>>& a);

}  // namespace rodwave::fft

#endif
