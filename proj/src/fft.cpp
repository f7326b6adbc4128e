#include "rodwave/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace rodwave::fft {

namespace {

using cd = std::complex<double>;

// Roots e^{-2*pi*i*j/n}, j = 0..n/2-1, cached per transform size.
// thread_local: each worker owns its tables, no synchronization needed.
const std::vector<cd>& twiddles(size_t n) {
    thread_local std::unordered_map<size_t, std::vector<cd>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<cd> w(n / 2);
    const double step = -2.0 * std::numbers::pi / static_cast<double>(n);
    for (size_t j = 0; j < n / 2; ++j) w[j] = std::polar(1.0, step * static_cast<double>(j));
    return cache.emplace(n, std::move(w)).first->second;
}

void transform(std::vector<cd>& a, bool invert) {
    const size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft size must be a power of two");
    if (n == 1) return;

    // bit-reversal permutation
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    const std::vector<cd>& w = twiddles(n);
    for (size_t len = 2; len <= n; len <<= 1) {
        const size_t stride = n / len;
        for (size_t i = 0; i < n; i += len) {
            for (size_t j = 0; j < len / 2; ++j) {
                cd t = invert ? std::conj(w[j * stride]) : w[j * stride];
                cd u = a[i + j];
                cd v = a[i + j + len / 2] * t;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
    }

    if (invert) {
        const double inv_n = 1.0 / static_cast<double>(n);
        for (cd& z : a) z *= inv_n;
    }
}

}  // namespace

void forward(std::vector<cd>& a) { transform(a, false); }
void inverse(std::vector<cd>& a) { transform(a, true); }

}  // namespace rodwave::fft
