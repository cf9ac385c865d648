#include "smoothbench/fft.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

namespace smoothbench::fft {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// In-place iterative radix-2 transform. sign = -1 for forward, +1 for inverse
// (inverse normalization handled by callers).
void radix2(std::vector<Complex>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const Complex step(std::cos(angle), std::sin(angle));
        for (std::size_t block = 0; block < n; block += len) {
            Complex w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const Complex u = a[block + k];
                const Complex v = a[block + k + len / 2] * w;
                a[block + k] = u + v;
                a[block + k + len / 2] = u - v;
                w *= step;
            }
        }
    }
}

// Chirp phase e^{-i pi (j^2 mod 2n) / n}; reducing j^2 modulo the phase
// period keeps the trig argument small for long inputs.
Complex chirp(std::size_t j, std::size_t n, int sign) {
    const std::uint64_t m = (static_cast<std::uint64_t>(j) * j) % (2 * static_cast<std::uint64_t>(n));
    const double angle = sign * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

// Bluestein's algorithm: expresses an arbitrary-length DFT as a cyclic
// convolution evaluated with a power-of-two transform.
std::vector<Complex> bluestein(std::span<const Complex> input, int sign) {
    const std::size_t n = input.size();
    const std::size_t m = next_power_of_two(2 * n - 1);

    std::vector<Complex> a(m, Complex(0.0, 0.0));
    std::vector<Complex> b(m, Complex(0.0, 0.0));
    for (std::size_t j = 0; j < n; ++j) {
        a[j] = input[j] * chirp(j, n, sign);
    }
    for (std::size_t j = 0; j < n; ++j) {
        const Complex c = chirp(j, n, -sign);
        b[j] = c;
        if (j != 0) b[m - j] = c;
    }

    radix2(a, -1);
    radix2(b, -1);
    for (std::size_t j = 0; j < m; ++j) a[j] *= b[j];
    radix2(a, +1);
    const double scale = 1.0 / static_cast<double>(m);

    std::vector<Complex> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = a[k] * scale * chirp(k, n, sign);
    }
    return out;
}

std::vector<Complex> transform(std::span<const Complex> input, int sign) {
    if (input.size() <= 1) return {input.begin(), input.end()};
    if (is_power_of_two(input.size())) {
        std::vector<Complex> a(input.begin(), input.end());
        radix2(a, sign);
        return a;
    }
    return bluestein(input, sign);
}

} // namespace

std::vector<Complex> forward(std::span<const Complex> input) {
    return transform(input, -1);
}

std::vector<Complex> inverse(std::span<const Complex> input) {
    std::vector<Complex> out = transform(input, +1);
    const double scale = 1.0 / static_cast<double>(out.empty() ? 1 : out.size());
    for (Complex& v : out) v *= scale;
    return out;
}

std::vector<Complex> forward_real(std::span<const double> input) {
    std::vector<Complex> a(input.size());
    for (std::size_t i = 0; i < input.size(); ++i) a[i] = Complex(input[i], 0.0);
    return forward(a);
}

std::vector<double> inverse_real(std::span<const Complex> spectrum) {
    const std::vector<Complex> full = inverse(spectrum);
    std::vector<double> out(full.size());
    for (std::size_t i = 0; i < full.size(); ++i) out[i] = full[i].real();
    return out;
}

} // namespace smoothbench::fft
