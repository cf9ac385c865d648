#pragma once

#include <complex>
#include <span>
#include <vector>

namespace smoothbench::fft {

using Complex = std::complex<double>;

/// Unnormalized forward DFT of arbitrary length (radix-2 when the length is
/// a power of two, Bluestein's chirp transform otherwise).
std::vector<Complex> forward(std::span<const Complex> input);

/// Inverse DFT including the 1/n normalization.
std::vector<Complex> inverse(std::span<const Complex> input);

/// Forward DFT of a real sequence; returns the full complex spectrum.
std::vector<Complex> forward_real(std::span<const double> input);

/// Inverse DFT of a spectrum assumed to come from real input; returns the
/// real parts and drops the (tiny) imaginary residue.
std::vector<double> inverse_real(std::span<const Complex> spectrum);

} // namespace smoothbench::fft
