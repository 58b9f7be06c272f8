#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ffhyper {

/// In-place radix-2 FFT. The length must be a power of two. With sign = +1 this
/// computes X[k] = sum_j x[j] e^{+2 pi i jk/N}; sign = -1 flips the exponent.
void fft_pow2(std::vector<std::complex<double>>& data, int sign);

/// Length-N cyclic DFT of arbitrary length via Bluestein's chirp-z convolution:
/// X[k] = sum_j x[j] e^{sign * 2 pi i jk/N}.
std::vector<std::complex<double>> bluestein_dft(std::span<const std::complex<double>> x, int sign);

/// Same transform evaluated term by term in O(N^2); reference for small N.
std::vector<std::complex<double>> naive_dft(std::span<const std::complex<double>> x, int sign);

}  // namespace ffhyper
