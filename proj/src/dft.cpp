#include "ffhyper/dft.hpp"

#include <bit>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace ffhyper {

namespace {

using cd = std::complex<double>;

cd root(std::uint64_t numerator, std::uint64_t denominator, int sign) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(numerator) /
                       static_cast<double>(denominator);
  return std::polar(1.0, sign * angle);
}

}  // namespace

void fft_pow2(std::vector<cd>& data, int sign) {
  const std::size_t n = data.size();
  if (n <= 1) return;
  if (!std::has_single_bit(n)) throw std::invalid_argument("fft_pow2: length must be a power of two");

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  // Twiddles computed once at full length; each stage strides through them.
  std::vector<cd> twiddle(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) twiddle[k] = root(k, n, sign);

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const cd u = data[start + k];
        const cd v = data[start + k + half] * twiddle[k * stride];
        data[start + k] = u + v;
        data[start + k + half] = u - v;
      }
    }
  }
}

std::vector<cd> bluestein_dft(std::span<const cd> x, int sign) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  if (n == 1) return {x[0]};

  // jk = (j^2 + k^2 - (k-j)^2) / 2, so the kernel factors through the chirp
  // w_k = e^{sign * pi i k^2 / N}; k^2 is reduced mod 2N to keep the angle small.
  const std::uint64_t two_n = 2 * static_cast<std::uint64_t>(n);
  std::vector<cd> chirp(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t k2 = (static_cast<std::uint64_t>(k) * k) % two_n;
    chirp[k] = root(k2, two_n, sign);
  }

  const std::size_t m = std::bit_ceil(2 * n - 1);
  std::vector<cd> a(m, cd{});
  std::vector<cd> b(m, cd{});
  for (std::size_t j = 0; j < n; ++j) a[j] = x[j] * chirp[j];
  b[0] = std::conj(chirp[0]);
  for (std::size_t k = 1; k < n; ++k) {
    b[k] = std::conj(chirp[k]);
    b[m - k] = std::conj(chirp[k]);
  }

  fft_pow2(a, -1);
  fft_pow2(b, -1);
  for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
  fft_pow2(a, +1);

  const double scale = 1.0 / static_cast<double>(m);
  std::vector<cd> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * scale * chirp[k];
  return out;
}

std::vector<cd> naive_dft(std::span<const cd> x, int sign) {
  const std::size_t n = x.size();
  std::vector<cd> out(n, cd{});
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      out[k] += x[j] * root((static_cast<std::uint64_t>(j) * k) % n, n, sign);
    }
  }
  return out;
}

}  // namespace ffhyper
