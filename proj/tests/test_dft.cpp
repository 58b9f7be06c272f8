#include <gtest/gtest.h>

#include <random>

#include "ffhyper/dft.hpp"

using namespace ffhyper;
using cd = std::complex<double>;

TEST(Dft, BluesteinMatchesNaive) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 6u, 12u, 16u, 17u, 96u, 100u, 127u, 240u, 1000u}) {
    std::vector<cd> x(n);
    for (auto& v : x) v = {u(rng), u(rng)};
    for (int sign : {+1, -1}) {
      const auto fast = bluestein_dft(x, sign);
      const auto slow = naive_dft(x, sign);
      ASSERT_EQ(fast.size(), n);
      for (std::size_t k = 0; k < n; ++k) EXPECT_LT(std::abs(fast[k] - slow[k]), 1e-10 * std::sqrt(n)) << n;
    }
  }
}

TEST(Dft, Pow2RoundTrip) {
  std::vector<cd> x{{1, 0}, {2, -1}, {0, 3}, {-4, 0.5}, {1, 1}, {0, 0}, {2, 2}, {-1, 0}};
  auto y = x;
  fft_pow2(y, -1);
  fft_pow2(y, +1);
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_LT(std::abs(y[i] / 8.0 - x[i]), 1e-12);
  std::vector<cd> bad(6);
  EXPECT_THROW(fft_pow2(bad, 1), std::invalid_argument);
}

TEST(Dft, DeltaTransformsToConstant) {
  std::vector<cd> x(37, cd{});
  x[0] = 1.0;
  for (const auto& v : bluestein_dft(x, +1)) EXPECT_LT(std::abs(v - 1.0), 1e-12);
  EXPECT_TRUE(bluestein_dft(std::vector<cd>{}, 1).empty());
}
