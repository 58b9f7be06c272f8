#include <gtest/gtest.h>

#include "ffhyper/hypergeo.hpp"
#include "oracle.hpp"

using namespace ffhyper;

namespace {

std::shared_ptr<const Field> field_of(std::uint32_t q) {
  const auto [p, e] = *prime_power(q);
  return build_field(p, e);
}

}  // namespace

TEST(Hypergeometric, ZeroArgumentVanishes) {
  const FieldContext ctx(build_field(7, 1));
  EXPECT_EQ(hyper_2f1(ctx, 1, 5, 0, Field::zero()), Complex(0.0, 0.0));
  EXPECT_EQ(hyper_npfn(ctx, {{1, 2, 3}, {4, 5}, Field::zero()}), Complex(0.0, 0.0));
}

TEST(Hypergeometric, ModFiveValue) {
  const auto f = build_field(5, 1);
  const FieldContext ctx(f);
  const oracle::PowerWalk walk(*f);
  const Complex by_definition = oracle::hypergeometric(walk, {1, 3}, {0}, Element{2});
  EXPECT_NEAR(by_definition.real(), -0.4, 1e-12);
  const Complex v = hyper_2f1(ctx, 1, 3, 0, Element{2});
  EXPECT_NEAR(v.real(), -0.4, 1e-12);
  EXPECT_NEAR(v.imag(), 0.0, 1e-12);
  // -5 T^2(2) T^1(-1) F is the trace of y^2 = x^3 + x over F_5, which is 2.
  const Complex trace = -5.0 * ctx.chars().multiplicative(2, Element{2}) *
                        ctx.chars().multiplicative(1, f->from_integer(-1)) * v;
  EXPECT_NEAR(trace.real(), 2.0, 1e-10);
}

TEST(Hypergeometric, ModSevenSextic) {
  // 2F1(T, T^5; eps | x) for x = 0..6, from the definitional sum.
  const std::vector<double> expected{0.0, 1.0 / 7, 3.0 / 7, -2.0 / 7, 0.0, 2.0 / 7, -3.0 / 7};
  const auto f = build_field(7, 1);
  const FieldContext ctx(f);
  const oracle::PowerWalk walk(*f);
  const Hyper2F1 hyper(ctx, 1, 5, 0);
  const auto all = hyper.all_values();
  for (std::uint32_t x = 0; x < 7; ++x) {
    EXPECT_NEAR(std::abs(oracle::hypergeometric(walk, {1, 5}, {0}, Element{x}) - expected[x]), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(hyper(Element{x}) - expected[x]), 0.0, 1e-12) << x;
    EXPECT_NEAR(std::abs(all[x] - expected[x]), 0.0, 1e-12) << x;
  }
}

TEST(Hypergeometric, ThreeFTwoValues) {
  const auto f5 = build_field(5, 1);
  const FieldContext ctx5(f5);
  const oracle::PowerWalk walk5(*f5);
  const HyperSpec degenerate{{1, 1, 1}, {0, 0}, Field::one()};
  const Complex v = hyper_npfn(ctx5, degenerate);
  EXPECT_LT(std::abs(v - oracle::hypergeometric(walk5, degenerate.top, degenerate.bottom, degenerate.argument)), 1e-12);
  EXPECT_LT(std::abs(v), 1e-12);
  const HyperSpec at_two{{1, 1, 1}, {0, 0}, Element{2}};
  EXPECT_LT(std::abs(hyper_npfn(ctx5, at_two) - Complex(0.12, 0.08)), 1e-12);

  const auto f7 = build_field(7, 1);
  const FieldContext ctx7(f7);
  const oracle::PowerWalk walk7(*f7);
  const HyperSpec spec{{1, 2, 3}, {4, 5}, Element{3}};
  const Complex expected(0.020408163265305923, -0.035347975664671016);
  EXPECT_LT(std::abs(oracle::hypergeometric(walk7, spec.top, spec.bottom, spec.argument) - expected), 1e-12);
  EXPECT_LT(std::abs(hyper_npfn(ctx7, spec) - expected), 1e-12);
}

TEST(Hypergeometric, ShapeMismatchIsRejected) {
  const FieldContext ctx(build_field(7, 1));
  EXPECT_THROW((void)hyper_npfn(ctx, {{1, 2}, {3, 4}, Field::one()}), Error);
  EXPECT_THROW((void)hyper_npfn(ctx, {{}, {}, Field::one()}), Error);
  EXPECT_THROW((void)hyper_2f1(ctx, 1, 2, 3, Element{7}), Error);
}

TEST(Hypergeometric, OneTermSeriesMatchesSpecialisation) {
  for (std::uint32_t q : {5u, 7u, 9u, 11u, 13u, 25u, 27u, 49u}) {
    const FieldContext ctx(field_of(q));
    const std::int64_t n = q - 1;
    for (std::int64_t a = 0; a < n; a += (q > 13 ? 5 : 1))
      for (std::int64_t b = 0; b < n; b += (q > 13 ? 3 : 1))
        for (std::int64_t c = 0; c < n; c += (q > 13 ? 7 : 1)) {
          const Hyper2F1 hyper(ctx, a, b, c);
          for (std::uint32_t x = 0; x < q; x += (q > 13 ? 4 : 1)) {
            const Complex lhs = hyper_npfn(ctx, {{a, b}, {c}, Element{x}});
            ASSERT_LT(std::abs(lhs - hyper(Element{x})), 1e-12) << q;
          }
        }
  }
}

TEST(Hypergeometric, CachedTableMatchesDefinitionExhaustively) {
  for (std::uint32_t q : {5u, 7u, 9u, 11u, 13u, 17u, 19u, 23u, 25u}) {
    const auto f = field_of(q);
    const FieldContext ctx(f);
    const oracle::PowerWalk walk(*f);
    const auto binom = oracle::binomial_table(walk);
    const std::int64_t n = q - 1;
    const auto idx = [n](std::int64_t k) { return static_cast<std::size_t>(((k % n) + n) % n); };
    double worst = 0.0;
    for (std::int64_t a = 0; a < n; ++a)
      for (std::int64_t b = 0; b < n; ++b)
        for (std::int64_t c = 0; c < n; ++c) {
          std::vector<Complex> w(n);
          for (std::int64_t l = 0; l < n; ++l)
            w[l] = binom[idx(a + l)][idx(l)] * binom[idx(b + l)][idx(c + l)] * (double(q) / n);
          const auto values = Hyper2F1(ctx, a, b, c).all_values();
          for (std::uint32_t x = 0; x < q; ++x) {
            Complex expected{};
            for (std::int64_t l = 0; l < n; ++l) expected += w[l] * walk.chi(l, Element{x});
            worst = std::max(worst, std::abs(values[x] - expected));
          }
        }
    EXPECT_LT(worst, 1e-7) << "q=" << q;
  }
}
