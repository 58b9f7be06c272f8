#include <gtest/gtest.h>

#include <set>

#include "ffhyper/finite_field.hpp"
#include "oracle.hpp"

using namespace ffhyper;

namespace {

// Schoolbook multiplication of digit vectors modulo the field's modulus.
Element poly_mul(const Field& f, Element x, Element y) {
  const auto p = f.characteristic();
  const auto e = f.degree();
  const auto a = f.digits(x);
  const auto b = f.digits(y);
  std::vector<std::uint64_t> c(2 * e, 0);
  for (std::uint32_t i = 0; i < e; ++i)
    for (std::uint32_t j = 0; j < e; ++j) c[i + j] = (c[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  const auto m = f.modulus();
  for (std::size_t k = 2 * e - 1; k >= e; --k) {
    const std::uint64_t top = c[k];
    c[k] = 0;
    for (std::uint32_t i = 0; i < e; ++i) c[k - e + i] = (c[k - e + i] + (p - m[i]) * top) % p;
  }
  std::vector<std::uint32_t> d(e);
  for (std::uint32_t i = 0; i < e; ++i) d[i] = static_cast<std::uint32_t>(c[i]);
  return f.from_digits(d);
}

std::uint64_t int_order(std::uint64_t g, std::uint64_t p) {
  std::uint64_t x = g % p;
  std::uint64_t k = 1;
  while (x != 1) {
    x = x * g % p;
    ++k;
  }
  return k;
}

}  // namespace

TEST(FiniteField, PrimeFieldGenerators) {
  EXPECT_EQ(build_field(7, 1)->generator(), Element{3});
  EXPECT_EQ(int_order(3, 7), 6u);
  EXPECT_EQ(build_field(5, 1)->generator(), Element{2});
  EXPECT_EQ(int_order(2, 5), 4u);
  // Smallest: 2 has order 3 mod 7.
  EXPECT_EQ(int_order(2, 7), 3u);
}

TEST(FiniteField, NineElementField) {
  const auto f = build_field(3, 2);
  EXPECT_EQ(f->order(), 9u);
  const std::vector<std::uint32_t> expected_modulus{1, 0, 1};
  EXPECT_EQ(std::vector<std::uint32_t>(f->modulus().begin(), f->modulus().end()), expected_modulus);
  // alpha + 1 has digits [1, 1].
  const Element alpha_plus_one = f->parse("1,1");
  EXPECT_EQ(f->generator(), alpha_plus_one);
  // (alpha + 1)^2 = -alpha.
  const Element alpha = f->parse("0,1");
  EXPECT_EQ(poly_mul(*f, alpha_plus_one, alpha_plus_one), f->neg(alpha));
  Element x = alpha_plus_one;
  int order = 1;
  while (x != Field::one()) {
    x = poly_mul(*f, x, alpha_plus_one);
    ++order;
  }
  EXPECT_EQ(order, 8);
  EXPECT_EQ(f->mul(alpha, alpha), f->parse("2,0"));
}

TEST(FiniteField, ArithmeticExamples) {
  const auto f7 = build_field(7, 1);
  EXPECT_EQ(f7->inv(Element{3}), Element{5});
  const auto f5 = build_field(5, 1);
  EXPECT_EQ(f5->pow(Element{2}, 4), Field::one());
  EXPECT_EQ(f7->pow(Element{3}, -1), Element{5});
  EXPECT_EQ(f7->pow(Field::zero(), 0), Field::one());
  EXPECT_THROW((void)f7->inv(Field::zero()), Error);
  EXPECT_EQ(f7->from_integer(-1), Element{6});
  EXPECT_EQ(f7->sub(Element{2}, Element{5}), Element{4});
}

TEST(FiniteField, DiscreteLog) {
  const auto f = build_field(7, 1);
  EXPECT_EQ(f->discrete_log(Element{6}), 3u);
  EXPECT_EQ(f->discrete_log(Field::one()), 0u);
  try {
    (void)f->discrete_log(Field::zero());
    FAIL() << "expected NoDiscreteLog";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoDiscreteLog);
  }
}

TEST(FiniteField, TraceExamples) {
  const auto f7 = build_field(7, 1);
  for (std::uint32_t v = 0; v < 7; ++v) EXPECT_EQ(f7->trace_to_prime(Element{v}), v);
  const auto f9 = build_field(3, 2);
  EXPECT_EQ(f9->trace_to_prime(f9->parse("0,1")), 0u);
  EXPECT_EQ(f9->trace_to_prime(Field::one()), 2u);
}

TEST(FiniteField, SqrtExamples) {
  const auto f = build_field(7, 1);
  EXPECT_EQ(sqrt_opt(*f, Element{2}), (std::vector<Element>{Element{3}, Element{4}}));
  EXPECT_TRUE(sqrt_opt(*f, Element{3}).empty());
  std::set<std::uint32_t> squares;
  for (std::uint32_t y = 0; y < 7; ++y) squares.insert(y * y % 7);
  EXPECT_FALSE(squares.contains(3));
  EXPECT_EQ(sqrt_opt(*f, Field::zero()), std::vector<Element>{Field::zero()});
}

TEST(FiniteField, CubicRootExamples) {
  const auto f5 = build_field(5, 1);
  EXPECT_EQ(roots_of_cubic(*f5, Element{1}, Element{0}),
            (std::vector<Element>{Element{0}, Element{2}, Element{3}}));
  const auto f7 = build_field(7, 1);
  EXPECT_EQ(roots_of_cubic(*f7, Element{0}, f7->from_integer(-1)),
            (std::vector<Element>{Element{1}, Element{2}, Element{4}}));
  for (std::uint32_t x = 0; x < 7; ++x) EXPECT_NE((x * x * x + x + 1) % 7, 0u);
  EXPECT_TRUE(roots_of_cubic(*f7, Element{1}, Element{1}).empty());
}

TEST(FiniteField, ConstructionErrors) {
  const auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::NotApplicable;
  };
  EXPECT_EQ(kind_of([] { build_field(9, 1); }), ErrorKind::NotPrime);
  EXPECT_EQ(kind_of([] { build_field(2, 3); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { build_field(3, 1); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { build_field(7, 0); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { build_field(200003, 1); }), ErrorKind::SizeOverflow);
  EXPECT_EQ(kind_of([] { build_field(3, 40); }), ErrorKind::SizeOverflow);
  FieldOptions bad;
  bad.generator = Element{2};
  EXPECT_EQ(kind_of([&] { build_field(7, 1, bad); }), ErrorKind::InvalidInput);
}

TEST(FiniteField, TextEncoding) {
  const auto f9 = build_field(3, 2);
  EXPECT_EQ(f9->format(f9->parse("2,1")), "2,1");
  EXPECT_EQ(f9->parse("2,1"), Element{2 + 3});
  EXPECT_EQ(f9->parse("2"), Element{2});
  EXPECT_THROW((void)f9->parse("3,0"), Error);
  EXPECT_THROW((void)f9->parse("1,1,1"), Error);
  EXPECT_THROW((void)f9->parse("a"), Error);
  EXPECT_THROW((void)f9->parse(""), Error);
  const auto f7 = build_field(7, 1);
  EXPECT_EQ(f7->format(Element{6}), "6");
  EXPECT_THROW((void)f7->parse("7"), Error);
  EXPECT_THROW((void)f7->parse("1,0"), Error);
  EXPECT_THROW((void)f7->parse("-1"), Error);
}

class FieldInvariants : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(FieldInvariants, Hold) {
  const auto [p, e] = GetParam();
  const auto f = build_field(p, e);
  const std::uint32_t q = f->order();

  // Modulus: irreducible checks for degree <= 3 (no roots) and lexicographic minimality.
  if (e > 1 && e <= 3) {
    const auto m = f->modulus();
    const auto has_root = [&](const std::vector<std::uint32_t>& poly) {
      for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t v = 0;
        for (std::size_t i = poly.size(); i-- > 0;) v = (v * x + poly[i]) % p;
        if (v == 0) return true;
      }
      return false;
    };
    std::vector<std::uint32_t> poly(m.begin(), m.end());
    EXPECT_FALSE(has_root(poly));
    // Every lexicographically smaller candidate (c_0 compared first) has a root.
    std::vector<std::uint32_t> cand(e + 1, 0);
    cand[e] = 1;
    while (cand != poly) {
      EXPECT_TRUE(has_root(cand));
      std::int64_t i = static_cast<std::int64_t>(e) - 1;
      while (i >= 0 && ++cand[static_cast<std::size_t>(i)] == p) cand[static_cast<std::size_t>(i--)] = 0;
    }
  }

  // Table multiplication agrees with polynomial multiplication.
  if (e > 1) {
    for (std::uint32_t x = 0; x < q; x += 3)
      for (std::uint32_t y = 0; y < q; ++y) ASSERT_EQ(f->mul(Element{x}, Element{y}), poly_mul(*f, Element{x}, Element{y}));
  }

  // exp/log bijection; generator primitive and smallest.
  std::set<std::uint32_t> seen;
  for (std::uint32_t j = 0; j < q - 1; ++j) {
    const Element x = f->exp(j);
    EXPECT_EQ(f->discrete_log(x), j);
    seen.insert(x.value);
  }
  EXPECT_EQ(seen.size(), q - 1);
  EXPECT_FALSE(seen.contains(0));
  EXPECT_EQ(f->exp(0), Field::one());
  EXPECT_EQ(oracle::order(*f, f->generator()), q - 1);
  for (std::uint32_t v = 1; v < f->generator().value; ++v) EXPECT_LT(oracle::order(*f, Element{v}), q - 1);

  // Trace additivity, Frobenius invariance, sum of conjugates.
  const oracle::PowerWalk walk(*f);
  for (std::uint32_t x = 0; x < q; ++x) {
    const Element ex{x};
    EXPECT_EQ(f->trace_to_prime(f->pow(ex, p)), f->trace_to_prime(ex));
    EXPECT_NEAR(std::abs(walk.theta(ex) - std::polar(1.0, 2 * std::numbers::pi * f->trace_to_prime(ex) / p)), 0.0, 1e-9);
    for (std::uint32_t y = 0; y < q; y += 7) {
      EXPECT_EQ(f->trace_to_prime(f->add(ex, Element{y})),
                (f->trace_to_prime(ex) + f->trace_to_prime(Element{y})) % p);
    }
  }

  // Exactly (q + 1)/2 elements have square roots, and they square back.
  std::uint32_t with_roots = 0;
  for (std::uint32_t x = 0; x < q; ++x) {
    const auto roots = sqrt_opt(*f, Element{x});
    if (!roots.empty()) ++with_roots;
    for (auto r : roots) EXPECT_EQ(f->mul(r, r), Element{x});
  }
  EXPECT_EQ(with_roots, (q + 1) / 2);

  // Cubic roots re-substitute to zero, and the scan misses none.
  for (std::uint32_t a = 0; a < q; a += std::max(1u, q / 9)) {
    for (std::uint32_t b = 0; b < q; b += std::max(1u, q / 7)) {
      const auto roots = roots_of_cubic(*f, Element{a}, Element{b});
      std::size_t zeros = 0;
      for (std::uint32_t x = 0; x < q; ++x) {
        const Element ex{x};
        const Element v = f->add(f->mul(ex, f->add(f->mul(ex, ex), Element{a})), Element{b});
        if (v == Field::zero()) ++zeros;
      }
      EXPECT_EQ(roots.size(), zeros);
      EXPECT_TRUE(std::is_sorted(roots.begin(), roots.end()));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldInvariants,
                         ::testing::Values(std::make_pair(5u, 1u), std::make_pair(7u, 1u),
                                           std::make_pair(3u, 2u), std::make_pair(3u, 3u),
                                           std::make_pair(3u, 4u), std::make_pair(5u, 2u),
                                           std::make_pair(5u, 3u), std::make_pair(7u, 2u),
                                           std::make_pair(11u, 2u), std::make_pair(13u, 1u),
                                           std::make_pair(101u, 1u)));

TEST(FiniteField, AlternateGenerator) {
  const auto f = build_field(11, 1);
  const auto prims = primitive_elements(*f);
  ASSERT_GE(prims.size(), 2u);
  EXPECT_EQ(prims.front(), f->generator());
  FieldOptions opts;
  opts.generator = prims[1];
  const auto g = build_field(11, 1, opts);
  EXPECT_EQ(g->generator(), prims[1]);
  EXPECT_EQ(g->discrete_log(prims[1]), 1u);
}

TEST(FiniteField, PrimePowerHelpers) {
  EXPECT_EQ(prime_power(343), std::make_optional(std::make_pair(7u, 3u)));
  EXPECT_EQ(prime_power(81), std::make_optional(std::make_pair(3u, 4u)));
  EXPECT_FALSE(prime_power(45).has_value());
  EXPECT_FALSE(prime_power(1).has_value());
  EXPECT_EQ(prime_factors(360), (std::vector<std::uint64_t>{2, 3, 5}));
}
