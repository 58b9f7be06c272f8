#include "ffhyper/char_sums.hpp"

#include "ffhyper/dft.hpp"

namespace ffhyper {

namespace {

std::vector<Complex> direct_table(const Characters& chars) {
  const Field& field = chars.field();
  const std::uint32_t n = field.unit_order();
  std::vector<Complex> values(n);
  for (std::uint32_t m = 0; m < n; ++m) {
    Complex sum{};
    for (std::uint32_t v = 1; v < field.order(); ++v) {
      const Element x{v};
      const std::uint64_t j = std::uint64_t{m} * field.discrete_log(x) % n;
      sum += chars.unit_root(static_cast<std::int64_t>(j)) * chars.additive(x);
    }
    values[m] = sum;
  }
  return values;
}

std::vector<Complex> dft_table(const Characters& chars) {
  const Field& field = chars.field();
  const std::uint32_t n = field.unit_order();
  std::vector<Complex> orbit(n);
  for (std::uint32_t j = 0; j < n; ++j) orbit[j] = chars.additive(field.exp(j));
  return bluestein_dft(orbit, +1);
}

}  // namespace

GaussSumTable gauss_sum_table(const Characters& chars, GaussMethod method,
                              std::uint32_t dft_crossover) {
  if (method == GaussMethod::dft && chars.field().order() >= dft_crossover) {
    return GaussSumTable(chars.field_ptr(), dft_table(chars), GaussMethod::dft);
  }
  return GaussSumTable(chars.field_ptr(), direct_table(chars), GaussMethod::direct);
}

FieldContext::FieldContext(std::shared_ptr<const Field> field, std::uint32_t dft_crossover)
    : chars_(std::move(field)), dft_crossover_(dft_crossover) {}

const GaussSumTable& FieldContext::gauss() const {
  std::call_once(gauss_once_, [this] {
    gauss_ = std::make_unique<const GaussSumTable>(
        gauss_sum_table(chars_, GaussMethod::dft, dft_crossover_));
  });
  return *gauss_;
}

Complex jacobi_sum(const FieldContext& ctx, CharIndex a, CharIndex b) {
  const Field& field = ctx.field();
  const std::uint32_t ar = field.reduce_index(a);
  const std::uint32_t br = field.reduce_index(b);
  const std::uint32_t sum = field.reduce_index(std::int64_t{ar} + br);
  if (sum == 0) {
    if (ar == 0) return {static_cast<double>(field.order()) - 2.0, 0.0};
    return {-Characters::sign_at_minus_one(ar), 0.0};
  }
  const GaussSumTable& g = ctx.gauss();
  return g[ar] * g[br] / g[sum];
}

Complex jacobi_sum_direct(const Characters& chars, CharIndex a, CharIndex b) {
  const Field& field = chars.field();
  Complex sum{};
  for (std::uint32_t v = 0; v < field.order(); ++v) {
    const Element x{v};
    sum += chars.multiplicative(a, x) * chars.multiplicative(b, field.sub(Field::one(), x));
  }
  return sum;
}

Complex greene_binomial(const FieldContext& ctx, CharIndex a, CharIndex b) {
  const double q = ctx.field().order();
  return Characters::sign_at_minus_one(ctx.field().reduce_index(b)) / q *
         jacobi_sum(ctx, a, -b);
}

double check_identity(const FieldContext& ctx, IdentityKind kind, std::int64_t first,
                      std::int64_t second) {
  const Field& field = ctx.field();
  const Characters& chars = ctx.chars();
  const GaussSumTable& g = ctx.gauss();
  const std::uint32_t q = field.order();
  const std::uint32_t n = field.unit_order();

  switch (kind) {
    case IdentityKind::theta_expansion: {
      if (first <= 0 || first >= q) {
        throw Error(ErrorKind::NotApplicable, "theta expansion needs a nonzero alpha");
      }
      const Element alpha{static_cast<std::uint32_t>(first)};
      Complex rhs{};
      for (std::uint32_t m = 0; m < n; ++m) rhs += g[-static_cast<CharIndex>(m)] * chars.multiplicative(m, alpha);
      rhs /= static_cast<double>(n);
      return std::abs(chars.additive(alpha) - rhs);
    }
    case IdentityKind::gauss_inverse: {
      if (field.reduce_index(first) == 0) {
        throw Error(ErrorKind::NotApplicable, "Gauss inverse relation needs a nontrivial character");
      }
      const Complex lhs = g[first] * g[-first];
      const double rhs = q * Characters::sign_at_minus_one(field.reduce_index(first));
      return std::abs(lhs - rhs);
    }
    case IdentityKind::davenport_hasse: {
      const std::int64_t m = first;
      if (m <= 0 || n % m != 0) {
        throw Error(ErrorKind::NotApplicable, "Davenport-Hasse needs q = 1 mod m");
      }
      const std::int64_t psi = second;
      const std::int64_t step = n / m;
      Complex lhs{1.0, 0.0};
      Complex base{1.0, 0.0};
      for (std::int64_t k = 0; k < m; ++k) {
        lhs *= g[psi + k * step];
        base *= g[k * step];
      }
      // psi(m^{-m}); p does not divide m because q = 1 mod m.
      const Element m_elem = field.from_integer(m);
      const Complex psi_value = chars.multiplicative(psi, field.pow(m_elem, -m));
      const Complex rhs = -g[m * psi] * psi_value * base;
      return std::abs(lhs - rhs);
    }
    case IdentityKind::gauss_binomial: {
      const std::int64_t m = first;
      const std::int64_t k = second;
      if (field.reduce_index(m - k) == 0) {
        throw Error(ErrorKind::NotApplicable, "Gauss-binomial relation needs T^{m-n} nontrivial");
      }
      const Complex lhs = g[m] * g[-k];
      const Complex rhs = static_cast<double>(q) * greene_binomial(ctx, m, k) * g[m - k] *
                          Characters::sign_at_minus_one(field.reduce_index(k));
      return std::abs(lhs - rhs);
    }
  }
  return 0.0;
}

}  // namespace ffhyper
