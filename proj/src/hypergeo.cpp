#include "ffhyper/hypergeo.hpp"

#include "ffhyper/dft.hpp"

namespace ffhyper {

Complex hyper_npfn(const FieldContext& ctx, const HyperSpec& spec) {
  if (spec.top.size() != spec.bottom.size() + 1) {
    throw Error(ErrorKind::InvalidInput, "top must have exactly one more parameter than bottom");
  }
  const Field& field = ctx.field();
  if (!field.contains(spec.argument)) throw Error(ErrorKind::InvalidInput, "argument not in field");
  if (spec.argument.value == 0) return {};

  const Characters& chars = ctx.chars();
  const std::uint32_t n = field.unit_order();
  Complex sum{};
  for (std::uint32_t l = 0; l < n; ++l) {
    Complex term = greene_binomial(ctx, spec.top[0] + l, l);
    for (std::size_t i = 0; i < spec.bottom.size(); ++i) {
      term *= greene_binomial(ctx, spec.top[i + 1] + l, spec.bottom[i] + l);
    }
    sum += term * chars.multiplicative(l, spec.argument);
  }
  return sum * (static_cast<double>(field.order()) / n);
}

Hyper2F1::Hyper2F1(const FieldContext& ctx, CharIndex a, CharIndex b, CharIndex c)
    : chars_(&ctx.chars()) {
  const Field& field = ctx.field();
  const std::uint32_t n = field.unit_order();
  const double scale = static_cast<double>(field.order()) / n;
  weights_.resize(n);
  for (std::uint32_t l = 0; l < n; ++l) {
    weights_[l] = scale * greene_binomial(ctx, a + l, l) * greene_binomial(ctx, b + l, c + l);
  }
}

Complex Hyper2F1::operator()(Element x) const {
  const Field& field = chars_->field();
  if (!field.contains(x)) throw Error(ErrorKind::InvalidInput, "argument not in field");
  if (x.value == 0) return {};
  const std::uint64_t j = field.discrete_log(x);
  const std::uint64_t n = field.unit_order();
  Complex sum{};
  for (std::uint64_t l = 0; l < n; ++l) {
    sum += weights_[l] * chars_->unit_root(static_cast<std::int64_t>(l * j % n));
  }
  return sum;
}

std::vector<Complex> Hyper2F1::all_values() const {
  const Field& field = chars_->field();
  // F(g^j) = sum_l w_l omega^{lj}: one forward transform of the weights.
  const auto orbit = bluestein_dft(weights_, +1);
  std::vector<Complex> values(field.order(), Complex{});
  for (std::uint32_t j = 0; j < field.unit_order(); ++j) values[field.exp(j).value] = orbit[j];
  return values;
}

Complex hyper_2f1(const FieldContext& ctx, CharIndex a, CharIndex b, CharIndex c, Element x) {
  return Hyper2F1(ctx, a, b, c)(x);
}

}  // namespace ffhyper
