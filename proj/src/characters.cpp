#include "ffhyper/characters.hpp"

#include <numbers>

namespace ffhyper {

namespace {

Complex unit(std::uint64_t numerator, std::uint64_t denominator) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(numerator) /
                             static_cast<double>(denominator));
}

}  // namespace

Complex additive_char(const Field& field, Element x) {
  return unit(field.trace_to_prime(x), field.characteristic());
}

Complex mult_char(const Field& field, CharIndex m, Element x) {
  if (x.value == 0) return {0.0, 0.0};
  const std::uint64_t j = std::uint64_t{field.reduce_index(m)} * field.discrete_log(x);
  return unit(j % field.unit_order(), field.unit_order());
}

Characters::Characters(std::shared_ptr<const Field> field) : field_(std::move(field)) {
  const std::uint32_t p = field_->characteristic();
  const std::uint32_t n = field_->unit_order();
  zeta_.reserve(p);
  for (std::uint32_t k = 0; k < p; ++k) zeta_.push_back(unit(k, p));
  omega_.reserve(n);
  for (std::uint32_t k = 0; k < n; ++k) omega_.push_back(unit(k, n));
}

Complex Characters::multiplicative(CharIndex m, Element x) const {
  if (x.value == 0) return {0.0, 0.0};
  const std::uint64_t j = std::uint64_t{field_->reduce_index(m)} * field_->discrete_log(x);
  return omega_[j % field_->unit_order()];
}

double check_orthogonality(const Characters& chars, OrthogonalityKind kind, std::int64_t param) {
  const Field& field = chars.field();
  const std::uint32_t q = field.order();
  const std::uint32_t n = field.unit_order();
  Complex computed{};
  double expected = 0.0;
  switch (kind) {
    case OrthogonalityKind::char_sum_over_x: {
      for (std::uint32_t v = 0; v < q; ++v) computed += chars.multiplicative(param, Element{v});
      expected = field.reduce_index(param) == 0 ? static_cast<double>(n) : 0.0;
      break;
    }
    case OrthogonalityKind::char_sum_over_n: {
      if (param < 0 || param >= q) throw Error(ErrorKind::InvalidInput, "element out of range");
      const Element x{static_cast<std::uint32_t>(param)};
      for (std::uint32_t m = 0; m < n; ++m) computed += chars.multiplicative(m, x);
      expected = x == Field::one() ? static_cast<double>(n) : 0.0;
      break;
    }
    case OrthogonalityKind::delta_identity: {
      if (param < 0 || param >= q) throw Error(ErrorKind::InvalidInput, "element out of range");
      const Element v{static_cast<std::uint32_t>(param)};
      for (std::uint32_t z = 0; z < q; ++z) computed += chars.additive(field.mul(Element{z}, v));
      expected = v.value == 0 ? static_cast<double>(q) : 0.0;
      break;
    }
  }
  return std::abs(computed - expected);
}

}  // namespace ffhyper
