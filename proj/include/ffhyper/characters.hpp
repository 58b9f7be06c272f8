#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "ffhyper/finite_field.hpp"

namespace ffhyper {

using Complex = std::complex<double>;

/// Exponent m of the multiplicative character T^m, where T(generator) = e^{2 pi i/(q-1)}.
/// Any integer is accepted and reduced mod q - 1; m = 0 is the trivial character.
using CharIndex = std::int64_t;

/// theta(x) = e^{2 pi i tr(x)/p}, evaluated directly.
Complex additive_char(const Field& field, Element x);

/// T^m(x), with T^m(0) = 0 for every m (including the trivial character).
Complex mult_char(const Field& field, CharIndex m, Element x);

/// Root-of-unity tables for evaluating characters of one field by lookup.
class Characters {
 public:
  explicit Characters(std::shared_ptr<const Field> field);

  const Field& field() const noexcept { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const noexcept { return field_; }

  Complex additive(Element x) const noexcept { return zeta_[field_->trace_to_prime(x)]; }

  Complex multiplicative(CharIndex m, Element x) const;

  /// omega^j with omega = e^{2 pi i/(q-1)}.
  Complex unit_root(std::int64_t j) const noexcept { return omega_[field_->reduce_index(j)]; }

  /// T^m(-1) = (-1)^m, exact.
  static double sign_at_minus_one(CharIndex m) noexcept { return (m % 2 == 0) ? 1.0 : -1.0; }

 private:
  std::shared_ptr<const Field> field_;
  std::vector<Complex> zeta_;
  std::vector<Complex> omega_;
};

enum class OrthogonalityKind {
  char_sum_over_x,  ///< sum over x of T^n(x); param is n
  char_sum_over_n,  ///< sum over n of T^n(x); param is the canonical value of x
  delta_identity,   ///< sum over z of theta(z v); param is the canonical value of v
};

/// |computed - expected| for the chosen orthogonality relation.
double check_orthogonality(const Characters& chars, OrthogonalityKind kind, std::int64_t param);

}  // namespace ffhyper
