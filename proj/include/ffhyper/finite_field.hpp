#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ffhyper/error.hpp"

namespace ffhyper {

/// Element of F_q, stored by its canonical index sum(digits[i] * p^i).
struct Element {
  std::uint32_t value = 0;

  auto operator<=>(const Element&) const = default;
};

inline constexpr std::uint64_t kDefaultMaxOrder = 200000;

struct FieldOptions {
  std::uint64_t max_order = kDefaultMaxOrder;
  /// Use this generator instead of the smallest primitive element.
  std::optional<Element> generator;
};

/// The finite field F_{p^e} for an odd prime p, with discrete log, exponential and
/// trace tables. Immutable once built; share it through std::shared_ptr<const Field>.
class Field {
 public:
  static std::shared_ptr<const Field> build(std::uint32_t p, std::uint32_t e,
                                            const FieldOptions& options = {});

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return e_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Order of the multiplicative group, q - 1.
  std::uint32_t unit_order() const noexcept { return q_ - 1; }

  /// Monic modulus, coefficients low degree first (length e + 1). Empty when e = 1.
  std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }
  Element generator() const noexcept { return Element{exp_table_[1]}; }

  bool contains(Element x) const noexcept { return x.value < q_; }
  static constexpr Element zero() noexcept { return Element{0}; }
  static constexpr Element one() noexcept { return Element{1}; }
  /// Image of an integer in the prime subfield.
  Element from_integer(std::int64_t n) const noexcept;
  Element from_digits(std::span<const std::uint32_t> digits) const;
  std::vector<std::uint32_t> digits(Element x) const;

  Element add(Element x, Element y) const noexcept;
  Element sub(Element x, Element y) const noexcept;
  Element neg(Element x) const noexcept;
  Element mul(Element x, Element y) const noexcept;
  Element inv(Element x) const;
  Element div(Element x, Element y) const;
  /// x^k; negative k inverts. 0^0 = 1.
  Element pow(Element x, std::int64_t k) const;

  /// Discrete log to the base generator(), in [0, q-1). Throws NoDiscreteLog for 0.
  std::uint32_t discrete_log(Element x) const;
  /// generator()^j for any integer j.
  Element exp(std::int64_t j) const noexcept;
  /// Reduces a character or log index into [0, q-1).
  std::uint32_t reduce_index(std::int64_t j) const noexcept;

  /// x + x^p + ... + x^{p^{e-1}}, returned as a residue mod p.
  std::uint32_t trace_to_prime(Element x) const noexcept { return trace_table_[x.value]; }

  /// 1 for nonzero squares, -1 for non-squares, 0 for zero.
  int quadratic_character(Element x) const noexcept;

  /// Text encoding: decimal for e = 1, little-endian comma-separated digits otherwise.
  std::string format(Element x) const;
  Element parse(std::string_view text) const;

 private:
  Field() = default;

  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_table_;
  std::vector<std::uint32_t> log_table_;
  std::vector<std::uint32_t> trace_table_;
};

std::shared_ptr<const Field> build_field(std::uint32_t p, std::uint32_t e,
                                         const FieldOptions& options = {});

bool is_prime(std::uint64_t n) noexcept;
/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// Returns (p, e) when n = p^e for a prime p.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t n);

/// Square roots of x: {} for non-squares, {0} for zero, otherwise both roots in
/// canonical order.
std::vector<Element> sqrt_opt(const Field& field, Element x);

/// Every root of x^3 + a x + b in F_q, in canonical order.
std::vector<Element> roots_of_cubic(const Field& field, Element a, Element b);

/// Every element of multiplicative order q - 1, in canonical order.
std::vector<Element> primitive_elements(const Field& field);

}  // namespace ffhyper
