#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "ffhyper/characters.hpp"

namespace ffhyper {

enum class GaussMethod { direct, dft };

inline constexpr std::uint32_t kDefaultDftCrossover = 512;

/// Gauss sums G_m = sum_x T^m(x) theta(x) for m = 0..q-2.
class GaussSumTable {
 public:
  GaussSumTable(std::shared_ptr<const Field> field, std::vector<Complex> values, GaussMethod method)
      : field_(std::move(field)), values_(std::move(values)), method_(method) {}

  /// G_m for any integer m (taken mod q - 1, so G_{-m} is G_{q-1-m}).
  const Complex& operator[](CharIndex m) const noexcept { return values_[field_->reduce_index(m)]; }

  const std::vector<Complex>& values() const noexcept { return values_; }
  GaussMethod method() const noexcept { return method_; }
  const Field& field() const noexcept { return *field_; }

 private:
  std::shared_ptr<const Field> field_;
  std::vector<Complex> values_;
  GaussMethod method_;
};

/// Builds every Gauss sum of the field. `direct` sums the definition (O(q^2));
/// `dft` treats G_m as the length-(q-1) transform of j -> theta(g^j) and uses
/// Bluestein's algorithm, falling back to `direct` when q < dft_crossover.
GaussSumTable gauss_sum_table(const Characters& chars, GaussMethod method,
                              std::uint32_t dft_crossover = kDefaultDftCrossover);

/// A field with its character tables and a lazily built, shared Gauss-sum table.
class FieldContext {
 public:
  explicit FieldContext(std::shared_ptr<const Field> field,
                        std::uint32_t dft_crossover = kDefaultDftCrossover);

  FieldContext(const FieldContext&) = delete;
  FieldContext& operator=(const FieldContext&) = delete;

  const Field& field() const noexcept { return chars_.field(); }
  const std::shared_ptr<const Field>& field_ptr() const noexcept { return chars_.field_ptr(); }
  const Characters& chars() const noexcept { return chars_; }

  /// Computed on first use; concurrent callers see the same table.
  const GaussSumTable& gauss() const;

 private:
  Characters chars_;
  std::uint32_t dft_crossover_;
  mutable std::once_flag gauss_once_;
  mutable std::unique_ptr<const GaussSumTable> gauss_;
};

/// J(A, B) from the Gauss-sum table: G(A)G(B)/G(AB) when AB is nontrivial,
/// q - 2 for J(eps, eps) and -A(-1) for J(A, conj A) with A nontrivial.
Complex jacobi_sum(const FieldContext& ctx, CharIndex a, CharIndex b);

/// J(A, B) = sum_x A(x) B(1 - x) summed term by term.
Complex jacobi_sum_direct(const Characters& chars, CharIndex a, CharIndex b);

/// Greene's binomial coefficient (A choose B) = B(-1)/q * J(A, conj B).
Complex greene_binomial(const FieldContext& ctx, CharIndex a, CharIndex b);

enum class IdentityKind {
  theta_expansion,  ///< theta(alpha) = 1/(q-1) sum_m G_{-m} T^m(alpha); first = alpha
  gauss_inverse,    ///< G_i G_{-i} = q T^i(-1); first = i
  davenport_hasse,  ///< product over chi^m = 1; first = m, second = psi index
  gauss_binomial,   ///< G_m G_{-n} = q (T^m choose T^n) G_{m-n} T^n(-1); first = m, second = n
};

/// |LHS - RHS| for the identity. Throws Error(NotApplicable) when the identity's
/// hypothesis fails for these parameters.
double check_identity(const FieldContext& ctx, IdentityKind kind, std::int64_t first,
                      std::int64_t second = 0);

}  // namespace ffhyper
