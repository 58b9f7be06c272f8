#pragma once

#include <vector>

#include "ffhyper/char_sums.hpp"

namespace ffhyper {

/// Parameters of {n+1}F{n}(A_0, ..., A_n; B_1, ..., B_n | x).
struct HyperSpec {
  std::vector<CharIndex> top;
  std::vector<CharIndex> bottom;
  Element argument;
};

/// Greene's series q/(q-1) * sum over chi of
/// (A_0 chi choose chi) (A_1 chi choose B_1 chi) ... (A_n chi choose B_n chi) chi(x).
/// Throws InvalidInput unless top has exactly one more entry than bottom.
Complex hyper_npfn(const FieldContext& ctx, const HyperSpec& spec);

/// 2F1(A, B; C | x) with the coefficient sequence
/// w_l = q/(q-1) (A T^l choose T^l)(B T^l choose C T^l) precomputed, so each
/// argument costs one O(q) dot product with l -> T^l(x).
class Hyper2F1 {
 public:
  Hyper2F1(const FieldContext& ctx, CharIndex a, CharIndex b, CharIndex c);

  Complex operator()(Element x) const;

  /// Values at every element, indexed by canonical value (one DFT over the generator orbit).
  std::vector<Complex> all_values() const;

  const std::vector<Complex>& coefficients() const noexcept { return weights_; }

 private:
  const Characters* chars_;
  std::vector<Complex> weights_;
};

Complex hyper_2f1(const FieldContext& ctx, CharIndex a, CharIndex b, CharIndex c, Element x);

}  // namespace ffhyper
