#pragma once

// Brute-force reference computations for the test suites. Nothing here touches the
// discrete-log tables, the Gauss-sum tables or the hypergeometric evaluator; field
// elements are combined only through add/mul, and characters are evaluated by
// searching the generator's powers directly.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <vector>

#include "ffhyper/finite_field.hpp"

namespace oracle {

using Complex = std::complex<double>;
using ffhyper::Element;
using ffhyper::Field;

/// Discrete logs found by walking g, g^2, ... with field multiplication.
class PowerWalk {
 public:
  explicit PowerWalk(const Field& field) : field_(field), log_(field.order(), -1) {
    Element x = Field::one();
    for (std::int64_t j = 0; j < field.unit_order(); ++j) {
      log_[x.value] = j;
      x = field.mul(x, field.generator());
    }
  }

  std::int64_t log(Element x) const { return log_[x.value]; }

  /// T^m(x) with T(g) = e^{2 pi i/(q-1)}, T^m(0) = 0.
  Complex chi(std::int64_t m, Element x) const {
    if (x.value == 0) return {0.0, 0.0};
    const double n = field_.unit_order();
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) * static_cast<double>(log(x)) / n);
  }

  /// theta(x) with the trace computed as the sum of Frobenius conjugates.
  Complex theta(Element x) const {
    Element sum = Field::zero();
    Element conj = x;
    for (std::uint32_t i = 0; i < field_.degree(); ++i) {
      sum = field_.add(sum, conj);
      Element next = Field::one();
      for (std::uint32_t k = 0; k < field_.characteristic(); ++k) next = field_.mul(next, conj);
      conj = next;
    }
    const double p = field_.characteristic();
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(sum.value) / p);
  }

  const Field& field() const { return field_; }

 private:
  const Field& field_;
  std::vector<std::int64_t> log_;
};

inline Complex gauss_sum(const PowerWalk& w, std::int64_t m) {
  Complex s{};
  for (std::uint32_t v = 0; v < w.field().order(); ++v) s += w.chi(m, Element{v}) * w.theta(Element{v});
  return s;
}

inline Complex jacobi_sum(const PowerWalk& w, std::int64_t a, std::int64_t b) {
  const Field& f = w.field();
  Complex s{};
  for (std::uint32_t v = 0; v < f.order(); ++v) {
    const Element x{v};
    s += w.chi(a, x) * w.chi(b, f.sub(Field::one(), x));
  }
  return s;
}

inline Complex binomial(const PowerWalk& w, std::int64_t a, std::int64_t b) {
  const double sign = (((b % 2) + 2) % 2 == 0) ? 1.0 : -1.0;
  return sign / w.field().order() * jacobi_sum(w, a, -b);
}

/// Table binom[a][b] of every binomial, indices in [0, q-1).
inline std::vector<std::vector<Complex>> binomial_table(const PowerWalk& w) {
  const std::uint32_t n = w.field().unit_order();
  std::vector<std::vector<Complex>> t(n, std::vector<Complex>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) t[a][b] = binomial(w, a, b);
  return t;
}

/// Definitional {n+1}F{n}, with each binomial summed from its Jacobi sum.
inline Complex hypergeometric(const PowerWalk& w, const std::vector<std::int64_t>& top,
                              const std::vector<std::int64_t>& bottom, Element x) {
  const std::int64_t n = w.field().unit_order();
  Complex s{};
  for (std::int64_t l = 0; l < n; ++l) {
    Complex term = binomial(w, top[0] + l, l);
    for (std::size_t i = 0; i < bottom.size(); ++i) term *= binomial(w, top[i + 1] + l, bottom[i] + l);
    s += term * w.chi(l, x);
  }
  return s * (static_cast<double>(w.field().order()) / static_cast<double>(n));
}

/// Projective point count of y^2 = x^3 + c2 x^2 + c1 x + c0 by enumerating all (x, y).
inline std::int64_t count_points(const Field& f, Element c2, Element c1, Element c0) {
  std::int64_t count = 1;
  for (std::uint32_t xv = 0; xv < f.order(); ++xv) {
    const Element x{xv};
    const Element rhs = f.add(f.mul(f.add(f.mul(f.add(x, c2), x), c1), x), c0);
    for (std::uint32_t yv = 0; yv < f.order(); ++yv) {
      const Element y{yv};
      if (f.mul(y, y) == rhs) ++count;
    }
  }
  return count;
}

inline std::int64_t trace(const Field& f, Element c2, Element c1, Element c0) {
  return static_cast<std::int64_t>(f.order()) + 1 - count_points(f, c2, c1, c0);
}

/// Multiplicative order of x computed by repeated multiplication.
inline std::uint64_t order(const Field& f, Element x) {
  Element y = x;
  std::uint64_t k = 1;
  while (y != Field::one()) {
    y = f.mul(y, x);
    ++k;
  }
  return k;
}

}  // namespace oracle
