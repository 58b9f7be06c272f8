#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ffhyper/hypergeo.hpp"

namespace ffhyper {

enum class CurveShape {
  short_weierstrass,  ///< y^2 = x^3 + a x + b
  e1,                 ///< y^2 = x^3 + c x^2 + d
  e2,                 ///< y^2 = x^3 + f x^2 + g x
  general,            ///< y^2 = x^3 + c2 x^2 + c1 x + c0
};

std::string_view to_string(CurveShape shape) noexcept;

/// A cubic curve y^2 = x^3 + c2 x^2 + c1 x + c0 tagged with the shape it was built as.
struct CurveSpec {
  CurveShape shape = CurveShape::general;
  Element c2;
  Element c1;
  Element c0;

  static CurveSpec short_weierstrass(Element a, Element b) {
    return {CurveShape::short_weierstrass, Field::zero(), a, b};
  }
  static CurveSpec e1(Element c, Element d) { return {CurveShape::e1, c, Field::zero(), d}; }
  static CurveSpec e2(Element f, Element g) { return {CurveShape::e2, f, g, Field::zero()}; }
  static CurveSpec general(Element c2, Element c1, Element c0) {
    return {CurveShape::general, c2, c1, c0};
  }

  /// Shape-specific coefficients: (a, b), (c, d), (f, g) or (c2, c1, c0).
  std::vector<Element> coefficients() const;

  bool operator==(const CurveSpec&) const = default;
};

/// Discriminant of x^3 + c2 x^2 + c1 x + c0 vanishes (repeated root).
bool is_singular(const Field& field, const CurveSpec& curve);

/// x^3 + c2 x^2 + c1 x + c0.
Element curve_rhs(const Field& field, const CurveSpec& curve, Element x);

enum class TraceMethod { naive, thm_1_1, thm_1_2, thm_3_1, thm_3_2 };

std::string_view to_string(TraceMethod method) noexcept;

struct TraceReport {
  CurveSpec curve;
  TraceMethod method = TraceMethod::naive;
  Complex raw;
  std::int64_t trace = 0;
  double residual_to_integer = 0.0;
  double imag_residual = 0.0;
  /// The root k (1.1) or h (1.2) the reported value was computed from.
  std::optional<Element> auxiliary;
  /// Rounded traces from every other admissible root choice.
  std::vector<std::int64_t> alternative_traces;
  bool alternatives_agree = true;
  bool singular = false;
  /// |trace| <= 2 sqrt(q); only meaningful for nonsingular curves.
  bool within_hasse_bound = true;
};

/// Projective point count: 1 + #{(x, y) : y^2 = rhs(x)}.
std::int64_t count_points(const Field& field, const CurveSpec& curve);

/// q + 1 - count_points; also flags singular curves.
TraceReport trace_naive(const Field& field, const CurveSpec& curve);

/// Image of y^2 = x^3 + a x + b under x -> x + r: (3r, 3r^2 + a, r^3 + a r + b).
CurveSpec shift_substitution(const Field& field, Element a, Element b, Element r);

/// y^2 = x^3 + c x^2 + d, q = 1 mod 6:
/// a_q = -q T^{(q-1)/2}(-3c) 2F1(T^{(q-1)/6}, T^{5(q-1)/6}; eps | -27d/(4c^3)).
TraceReport trace_thm_3_1(const FieldContext& ctx, Element c, Element d);

/// y^2 = x^3 + f x^2 + g x, q = 1 mod 4:
/// a_q = -q T^{(q-1)/2}(2f) T^{(q-1)/4}(-1) 2F1(T^{(q-1)/4}, T^{3(q-1)/4}; eps | 4g/f^2).
TraceReport trace_thm_3_2(const FieldContext& ctx, Element f, Element g);

/// y^2 = x^3 + a x + b with a != 0, -a/3 a square, q = 1 mod 6; k is a root of 3k^2 + a:
/// a_q = -q T^{(q-1)/2}(-k) 2F1(T^{(q-1)/6}, T^{5(q-1)/6}; eps | -(k^3 + a k + b)/(4k^3)).
TraceReport trace_thm_1_1(const FieldContext& ctx, Element a, Element b);

/// y^2 = x^3 + a x + b with a nonzero root h of the cubic, q = 1 mod 4, q != 9:
/// a_q = -q T^{(q-1)/2}(6h) T^{(q-1)/4}(-1) 2F1(T^{(q-1)/4}, T^{3(q-1)/4}; eps | (12h^2 + 4a)/(9h^2)).
TraceReport trace_thm_1_2(const FieldContext& ctx, Element a, Element b);

/// Same preconditions as trace_thm_1_1, computed by shifting x -> x + k and applying
/// trace_thm_3_1 to the shifted curve.
TraceReport trace_thm_1_1_via_shift(const FieldContext& ctx, Element a, Element b);

/// Same preconditions as trace_thm_1_2, computed by shifting x -> x + h and applying
/// trace_thm_3_2 to the shifted curve.
TraceReport trace_thm_1_2_via_shift(const FieldContext& ctx, Element a, Element b);

/// Imaginary part must stay below this multiple of q for a trace to be reported.
inline constexpr double kImagTolerancePerQ = 1e-6;
/// Maximum distance from the nearest integer for a trace to be reported.
inline constexpr double kRoundingTolerance = 0.4;

}  // namespace ffhyper
