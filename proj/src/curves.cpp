#include "ffhyper/curves.hpp"

#include <cmath>
#include <string>

namespace ffhyper {

namespace {

void require_congruence(const Field& field, std::uint32_t modulus) {
  if (field.unit_order() % modulus != 0) {
    throw Error(ErrorKind::WrongCongruence, "q = " + std::to_string(field.order()) +
                                                " is not 1 mod " + std::to_string(modulus));
  }
}

void require_nonsingular(const Field& field, const CurveSpec& curve) {
  if (is_singular(field, curve)) throw Error(ErrorKind::Singular, "curve is singular");
}

// Rounds raw to the nearest integer under the reporting contract.
void finish(TraceReport& report, const Field& field) {
  const double q = field.order();
  const double nearest = std::round(report.raw.real());
  report.trace = static_cast<std::int64_t>(nearest);
  report.residual_to_integer = std::abs(report.raw.real() - nearest);
  report.imag_residual = std::abs(report.raw.imag());
  if (report.imag_residual >= kImagTolerancePerQ * q ||
      report.residual_to_integer >= kRoundingTolerance) {
    throw Error(ErrorKind::PrecisionFailure,
                "formula value " + std::to_string(report.raw.real()) + " + " +
                    std::to_string(report.raw.imag()) + "i is not close to an integer");
  }
  report.within_hasse_bound =
      static_cast<double>(report.trace) * static_cast<double>(report.trace) <= 4.0 * q;
}

std::int64_t rounded(const Complex& raw, const Field& field) {
  TraceReport scratch;
  scratch.raw = raw;
  finish(scratch, field);
  return scratch.trace;
}

// Roots k of 3k^2 + a = 0, after checking the preconditions of the k-root formula.
std::vector<Element> k_roots(const Field& field, Element a, Element b) {
  require_congruence(field, 6);
  if (a.value == 0) throw Error(ErrorKind::ZeroA, "a must be nonzero");
  require_nonsingular(field, CurveSpec::short_weierstrass(a, b));
  const Element target = field.div(field.neg(a), field.from_integer(3));
  auto roots = sqrt_opt(field, target);
  if (roots.empty()) throw Error(ErrorKind::NonResidue, "-a/3 is not a square");
  return roots;
}

// Nonzero roots h of h^3 + a h + b = 0, after checking the preconditions of the h-root formula.
std::vector<Element> h_roots(const Field& field, Element a, Element b) {
  require_congruence(field, 4);
  if (field.order() == 9) throw Error(ErrorKind::ExcludedQ, "q = 9 is excluded");
  if (field.characteristic() == 3) {
    throw Error(ErrorKind::CharacteristicThree, "9h^2 vanishes in characteristic 3");
  }
  require_nonsingular(field, CurveSpec::short_weierstrass(a, b));
  std::vector<Element> roots;
  for (const Element h : roots_of_cubic(field, a, b)) {
    if (h.value != 0) roots.push_back(h);
  }
  if (roots.empty()) throw Error(ErrorKind::NoNonzeroRoot, "cubic has no nonzero root");
  return roots;
}

void record_alternatives(TraceReport& report, const std::vector<std::int64_t>& traces) {
  report.alternative_traces.assign(traces.begin() + 1, traces.end());
  report.alternatives_agree = true;
  for (auto t : traces) report.alternatives_agree &= (t == traces.front());
}

}  // namespace

std::string_view to_string(CurveShape shape) noexcept {
  switch (shape) {
    case CurveShape::short_weierstrass: return "short";
    case CurveShape::e1: return "e1";
    case CurveShape::e2: return "e2";
    case CurveShape::general: return "general";
  }
  return "unknown";
}

std::string_view to_string(TraceMethod method) noexcept {
  switch (method) {
    case TraceMethod::naive: return "naive";
    case TraceMethod::thm_1_1: return "thm_1_1";
    case TraceMethod::thm_1_2: return "thm_1_2";
    case TraceMethod::thm_3_1: return "thm_3_1";
    case TraceMethod::thm_3_2: return "thm_3_2";
  }
  return "unknown";
}

std::vector<Element> CurveSpec::coefficients() const {
  switch (shape) {
    case CurveShape::short_weierstrass: return {c1, c0};
    case CurveShape::e1: return {c2, c0};
    case CurveShape::e2: return {c2, c1};
    case CurveShape::general: return {c2, c1, c0};
  }
  return {};
}

bool is_singular(const Field& field, const CurveSpec& curve) {
  // Discriminant of x^3 + b x^2 + c x + d:
  // 18bcd - 4b^3 d + b^2 c^2 - 4c^3 - 27d^2.
  const auto k = [&](std::int64_t v) { return field.from_integer(v); };
  const Element b = curve.c2;
  const Element c = curve.c1;
  const Element d = curve.c0;
  const auto mul = [&](std::initializer_list<Element> xs) {
    Element r = Field::one();
    for (auto x : xs) r = field.mul(r, x);
    return r;
  };
  Element disc = mul({k(18), b, c, d});
  disc = field.sub(disc, mul({k(4), b, b, b, d}));
  disc = field.add(disc, mul({b, b, c, c}));
  disc = field.sub(disc, mul({k(4), c, c, c}));
  disc = field.sub(disc, mul({k(27), d, d}));
  return disc.value == 0;
}

Element curve_rhs(const Field& field, const CurveSpec& curve, Element x) {
  Element r = field.add(x, curve.c2);
  r = field.add(field.mul(r, x), curve.c1);
  return field.add(field.mul(r, x), curve.c0);
}

std::int64_t count_points(const Field& field, const CurveSpec& curve) {
  std::int64_t count = 1;
  for (std::uint32_t v = 0; v < field.order(); ++v) {
    count += 1 + field.quadratic_character(curve_rhs(field, curve, Element{v}));
  }
  return count;
}

TraceReport trace_naive(const Field& field, const CurveSpec& curve) {
  TraceReport report;
  report.curve = curve;
  report.method = TraceMethod::naive;
  report.trace = static_cast<std::int64_t>(field.order()) + 1 - count_points(field, curve);
  report.raw = Complex(static_cast<double>(report.trace), 0.0);
  report.singular = is_singular(field, curve);
  const double t = static_cast<double>(report.trace);
  report.within_hasse_bound = t * t <= 4.0 * field.order();
  return report;
}

CurveSpec shift_substitution(const Field& field, Element a, Element b, Element r) {
  const Element three = field.from_integer(3);
  const Element r2 = field.mul(r, r);
  const Element c2 = field.mul(three, r);
  const Element c1 = field.add(field.mul(three, r2), a);
  const Element c0 = field.add(field.add(field.mul(r2, r), field.mul(a, r)), b);
  return CurveSpec::general(c2, c1, c0);
}

TraceReport trace_thm_3_1(const FieldContext& ctx, Element c, Element d) {
  const Field& field = ctx.field();
  require_congruence(field, 6);
  if (c.value == 0) throw Error(ErrorKind::ZeroC, "c must be nonzero");
  const CurveSpec curve = CurveSpec::e1(c, d);
  require_nonsingular(field, curve);

  const std::int64_t n = field.unit_order();
  const Element c3 = field.mul(c, field.mul(c, c));
  const Element argument = field.neg(
      field.div(field.mul(field.from_integer(27), d), field.mul(field.from_integer(4), c3)));
  const double chi = field.quadratic_character(field.mul(field.from_integer(-3), c));
  const Complex hyper = Hyper2F1(ctx, n / 6, 5 * n / 6, 0)(argument);

  TraceReport report;
  report.curve = curve;
  report.method = TraceMethod::thm_3_1;
  report.raw = -static_cast<double>(field.order()) * chi * hyper;
  finish(report, field);
  return report;
}

TraceReport trace_thm_3_2(const FieldContext& ctx, Element f, Element g) {
  const Field& field = ctx.field();
  require_congruence(field, 4);
  if (f.value == 0) throw Error(ErrorKind::ZeroF, "f must be nonzero");
  const CurveSpec curve = CurveSpec::e2(f, g);
  require_nonsingular(field, curve);

  const std::int64_t n = field.unit_order();
  const Element argument = field.div(field.mul(field.from_integer(4), g), field.mul(f, f));
  const double chi = field.quadratic_character(field.mul(field.from_integer(2), f)) *
                     Characters::sign_at_minus_one(n / 4);
  const Complex hyper = Hyper2F1(ctx, n / 4, 3 * n / 4, 0)(argument);

  TraceReport report;
  report.curve = curve;
  report.method = TraceMethod::thm_3_2;
  report.raw = -static_cast<double>(field.order()) * chi * hyper;
  finish(report, field);
  return report;
}

TraceReport trace_thm_1_1(const FieldContext& ctx, Element a, Element b) {
  const Field& field = ctx.field();
  const auto roots = k_roots(field, a, b);
  const std::int64_t n = field.unit_order();
  const Hyper2F1 hyper(ctx, n / 6, 5 * n / 6, 0);

  const auto raw_for = [&](Element k) {
    const Element k3 = field.mul(k, field.mul(k, k));
    const Element numerator = field.add(field.add(k3, field.mul(a, k)), b);
    const Element argument =
        field.neg(field.div(numerator, field.mul(field.from_integer(4), k3)));
    const double chi = field.quadratic_character(field.neg(k));
    return -static_cast<double>(field.order()) * chi * hyper(argument);
  };

  TraceReport report;
  report.curve = CurveSpec::short_weierstrass(a, b);
  report.method = TraceMethod::thm_1_1;
  report.auxiliary = roots.front();
  report.raw = raw_for(roots.front());
  finish(report, field);
  std::vector<std::int64_t> traces{report.trace};
  for (std::size_t i = 1; i < roots.size(); ++i) traces.push_back(rounded(raw_for(roots[i]), field));
  record_alternatives(report, traces);
  return report;
}

TraceReport trace_thm_1_2(const FieldContext& ctx, Element a, Element b) {
  const Field& field = ctx.field();
  const auto roots = h_roots(field, a, b);
  const std::int64_t n = field.unit_order();
  const Hyper2F1 hyper(ctx, n / 4, 3 * n / 4, 0);
  const double sign = Characters::sign_at_minus_one(n / 4);

  const auto raw_for = [&](Element h) {
    const Element h2 = field.mul(h, h);
    const Element numerator =
        field.add(field.mul(field.from_integer(12), h2), field.mul(field.from_integer(4), a));
    const Element argument = field.div(numerator, field.mul(field.from_integer(9), h2));
    const double chi = field.quadratic_character(field.mul(field.from_integer(6), h)) * sign;
    return -static_cast<double>(field.order()) * chi * hyper(argument);
  };

  TraceReport report;
  report.curve = CurveSpec::short_weierstrass(a, b);
  report.method = TraceMethod::thm_1_2;
  report.auxiliary = roots.front();
  report.raw = raw_for(roots.front());
  finish(report, field);
  std::vector<std::int64_t> traces{report.trace};
  for (std::size_t i = 1; i < roots.size(); ++i) traces.push_back(rounded(raw_for(roots[i]), field));
  record_alternatives(report, traces);
  return report;
}

TraceReport trace_thm_1_1_via_shift(const FieldContext& ctx, Element a, Element b) {
  const Field& field = ctx.field();
  const auto roots = k_roots(field, a, b);
  std::vector<TraceReport> reports;
  for (const Element k : roots) {
    const CurveSpec shifted = shift_substitution(field, a, b, k);
    reports.push_back(trace_thm_3_1(ctx, shifted.c2, shifted.c0));
  }
  TraceReport report = reports.front();
  report.curve = CurveSpec::short_weierstrass(a, b);
  report.method = TraceMethod::thm_1_1;
  report.auxiliary = roots.front();
  std::vector<std::int64_t> traces;
  for (const auto& r : reports) traces.push_back(r.trace);
  record_alternatives(report, traces);
  return report;
}

TraceReport trace_thm_1_2_via_shift(const FieldContext& ctx, Element a, Element b) {
  const Field& field = ctx.field();
  const auto roots = h_roots(field, a, b);
  std::vector<TraceReport> reports;
  for (const Element h : roots) {
    const CurveSpec shifted = shift_substitution(field, a, b, h);
    reports.push_back(trace_thm_3_2(ctx, shifted.c2, shifted.c1));
  }
  TraceReport report = reports.front();
  report.curve = CurveSpec::short_weierstrass(a, b);
  report.method = TraceMethod::thm_1_2;
  report.auxiliary = roots.front();
  std::vector<std::int64_t> traces;
  for (const auto& r : reports) traces.push_back(r.trace);
  record_alternatives(report, traces);
  return report;
}

}  // namespace ffhyper
