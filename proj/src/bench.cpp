#include "ffhyper/bench.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <sstream>

#include "ffhyper/curves.hpp"
#include "ffhyper/verify.hpp"

namespace ffhyper {

namespace {

template <typename F>
double min_time_ms(std::uint32_t reps, F&& body) {
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t r = 0; r < std::max(1u, reps); ++r) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const auto stop = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return best;
}

std::uint32_t largest_odd_prime_power_at_most(std::uint32_t bound, std::uint32_t modulus = 1) {
  for (std::uint32_t q = bound; q >= 5; --q) {
    const auto pe = prime_power(q);
    if (pe && pe->first != 2 && (q - 1) % modulus == 0) return q;
  }
  throw Error(ErrorKind::InvalidInput, "no suitable prime power below " + std::to_string(bound));
}

std::shared_ptr<const Field> field_of_order(std::uint32_t q) {
  const auto [p, e] = *prime_power(q);
  return build_field(p, e);
}

}  // namespace

BenchReport run_bench(std::uint32_t q_target, std::uint32_t reps) {
  if (q_target < 5 || q_target > kDefaultMaxOrder) {
    throw Error(ErrorKind::InvalidInput, "bench q must lie in [5, " + std::to_string(kDefaultMaxOrder) + "]");
  }
  BenchReport report;
  report.reps = reps;

  std::vector<std::uint32_t> sizes;
  for (std::uint32_t bound = 16; bound < q_target; bound *= 2) {
    sizes.push_back(largest_odd_prime_power_at_most(bound));
  }
  sizes.push_back(largest_odd_prime_power_at_most(q_target));
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  for (const std::uint32_t q : sizes) {
    const Characters chars(field_of_order(q));
    GaussTiming t;
    t.q = q;
    t.direct_ms = min_time_ms(reps, [&] { (void)gauss_sum_table(chars, GaussMethod::direct); });
    t.dft_ms = min_time_ms(reps, [&] { (void)gauss_sum_table(chars, GaussMethod::dft, 0); });
    t.speedup = t.direct_ms / t.dft_ms;
    report.crossover.push_back(t);
  }

  // Trace timing on a field where one of the E1/E2 formulas applies.
  const std::uint32_t q6 = largest_odd_prime_power_at_most(q_target, 6);
  const std::uint32_t q4 = largest_odd_prime_power_at_most(q_target, 4);
  const bool use_mod6 = q6 >= q4;
  const std::uint32_t q = use_mod6 ? q6 : q4;
  FieldContext ctx(field_of_order(q));
  const Field& field = ctx.field();
  TraceTiming& tt = report.trace;
  tt.q = q;
  tt.theorem = use_mod6 ? "3.1" : "3.2";
  tt.table_ms = min_time_ms(1, [&] { (void)ctx.gauss(); });

  Element u = Field::one();
  Element v = Field::one();
  const auto curve = [&] { return use_mod6 ? CurveSpec::e1(u, v) : CurveSpec::e2(u, v); };
  while (is_singular(field, curve())) v = field.add(v, Field::one());
  tt.formula_ms = min_time_ms(reps, [&] {
    (void)(use_mod6 ? trace_thm_3_1(ctx, u, v) : trace_thm_3_2(ctx, u, v));
  });
  tt.naive_ms = min_time_ms(reps, [&] { (void)trace_naive(field, curve()); });
  return report;
}

nlohmann::json to_json(const BenchReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& t : report.crossover) {
    rows.push_back({{"q", t.q}, {"direct_ms", t.direct_ms}, {"dft_ms", t.dft_ms}, {"speedup", t.speedup}});
  }
  const TraceTiming& tt = report.trace;
  return {{"version", std::string(kVersion)},
          {"reps", report.reps},
          {"gauss_tables", rows},
          {"trace",
           {{"q", tt.q},
            {"theorem", tt.theorem},
            {"table_ms", tt.table_ms},
            {"formula_ms", tt.formula_ms},
            {"naive_ms", tt.naive_ms}}}};
}

std::string to_text(const BenchReport& report) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << "Gauss table construction (min of " << report.reps << " runs)\n";
  out << "       q    direct_ms       dft_ms   speedup\n";
  for (const auto& t : report.crossover) {
    out.width(8);
    out << t.q;
    out << "  ";
    out.width(11);
    out << t.direct_ms << "  ";
    out.width(11);
    out << t.dft_ms << "  ";
    out.width(8);
    out << t.speedup << "\n";
  }
  const TraceTiming& tt = report.trace;
  out << "Trace at q = " << tt.q << " (theorem " << tt.theorem << ")\n";
  out << "  gauss table: " << tt.table_ms << " ms\n";
  out << "  formula:     " << tt.formula_ms << " ms\n";
  out << "  naive:       " << tt.naive_ms << " ms\n";
  return out.str();
}

}  // namespace ffhyper
