#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ffhyper/curves.hpp"

namespace ffhyper {

inline constexpr std::string_view kVersion = "0.1.0";

enum class Congruence { mod6, mod4, both };
enum class Theorem { thm_1_1, thm_1_2, thm_3_1, thm_3_2 };
/// hybrid: exhaustive up to exhaustive_max, seeded random samples above it.
enum class SamplingKind { exhaustive, random, hybrid };
enum class RecordFilter { all, failures, none };

std::string_view to_string(Congruence c) noexcept;
std::string_view to_string(Theorem t) noexcept;
std::string_view to_string(SamplingKind s) noexcept;
/// Accepts "1.1", "thm_1_1", ... Throws InvalidInput.
Theorem parse_theorem(std::string_view text);

struct VerifyConfig {
  std::uint32_t q_min = 5;
  std::uint32_t q_max = 100;
  Congruence congruence = Congruence::both;
  std::vector<Theorem> theorems{Theorem::thm_1_1, Theorem::thm_1_2, Theorem::thm_3_1,
                                Theorem::thm_3_2};
  SamplingKind sampling = SamplingKind::exhaustive;
  std::uint32_t samples = 200;
  std::optional<std::uint64_t> seed;
  std::uint32_t exhaustive_max = 49;
  double residual_tolerance = 1e-4;
  double imag_tolerance_per_q = 1e-6;
  RecordFilter records = RecordFilter::all;
  /// Emit one record per skipped curve instead of only counting them.
  bool include_skipped = false;
  /// Adds elapsed times to the records; reports are then no longer byte-reproducible.
  bool timings = false;
  std::uint64_t max_order = kDefaultMaxOrder;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Throws InvalidInput when the configuration breaks its invariants.
void validate(const VerifyConfig& config);

enum class CaseStatus { pass, fail, skip, informational };
std::string_view to_string(CaseStatus s) noexcept;

struct CaseRecord {
  std::uint32_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  Theorem theorem = Theorem::thm_3_1;
  std::vector<std::string> coefficients;
  std::optional<std::int64_t> trace_formula;
  std::optional<std::int64_t> trace_naive;
  double residual_to_integer = 0.0;
  double imag_residual = 0.0;
  bool roots_agree = true;
  bool shift_agree = true;
  bool hasse_ok = true;
  CaseStatus status = CaseStatus::pass;
  std::string reason;
  std::optional<double> elapsed_us;
};

struct RunSummary {
  std::uint64_t cases_run = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
  std::uint64_t informational = 0;
  std::uint64_t fields_visited = 0;
  std::uint64_t expected_fields = 0;
  double max_residual_to_integer = 0.0;
  double max_imag_residual_per_q = 0.0;
  std::map<std::string, std::uint64_t> skipped_by_reason;
  std::map<std::string, std::uint64_t> rejections_by_reason;
};

struct RunReport {
  VerifyConfig config;
  std::vector<CaseRecord> records;
  RunSummary summary;
};

/// Odd prime powers q in [q_min, q_max] belonging to the congruence class.
std::vector<std::uint32_t> prime_powers_in(std::uint32_t q_min, std::uint32_t q_max,
                                           Congruence congruence);

/// Sweeps every field of the class, comparing each applicable theorem with point counting.
RunReport run_verify(const VerifyConfig& config);

nlohmann::json to_json(const RunReport& report);
std::string to_csv(const RunReport& report);
std::string to_text(const RunReport& report);

}  // namespace ffhyper
