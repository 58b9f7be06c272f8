#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace ffhyper {

struct GaussTiming {
  std::uint32_t q = 0;
  double direct_ms = 0.0;
  double dft_ms = 0.0;
  double speedup = 0.0;
};

struct TraceTiming {
  std::uint32_t q = 0;
  std::string theorem;
  double table_ms = 0.0;    ///< one-off Gauss table construction
  double formula_ms = 0.0;  ///< formula trace with the table cached
  double naive_ms = 0.0;    ///< point counting
};

struct BenchReport {
  std::uint32_t reps = 0;
  std::vector<GaussTiming> crossover;
  TraceTiming trace;
};

/// Times direct vs DFT Gauss tables at prime powers near 2^k up to q_target, and the
/// naive vs formula trace at the largest prime power <= q_target in a theorem class.
/// Each timing is the minimum over `reps` runs.
BenchReport run_bench(std::uint32_t q_target, std::uint32_t reps);

nlohmann::json to_json(const BenchReport& report);
std::string to_text(const BenchReport& report);

}  // namespace ffhyper
