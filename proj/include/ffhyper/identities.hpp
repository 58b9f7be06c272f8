#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "ffhyper/char_sums.hpp"

namespace ffhyper {

/// One identity family checked over all valid parameters of one field.
struct IdentityResult {
  std::uint32_t q = 0;
  std::string identity;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  /// Largest residual divided by its threshold; below 1 means every check passed.
  double worst_ratio = 0.0;
};

struct IdentitySuiteReport {
  std::vector<IdentityResult> results;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::uint64_t fields = 0;
};

/// Residual thresholds. Each scales with the size of the compared quantities.
double orthogonality_threshold(std::uint32_t q);
double identity_threshold(std::uint32_t q);
double davenport_hasse_threshold(std::uint32_t q, std::int64_t m);

/// Orthogonality (both sums and the additive delta), theta expansion, Gauss inverse,
/// Davenport-Hasse for m in {2, 3}, the Gauss-binomial relation, and the Gauss-table
/// norms, for a single field.
std::vector<IdentityResult> check_field_identities(const FieldContext& ctx);

/// Runs check_field_identities for every odd prime power q in [q_min, q_max].
IdentitySuiteReport run_identity_suite(std::uint32_t q_min, std::uint32_t q_max, unsigned threads = 0);

nlohmann::json to_json(const IdentitySuiteReport& report);

}  // namespace ffhyper
