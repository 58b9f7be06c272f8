#include "ffhyper/identities.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "ffhyper/verify.hpp"

namespace ffhyper {

namespace {

class Tally {
 public:
  Tally(std::uint32_t q, std::string name) { result_.q = q; result_.identity = std::move(name); }

  void add(double residual, double threshold) {
    ++result_.checks;
    const double ratio = residual / threshold;
    if (!(ratio < 1.0)) ++result_.failures;
    result_.worst_ratio = std::max(result_.worst_ratio, ratio);
  }

  IdentityResult result() const { return result_; }

 private:
  IdentityResult result_;
};

}  // namespace

double orthogonality_threshold(std::uint32_t q) { return 1e-9 * q; }
double identity_threshold(std::uint32_t q) { return 1e-8 * q; }
double davenport_hasse_threshold(std::uint32_t q, std::int64_t m) {
  return 1e-8 * std::pow(static_cast<double>(q), static_cast<double>(m) / 2.0);
}

std::vector<IdentityResult> check_field_identities(const FieldContext& ctx) {
  const Field& field = ctx.field();
  const std::uint32_t q = field.order();
  const std::uint32_t n = field.unit_order();
  const GaussSumTable& g = ctx.gauss();
  std::vector<IdentityResult> out;

  Tally over_x(q, "orthogonality_char_sum_over_x");
  Tally over_n(q, "orthogonality_char_sum_over_n");
  Tally delta(q, "delta_identity");
  for (std::uint32_t m = 0; m < n; ++m) {
    over_x.add(check_orthogonality(ctx.chars(), OrthogonalityKind::char_sum_over_x, m),
               orthogonality_threshold(q));
  }
  for (std::uint32_t v = 0; v < q; ++v) {
    over_n.add(check_orthogonality(ctx.chars(), OrthogonalityKind::char_sum_over_n, v),
               orthogonality_threshold(q));
    delta.add(check_orthogonality(ctx.chars(), OrthogonalityKind::delta_identity, v),
              orthogonality_threshold(q));
  }
  out.push_back(over_x.result());
  out.push_back(over_n.result());
  out.push_back(delta.result());

  Tally theta(q, "theta_expansion");
  for (std::uint32_t v = 1; v < q; ++v) {
    theta.add(check_identity(ctx, IdentityKind::theta_expansion, v), identity_threshold(q));
  }
  out.push_back(theta.result());

  Tally inverse(q, "gauss_inverse");
  for (std::uint32_t i = 1; i < n; ++i) {
    inverse.add(check_identity(ctx, IdentityKind::gauss_inverse, i), identity_threshold(q));
  }
  out.push_back(inverse.result());

  for (std::int64_t m : {2, 3}) {
    if (n % m != 0) continue;
    Tally dh(q, "davenport_hasse_m" + std::to_string(m));
    for (std::uint32_t psi = 0; psi < n; ++psi) {
      dh.add(check_identity(ctx, IdentityKind::davenport_hasse, m, psi), davenport_hasse_threshold(q, m));
    }
    out.push_back(dh.result());
  }

  Tally binomial(q, "gauss_binomial");
  for (std::uint32_t m = 0; m < n; ++m) {
    for (std::uint32_t k = 0; k < n; ++k) {
      if (m == k) continue;
      binomial.add(check_identity(ctx, IdentityKind::gauss_binomial, m, k), identity_threshold(q));
    }
  }
  out.push_back(binomial.result());

  Tally norms(q, "gauss_table_norms");
  norms.add(std::abs(g[0] + 1.0), 1e-9);
  for (std::uint32_t m = 1; m < n; ++m) {
    norms.add(std::abs(std::norm(g[m]) - q), 1e-7 * q);
    const Complex mirrored = Characters::sign_at_minus_one(m) * std::conj(g[m]);
    norms.add(std::abs(g[-static_cast<CharIndex>(m)] - mirrored), 1e-8 * std::sqrt(q));
  }
  out.push_back(norms.result());
  return out;
}

IdentitySuiteReport run_identity_suite(std::uint32_t q_min, std::uint32_t q_max, unsigned threads) {
  // Every odd prime power, not only the theorem classes.
  std::vector<std::uint32_t> all;
  for (std::uint32_t q = std::max<std::uint32_t>(q_min, 5); q <= q_max; ++q) {
    const auto pe = prime_power(q);
    if (pe && pe->first != 2) all.push_back(q);
  }

  std::vector<std::vector<IdentityResult>> per_field(all.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < all.size(); i = next++) {
      const auto [p, e] = *prime_power(all[i]);
      FieldContext ctx(build_field(p, e));
      per_field[i] = check_field_identities(ctx);
    }
  };
  unsigned count = threads ? threads : std::thread::hardware_concurrency();
  count = std::max(1u, std::min<unsigned>(count, static_cast<unsigned>(all.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
  }

  IdentitySuiteReport report;
  report.fields = all.size();
  for (auto& results : per_field) {
    for (auto& r : results) {
      report.checks += r.checks;
      report.failures += r.failures;
      report.results.push_back(std::move(r));
    }
  }
  return report;
}

nlohmann::json to_json(const IdentitySuiteReport& report) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : report.results) {
    results.push_back({{"q", r.q},
                       {"identity", r.identity},
                       {"checks", r.checks},
                       {"failures", r.failures},
                       {"worst_ratio", r.worst_ratio}});
  }
  return {{"version", std::string(kVersion)},
          {"fields", report.fields},
          {"checks", report.checks},
          {"failures", report.failures},
          {"results", results}};
}

}  // namespace ffhyper
