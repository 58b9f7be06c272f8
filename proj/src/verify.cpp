#include "ffhyper/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace ffhyper {

namespace {

constexpr std::uint32_t kMaxAttemptsPerSample = 200;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint32_t theorem_modulus(Theorem t) {
  return (t == Theorem::thm_1_1 || t == Theorem::thm_3_1) ? 6 : 4;
}

bool in_class(std::uint32_t q, Congruence c) {
  switch (c) {
    case Congruence::mod6: return q % 6 == 1;
    case Congruence::mod4: return q % 4 == 1;
    case Congruence::both: return q % 6 == 1 || q % 4 == 1;
  }
  return false;
}

bool theorem_selected(Theorem t, Congruence c) {
  if (c == Congruence::both) return true;
  return (theorem_modulus(t) == 6) == (c == Congruence::mod6);
}

CurveSpec naive_curve(Theorem t, Element u, Element v) {
  switch (t) {
    case Theorem::thm_3_1: return CurveSpec::e1(u, v);
    case Theorem::thm_3_2: return CurveSpec::e2(u, v);
    default: return CurveSpec::short_weierstrass(u, v);
  }
}

struct Keyed {
  std::uint32_t u;
  std::uint32_t v;
  CaseRecord record;
};

struct FieldOutcome {
  std::vector<Keyed> records;
  RunSummary summary;
};

class FieldRunner {
 public:
  FieldRunner(const VerifyConfig& config, std::shared_ptr<const Field> field)
      : config_(config), ctx_(std::move(field)) {}

  FieldOutcome run(const std::vector<Theorem>& theorems) {
    const Field& field = ctx_.field();
    for (std::size_t ti = 0; ti < theorems.size(); ++ti) {
      const Theorem thm = theorems[ti];
      if (field.unit_order() % theorem_modulus(thm) != 0) continue;
      if (thm == Theorem::thm_1_2 && field.order() == 9) {
        CaseRecord r = blank(thm);
        r.status = CaseStatus::informational;
        r.reason = std::string(to_string(ErrorKind::ExcludedQ));
        add({0, 0, std::move(r)});
        continue;
      }
      if (thm == Theorem::thm_1_2 && field.characteristic() == 3) {
        CaseRecord r = blank(thm);
        r.status = CaseStatus::skip;
        r.reason = std::string(to_string(ErrorKind::CharacteristicThree));
        add({0, 0, std::move(r)}, /*force=*/true);
        continue;
      }
      const bool exhaustive =
          config_.sampling == SamplingKind::exhaustive ||
          (config_.sampling == SamplingKind::hybrid && field.order() <= config_.exhaustive_max);
      if (exhaustive) {
        run_exhaustive(thm);
      } else {
        run_random(thm, ti);
      }
    }
    std::stable_sort(out_.records.begin(), out_.records.end(), [](const Keyed& a, const Keyed& b) {
      if (a.record.theorem != b.record.theorem) return a.record.theorem < b.record.theorem;
      return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    return std::move(out_);
  }

 private:
  CaseRecord blank(Theorem thm) const {
    const Field& field = ctx_.field();
    CaseRecord r;
    r.q = field.order();
    r.p = field.characteristic();
    r.e = field.degree();
    r.theorem = thm;
    return r;
  }

  void run_exhaustive(Theorem thm) {
    const std::uint32_t q = ctx_.field().order();
    for (std::uint32_t u = 0; u < q; ++u) {
      for (std::uint32_t v = 0; v < q; ++v) {
        auto outcome = evaluate(thm, Element{u}, Element{v});
        if (outcome.record.status == CaseStatus::skip) {
          ++out_.summary.skipped;
          ++out_.summary.skipped_by_reason[outcome.record.reason];
          if (!config_.include_skipped) continue;
        }
        add(std::move(outcome));
      }
    }
  }

  void run_random(Theorem thm, std::size_t theorem_slot) {
    const Field& field = ctx_.field();
    const std::uint64_t seed = splitmix64(*config_.seed ^ (std::uint64_t{field.order()} << 16) ^
                                          (static_cast<std::uint64_t>(thm) << 4) ^ theorem_slot);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, field.order() - 1);
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    std::uint64_t accepted = 0;
    const std::uint64_t max_attempts = std::uint64_t{config_.samples} * kMaxAttemptsPerSample;
    const std::uint64_t pairs = std::uint64_t{field.order()} * field.order();
    for (std::uint64_t attempt = 0; attempt < max_attempts && accepted < config_.samples &&
                                    seen.size() < pairs;
         ++attempt) {
      const std::uint32_t u = pick(rng);
      const std::uint32_t v = pick(rng);
      if (!seen.insert({u, v}).second) continue;
      auto outcome = evaluate(thm, Element{u}, Element{v});
      if (outcome.record.status == CaseStatus::skip) {
        ++out_.summary.rejections_by_reason[outcome.record.reason];
        continue;
      }
      ++accepted;
      add(std::move(outcome));
    }
  }

  Keyed evaluate(Theorem thm, Element u, Element v) {
    const Field& field = ctx_.field();
    CaseRecord r = blank(thm);
    r.coefficients = {field.format(u), field.format(v)};
    const auto start = std::chrono::steady_clock::now();
    try {
      TraceReport formula;
      switch (thm) {
        case Theorem::thm_3_1: formula = trace_thm_3_1(ctx_, u, v); break;
        case Theorem::thm_3_2: formula = trace_thm_3_2(ctx_, u, v); break;
        case Theorem::thm_1_1: formula = trace_thm_1_1(ctx_, u, v); break;
        case Theorem::thm_1_2: formula = trace_thm_1_2(ctx_, u, v); break;
      }
      if (thm == Theorem::thm_1_1 || thm == Theorem::thm_1_2) {
        const TraceReport shifted = thm == Theorem::thm_1_1 ? trace_thm_1_1_via_shift(ctx_, u, v)
                                                            : trace_thm_1_2_via_shift(ctx_, u, v);
        r.shift_agree = shifted.trace == formula.trace && shifted.alternatives_agree;
      }
      const TraceReport naive = trace_naive(field, naive_curve(thm, u, v));
      r.trace_formula = formula.trace;
      r.trace_naive = naive.trace;
      r.residual_to_integer = formula.residual_to_integer;
      r.imag_residual = formula.imag_residual;
      r.roots_agree = formula.alternatives_agree;
      r.hasse_ok = formula.within_hasse_bound && naive.within_hasse_bound;

      if (formula.trace != naive.trace) {
        r.status = CaseStatus::fail;
        r.reason = "TraceMismatch";
      } else if (r.residual_to_integer >= config_.residual_tolerance ||
                 r.imag_residual >= config_.imag_tolerance_per_q * field.order()) {
        r.status = CaseStatus::fail;
        r.reason = "ResidualTooLarge";
      } else if (!r.roots_agree) {
        r.status = CaseStatus::fail;
        r.reason = "RootDisagreement";
      } else if (!r.shift_agree) {
        r.status = CaseStatus::fail;
        r.reason = "ShiftDisagreement";
      } else if (!r.hasse_ok) {
        r.status = CaseStatus::fail;
        r.reason = "HasseViolation";
      }
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::PrecisionFailure) {
        r.status = CaseStatus::fail;
        r.trace_naive = trace_naive(field, naive_curve(thm, u, v)).trace;
      } else {
        r.status = CaseStatus::skip;
      }
      r.reason = std::string(to_string(err.kind()));
    }
    if (config_.timings) {
      r.elapsed_us = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start)
                         .count();
    }
    return {u.value, v.value, std::move(r)};
  }

  void add(Keyed keyed, bool force = false) {
    RunSummary& s = out_.summary;
    const CaseRecord& r = keyed.record;
    switch (r.status) {
      case CaseStatus::pass: ++s.passed; ++s.cases_run; break;
      case CaseStatus::fail: ++s.failed; ++s.cases_run; break;
      case CaseStatus::informational: ++s.informational; break;
      case CaseStatus::skip:
        if (force) {
          ++s.skipped;
          ++s.skipped_by_reason[r.reason];
        }
        break;
    }
    if (r.status == CaseStatus::pass || r.status == CaseStatus::fail) {
      s.max_residual_to_integer = std::max(s.max_residual_to_integer, r.residual_to_integer);
      s.max_imag_residual_per_q = std::max(s.max_imag_residual_per_q, r.imag_residual / r.q);
    }
    const bool keep = config_.records == RecordFilter::all ||
                      (config_.records == RecordFilter::failures && r.status != CaseStatus::pass);
    if (keep || force) out_.records.push_back(std::move(keyed));
  }

  const VerifyConfig& config_;
  FieldContext ctx_;
  FieldOutcome out_;
};

void merge(RunSummary& into, const RunSummary& from) {
  into.cases_run += from.cases_run;
  into.passed += from.passed;
  into.failed += from.failed;
  into.skipped += from.skipped;
  into.informational += from.informational;
  into.max_residual_to_integer = std::max(into.max_residual_to_integer, from.max_residual_to_integer);
  into.max_imag_residual_per_q = std::max(into.max_imag_residual_per_q, from.max_imag_residual_per_q);
  for (const auto& [k, v] : from.skipped_by_reason) into.skipped_by_reason[k] += v;
  for (const auto& [k, v] : from.rejections_by_reason) into.rejections_by_reason[k] += v;
}

// Counts prime powers by enumerating p^e directly, independent of prime_powers_in.
std::uint64_t count_prime_powers(std::uint32_t q_min, std::uint32_t q_max, Congruence c) {
  std::uint64_t count = 0;
  for (std::uint64_t p = 3; p <= q_max; p += 2) {
    if (!is_prime(p)) continue;
    for (std::uint64_t q = p; q <= q_max; q *= p) {
      if (q >= q_min && in_class(static_cast<std::uint32_t>(q), c)) ++count;
    }
  }
  return count;
}

}  // namespace

std::string_view to_string(Congruence c) noexcept {
  switch (c) {
    case Congruence::mod6: return "mod6";
    case Congruence::mod4: return "mod4";
    case Congruence::both: return "both";
  }
  return "unknown";
}

std::string_view to_string(Theorem t) noexcept {
  switch (t) {
    case Theorem::thm_1_1: return "1.1";
    case Theorem::thm_1_2: return "1.2";
    case Theorem::thm_3_1: return "3.1";
    case Theorem::thm_3_2: return "3.2";
  }
  return "unknown";
}

std::string_view to_string(SamplingKind s) noexcept {
  switch (s) {
    case SamplingKind::exhaustive: return "exhaustive";
    case SamplingKind::random: return "random";
    case SamplingKind::hybrid: return "hybrid";
  }
  return "unknown";
}

std::string_view to_string(CaseStatus s) noexcept {
  switch (s) {
    case CaseStatus::pass: return "pass";
    case CaseStatus::fail: return "fail";
    case CaseStatus::skip: return "skip";
    case CaseStatus::informational: return "informational";
  }
  return "unknown";
}

Theorem parse_theorem(std::string_view text) {
  if (text == "1.1" || text == "thm_1_1" || text == "thm1") return Theorem::thm_1_1;
  if (text == "1.2" || text == "thm_1_2" || text == "thm2") return Theorem::thm_1_2;
  if (text == "3.1" || text == "thm_3_1") return Theorem::thm_3_1;
  if (text == "3.2" || text == "thm_3_2") return Theorem::thm_3_2;
  throw Error(ErrorKind::InvalidInput, "unknown theorem '" + std::string(text) + "'");
}

void validate(const VerifyConfig& config) {
  if (config.q_min < 5) throw Error(ErrorKind::InvalidInput, "q_min must be at least 5");
  if (config.q_max < config.q_min) throw Error(ErrorKind::InvalidInput, "q_max must be >= q_min");
  if (config.q_max > config.max_order) {
    throw Error(ErrorKind::InvalidInput,
                "q_max exceeds the field size bound " + std::to_string(config.max_order));
  }
  const bool needs_seed = config.sampling == SamplingKind::random ||
                          (config.sampling == SamplingKind::hybrid && config.q_max > config.exhaustive_max);
  if (needs_seed && !config.seed) {
    throw Error(ErrorKind::InvalidInput, "random sampling requires an explicit seed");
  }
  if (config.theorems.empty()) throw Error(ErrorKind::InvalidInput, "no theorems selected");
}

std::vector<std::uint32_t> prime_powers_in(std::uint32_t q_min, std::uint32_t q_max,
                                           Congruence congruence) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t q = std::max<std::uint32_t>(q_min, 3); q <= q_max; ++q) {
    const auto pe = prime_power(q);
    if (pe && pe->first != 2 && in_class(static_cast<std::uint32_t>(q), congruence)) {
      out.push_back(static_cast<std::uint32_t>(q));
    }
  }
  return out;
}

RunReport run_verify(const VerifyConfig& config) {
  validate(config);
  std::vector<Theorem> theorems;
  for (auto t : {Theorem::thm_1_1, Theorem::thm_1_2, Theorem::thm_3_1, Theorem::thm_3_2}) {
    const bool wanted = std::find(config.theorems.begin(), config.theorems.end(), t) != config.theorems.end();
    if (wanted && theorem_selected(t, config.congruence)) theorems.push_back(t);
  }

  const auto fields = prime_powers_in(config.q_min, config.q_max, config.congruence);
  std::vector<FieldOutcome> outcomes(fields.size());
  std::vector<std::exception_ptr> errors(fields.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < fields.size(); i = next++) {
      try {
        const auto [p, e] = *prime_power(fields[i]);
        FieldOptions options;
        options.max_order = config.max_order;
        FieldRunner runner(config, build_field(p, e, options));
        outcomes[i] = runner.run(theorems);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(fields.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  RunReport report;
  report.config = config;
  for (auto& outcome : outcomes) {
    merge(report.summary, outcome.summary);
    for (auto& keyed : outcome.records) report.records.push_back(std::move(keyed.record));
  }
  report.summary.fields_visited = fields.size();
  report.summary.expected_fields = count_prime_powers(config.q_min, config.q_max, config.congruence);
  return report;
}

nlohmann::json to_json(const RunReport& report) {
  using nlohmann::json;
  const VerifyConfig& c = report.config;
  json theorems = json::array();
  for (auto t : c.theorems) theorems.push_back(std::string(to_string(t)));
  json config = {
      {"q_min", c.q_min},
      {"q_max", c.q_max},
      {"congruence", std::string(to_string(c.congruence))},
      {"theorems", theorems},
      {"sampling", std::string(to_string(c.sampling))},
      {"samples", c.samples},
      {"seed", c.seed ? json(*c.seed) : json(nullptr)},
      {"exhaustive_max", c.exhaustive_max},
      {"residual_tolerance", c.residual_tolerance},
      {"imag_tolerance_per_q", c.imag_tolerance_per_q},
  };

  json records = json::array();
  for (const auto& r : report.records) {
    json rec = {
        {"q", r.q},
        {"p", r.p},
        {"e", r.e},
        {"theorem", std::string(to_string(r.theorem))},
        {"coefficients", r.coefficients},
        {"trace_formula", r.trace_formula ? json(*r.trace_formula) : json(nullptr)},
        {"trace_naive", r.trace_naive ? json(*r.trace_naive) : json(nullptr)},
        {"residual_to_integer", r.residual_to_integer},
        {"imag_residual", r.imag_residual},
        {"roots_agree", r.roots_agree},
        {"shift_agree", r.shift_agree},
        {"hasse_ok", r.hasse_ok},
        {"status", std::string(to_string(r.status))},
        {"reason", r.reason.empty() ? json(nullptr) : json(r.reason)},
    };
    if (r.elapsed_us) rec["elapsed_us"] = *r.elapsed_us;
    records.push_back(std::move(rec));
  }

  const RunSummary& s = report.summary;
  json summary = {
      {"cases_run", s.cases_run},
      {"passed", s.passed},
      {"failed", s.failed},
      {"skipped", s.skipped},
      {"informational", s.informational},
      {"fields_visited", s.fields_visited},
      {"expected_fields", s.expected_fields},
      {"coverage_complete", s.fields_visited == s.expected_fields},
      {"max_residual_to_integer", s.max_residual_to_integer},
      {"max_imag_residual_per_q", s.max_imag_residual_per_q},
      {"skipped_by_reason", s.skipped_by_reason},
      {"rejections_by_reason", s.rejections_by_reason},
  };
  return {{"version", std::string(kVersion)}, {"config", config}, {"records", records}, {"summary", summary}};
}

std::string to_csv(const RunReport& report) {
  std::ostringstream out;
  out.precision(17);
  const bool timed = report.config.timings;
  out << "q,p,e,theorem,coefficients,trace_formula,trace_naive,residual_to_integer,"
         "imag_residual,roots_agree,shift_agree,hasse_ok,status,reason";
  if (timed) out << ",elapsed_us";
  out << '\n';
  for (const auto& r : report.records) {
    std::string coeffs;
    for (std::size_t i = 0; i < r.coefficients.size(); ++i) {
      if (i > 0) coeffs += ' ';
      coeffs += r.coefficients[i];
    }
    out << r.q << ',' << r.p << ',' << r.e << ',' << to_string(r.theorem) << ",\"" << coeffs
        << "\",";
    if (r.trace_formula) out << *r.trace_formula;
    out << ',';
    if (r.trace_naive) out << *r.trace_naive;
    out << ',' << r.residual_to_integer << ',' << r.imag_residual << ',' << r.roots_agree << ','
        << r.shift_agree << ',' << r.hasse_ok << ',' << to_string(r.status) << ',' << r.reason;
    if (timed) out << ',' << (r.elapsed_us ? *r.elapsed_us : 0.0);
    out << '\n';
  }
  return out.str();
}

std::string to_text(const RunReport& report) {
  std::ostringstream out;
  const RunSummary& s = report.summary;
  out << "ffhyper verify " << kVersion << "\n";
  out << "fields visited: " << s.fields_visited << " (expected " << s.expected_fields << ")\n";
  out << "cases run: " << s.cases_run << "  passed: " << s.passed << "  failed: " << s.failed
      << "  skipped: " << s.skipped << "  informational: " << s.informational << "\n";
  out << "max residual to integer: " << s.max_residual_to_integer
      << "  max imaginary residual / q: " << s.max_imag_residual_per_q << "\n";
  for (const auto& [reason, n] : s.skipped_by_reason) out << "  skipped " << reason << ": " << n << "\n";
  for (const auto& [reason, n] : s.rejections_by_reason) out << "  rejected " << reason << ": " << n << "\n";
  for (const auto& r : report.records) {
    if (r.status == CaseStatus::pass) continue;
    out << to_string(r.status) << " q=" << r.q << " thm " << to_string(r.theorem);
    for (const auto& c : r.coefficients) out << " [" << c << "]";
    if (r.trace_formula) out << " formula=" << *r.trace_formula;
    if (r.trace_naive) out << " naive=" << *r.trace_naive;
    out << " reason=" << r.reason << "\n";
  }
  return out.str();
}

}  // namespace ffhyper
