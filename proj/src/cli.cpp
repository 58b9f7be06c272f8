#include "ffhyper/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ffhyper/bench.hpp"
#include "ffhyper/curves.hpp"
#include "ffhyper/identities.hpp"
#include "ffhyper/verify.hpp"

namespace ffhyper {

namespace {

using nlohmann::json;

struct TraceArgs {
  std::uint32_t p = 0;
  std::uint32_t e = 1;
  std::string a;
  std::string b;
  std::string method = "all";
  std::string format = "text";
};

struct VerifyArgs {
  VerifyConfig config;
  std::string congruence = "both";
  std::vector<std::string> theorems{"1.1", "1.2", "3.1", "3.2"};
  std::string sampling = "exhaustive";
  std::uint64_t seed = 0;
  std::string records = "all";
  std::string format = "json";
  std::string output;
};

struct IdentityArgs {
  std::uint32_t q_min = 5;
  std::uint32_t q_max = 200;
  std::string format = "text";
  std::string output;
};

struct BenchArgs {
  std::uint32_t q = 10007;
  std::uint32_t reps = 3;
  std::string format = "text";
  std::string output;
};

// Writes to --output, else to $FFHYPER_OUTPUT_DIR/<default_name>, else to `out`.
void emit(const std::string& content, const std::string& output, const std::string& default_name,
          std::ostream& out) {
  std::filesystem::path path;
  if (!output.empty()) {
    path = output;
  } else if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
    path = std::filesystem::path(dir) / default_name;
  }
  if (path.empty()) {
    out << content;
    return;
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::InvalidInput, "cannot write " + path.string());
  file << content;
  out << "report written to " << path.string() << "\n";
}

json report_json(const Field& field, const TraceReport& r) {
  json coeffs = json::array();
  for (auto c : r.curve.coefficients()) coeffs.push_back(field.format(c));
  return {
      {"method", std::string(to_string(r.method))},
      {"status", "computed"},
      {"shape", std::string(to_string(r.curve.shape))},
      {"coefficients", coeffs},
      {"raw", {r.raw.real(), r.raw.imag()}},
      {"trace", r.trace},
      {"residual_to_integer", r.residual_to_integer},
      {"imag_residual", r.imag_residual},
      {"auxiliary", r.auxiliary ? json(field.format(*r.auxiliary)) : json(nullptr)},
      {"alternative_traces", r.alternative_traces},
      {"alternatives_agree", r.alternatives_agree},
      {"singular", r.singular},
      {"within_hasse_bound", r.within_hasse_bound},
  };
}

int run_trace(const TraceArgs& args, std::ostream& out, std::ostream& err) {
  const auto field = build_field(args.p, args.e);
  const Element a = field->parse(args.a);
  const Element b = field->parse(args.b);
  FieldContext ctx(field);

  std::vector<TraceMethod> methods;
  if (args.method == "naive") methods = {TraceMethod::naive};
  else if (args.method == "thm1") methods = {TraceMethod::thm_1_1};
  else if (args.method == "thm2") methods = {TraceMethod::thm_1_2};
  else methods = {TraceMethod::naive, TraceMethod::thm_1_1, TraceMethod::thm_1_2};
  const bool single = methods.size() == 1;

  const TraceReport naive = trace_naive(*field, CurveSpec::short_weierstrass(a, b));
  json reports = json::array();
  bool agreement = true;
  int code = kExitOk;
  for (const TraceMethod method : methods) {
    if (method == TraceMethod::naive) {
      reports.push_back(report_json(*field, naive));
      continue;
    }
    try {
      const TraceReport r = method == TraceMethod::thm_1_1 ? trace_thm_1_1(ctx, a, b) : trace_thm_1_2(ctx, a, b);
      const bool ok = r.trace == naive.trace && r.alternatives_agree;
      agreement &= ok;
      reports.push_back(report_json(*field, r));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::PrecisionFailure) {
        agreement = false;
        reports.push_back({{"method", std::string(to_string(method))}, {"status", "failed"},
                           {"reason", std::string(to_string(e.kind()))}});
        continue;
      }
      reports.push_back({{"method", std::string(to_string(method))}, {"status", "skipped"},
                         {"reason", std::string(to_string(e.kind()))}});
      if (single) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        code = kExitInvalid;
      }
    }
  }
  if (code == kExitOk && !agreement) code = kExitMismatch;

  json doc = {
      {"field", {{"p", field->characteristic()}, {"e", field->degree()}, {"q", field->order()},
                 {"generator", field->format(field->generator())}}},
      {"reports", reports},
      {"naive_trace", naive.trace},
      {"agreement", agreement},
  };
  if (args.format == "json") {
    out << doc.dump(2) << "\n";
    return code;
  }
  out << "field q = " << field->order() << " (p = " << field->characteristic() << ", e = "
      << field->degree() << "), generator " << field->format(field->generator()) << "\n";
  out << "curve y^2 = x^3 + (" << args.a << ") x + (" << args.b << ")"
      << (naive.singular ? "  [singular]" : "") << "\n";
  for (const auto& r : reports) {
    out << "  " << r["method"].get<std::string>() << ": ";
    if (r["status"] == "computed") {
      out << "a_q = " << r["trace"].get<std::int64_t>();
      if (r["method"] != "naive") {
        out << "  raw = " << r["raw"][0].get<double>() << " + " << r["raw"][1].get<double>() << "i"
            << "  root = " << r["auxiliary"].get<std::string>()
            << "  roots agree = " << (r["alternatives_agree"].get<bool>() ? "yes" : "no");
      }
    } else {
      out << r["status"].get<std::string>() << " (" << r["reason"].get<std::string>() << ")";
    }
    out << "\n";
  }
  out << "agreement: " << (agreement ? "true" : "false") << "\n";
  return code;
}

int run_verify_cmd(VerifyArgs args, std::ostream& out) {
  VerifyConfig& c = args.config;
  if (args.congruence == "mod6") c.congruence = Congruence::mod6;
  else if (args.congruence == "mod4") c.congruence = Congruence::mod4;
  else c.congruence = Congruence::both;
  c.theorems.clear();
  for (const auto& t : args.theorems) c.theorems.push_back(parse_theorem(t));
  if (args.sampling == "random") c.sampling = SamplingKind::random;
  else if (args.sampling == "hybrid") c.sampling = SamplingKind::hybrid;
  else c.sampling = SamplingKind::exhaustive;
  if (args.records == "failures") c.records = RecordFilter::failures;
  else if (args.records == "none") c.records = RecordFilter::none;
  else c.records = RecordFilter::all;

  const RunReport report = run_verify(c);
  std::string content;
  if (args.format == "csv") content = to_csv(report);
  else if (args.format == "text") content = to_text(report);
  else content = to_json(report).dump(2) + "\n";
  emit(content, args.output, "verify_report." + args.format, out);
  return report.summary.failed == 0 ? kExitOk : kExitMismatch;
}

int run_identities_cmd(const IdentityArgs& args, std::ostream& out) {
  if (args.q_min < 5 || args.q_max < args.q_min || args.q_max > kDefaultMaxOrder) {
    throw Error(ErrorKind::InvalidInput, "identities needs 5 <= q-min <= q-max <= size bound");
  }
  const IdentitySuiteReport report = run_identity_suite(args.q_min, args.q_max);
  std::string content;
  if (args.format == "json") {
    content = to_json(report).dump(2) + "\n";
  } else {
    std::ostringstream text;
    text << "identity suite over " << report.fields << " fields: " << report.checks << " checks, "
         << report.failures << " failures\n";
    for (const auto& r : report.results) {
      if (r.failures > 0) {
        text << "  FAIL q=" << r.q << " " << r.identity << ": " << r.failures << "/" << r.checks
             << " (worst ratio " << r.worst_ratio << ")\n";
      }
    }
    content = text.str();
  }
  emit(content, args.output, "identities_report." + args.format, out);
  return report.failures == 0 ? kExitOk : kExitMismatch;
}

int run_bench_cmd(const BenchArgs& args, std::ostream& out) {
  const BenchReport report = run_bench(args.q, args.reps);
  const std::string content =
      args.format == "json" ? to_json(report).dump(2) + "\n" : to_text(report);
  emit(content, args.output, "bench_report." + args.format, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-field hypergeometric traces of Frobenius", "ffhyper"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  TraceArgs trace_args;
  auto* trace = app.add_subcommand("trace", "Trace of Frobenius of y^2 = x^3 + ax + b");
  trace->add_option("--p", trace_args.p, "Odd prime characteristic")->required();
  trace->add_option("--e", trace_args.e, "Extension degree")->capture_default_str();
  trace->add_option("--a", trace_args.a, "Coefficient a (decimal, or digits d0,d1,... for e > 1)")->required();
  trace->add_option("--b", trace_args.b, "Coefficient b")->required();
  trace->add_option("--method", trace_args.method)
      ->check(CLI::IsMember({"naive", "thm1", "thm2", "all"}))
      ->capture_default_str();
  trace->add_option("--format", trace_args.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  VerifyArgs verify_args;
  VerifyConfig& vc = verify_args.config;
  auto* verify = app.add_subcommand("verify", "Sweep fields and compare every theorem with point counting");
  verify->add_option("--q-min", vc.q_min)->capture_default_str();
  verify->add_option("--q-max", vc.q_max)->capture_default_str();
  verify->add_option("--congruence", verify_args.congruence)
      ->check(CLI::IsMember({"mod6", "mod4", "both"}))
      ->capture_default_str();
  verify->add_option("--theorems", verify_args.theorems, "Subset of 1.1 1.2 3.1 3.2")->delimiter(',');
  verify->add_option("--sampling", verify_args.sampling)
      ->check(CLI::IsMember({"exhaustive", "random", "hybrid"}))
      ->capture_default_str();
  verify->add_option("--samples", vc.samples, "Accepted curves per field and theorem when sampling")
      ->capture_default_str();
  auto* seed_opt = verify->add_option("--seed", verify_args.seed);
  verify->add_option("--exhaustive-max", vc.exhaustive_max, "Largest q swept exhaustively in hybrid mode")
      ->capture_default_str();
  verify->add_option("--residual-tol", vc.residual_tolerance)->capture_default_str();
  verify->add_option("--imag-tol", vc.imag_tolerance_per_q, "Imaginary residual bound per unit q")
      ->capture_default_str();
  verify->add_option("--records", verify_args.records)
      ->check(CLI::IsMember({"all", "failures", "none"}))
      ->capture_default_str();
  verify->add_flag("--include-skipped", vc.include_skipped);
  verify->add_flag("--timings", vc.timings);
  verify->add_option("--threads", vc.threads);
  verify->add_option("--format", verify_args.format)
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  verify->add_option("--output", verify_args.output);

  IdentityArgs identity_args;
  auto* identities = app.add_subcommand("identities", "Character and Gauss sum identity suite");
  identities->add_option("--q-min", identity_args.q_min)->capture_default_str();
  identities->add_option("--q-max", identity_args.q_max)->capture_default_str();
  identities->add_option("--format", identity_args.format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  identities->add_option("--output", identity_args.output);

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time direct vs DFT Gauss tables and naive vs formula traces");
  bench->add_option("--q", bench_args.q)->capture_default_str();
  bench->add_option("--reps", bench_args.reps)->capture_default_str();
  bench->add_option("--format", bench_args.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  bench->add_option("--output", bench_args.output);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }

  try {
    if (*trace) return run_trace(trace_args, out, err);
    if (*verify) {
      if (seed_opt->count() > 0) vc.seed = verify_args.seed;
      return run_verify_cmd(verify_args, out);
    }
    if (*identities) return run_identities_cmd(identity_args, out);
    if (*bench) return run_bench_cmd(bench_args, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace ffhyper
