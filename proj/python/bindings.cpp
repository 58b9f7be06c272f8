#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ffhyper/bench.hpp"
#include "ffhyper/curves.hpp"
#include "ffhyper/identities.hpp"
#include "ffhyper/verify.hpp"

namespace py = pybind11;
using namespace ffhyper;

namespace {

// Field elements cross the boundary as their canonical integer index.
class PyField {
 public:
  PyField(std::uint32_t p, std::uint32_t e, std::optional<std::uint32_t> generator, std::uint64_t max_order) {
    FieldOptions options;
    options.max_order = max_order;
    if (generator) options.generator = Element{*generator};
    ctx_ = std::make_shared<FieldContext>(build_field(p, e, options));
  }

  const Field& f() const { return ctx_->field(); }
  const FieldContext& ctx() const { return *ctx_; }

  Element elem(std::int64_t v) const {
    if (v < 0 || v >= static_cast<std::int64_t>(f().order()))
      throw Error(ErrorKind::InvalidInput, "element index " + std::to_string(v) + " outside [0, q)");
    return Element{static_cast<std::uint32_t>(v)};
  }

 private:
  std::shared_ptr<FieldContext> ctx_;
};

std::vector<std::uint32_t> values(const std::vector<Element>& xs) {
  std::vector<std::uint32_t> out;
  out.reserve(xs.size());
  for (const Element x : xs) out.push_back(x.value);
  return out;
}

py::dict report_to_dict(const Field& f, const TraceReport& r) {
  py::dict d;
  d["method"] = std::string(to_string(r.method));
  d["trace"] = r.trace;
  d["raw"] = r.raw;
  d["residual_to_integer"] = r.residual_to_integer;
  d["imag_residual"] = r.imag_residual;
  d["auxiliary"] = r.auxiliary ? py::object(py::int_(r.auxiliary->value)) : py::object(py::none());
  d["alternative_traces"] = r.alternative_traces;
  d["alternatives_agree"] = r.alternatives_agree;
  d["singular"] = r.singular;
  d["within_hasse_bound"] = r.within_hasse_bound;
  d["coefficients"] = values(r.curve.coefficients());
  (void)f;
  return d;
}

TraceMethod parse_method(const std::string& name) {
  if (name == "naive") return TraceMethod::naive;
  if (name == "thm_1_1" || name == "1.1") return TraceMethod::thm_1_1;
  if (name == "thm_1_2" || name == "1.2") return TraceMethod::thm_1_2;
  if (name == "thm_3_1" || name == "3.1") return TraceMethod::thm_3_1;
  if (name == "thm_3_2" || name == "3.2") return TraceMethod::thm_3_2;
  throw Error(ErrorKind::InvalidInput, "unknown method '" + name + "'");
}

IdentityKind parse_identity(const std::string& name) {
  if (name == "theta_expansion") return IdentityKind::theta_expansion;
  if (name == "gauss_inverse") return IdentityKind::gauss_inverse;
  if (name == "davenport_hasse") return IdentityKind::davenport_hasse;
  if (name == "gauss_binomial") return IdentityKind::gauss_binomial;
  throw Error(ErrorKind::InvalidInput, "unknown identity '" + name + "'");
}

Congruence parse_congruence(const std::string& name) {
  if (name == "mod6") return Congruence::mod6;
  if (name == "mod4") return Congruence::mod4;
  if (name == "both") return Congruence::both;
  throw Error(ErrorKind::InvalidInput, "unknown congruence '" + name + "'");
}

SamplingKind parse_sampling(const std::string& name) {
  if (name == "exhaustive") return SamplingKind::exhaustive;
  if (name == "random") return SamplingKind::random;
  if (name == "hybrid") return SamplingKind::hybrid;
  throw Error(ErrorKind::InvalidInput, "unknown sampling '" + name + "'");
}

RecordFilter parse_records(const std::string& name) {
  if (name == "all") return RecordFilter::all;
  if (name == "failures") return RecordFilter::failures;
  if (name == "none") return RecordFilter::none;
  throw Error(ErrorKind::InvalidInput, "unknown record filter '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_ffhyper, m) {
  m.doc() = "Finite-field character sums, Greene hypergeometric functions and elliptic curve traces";
  m.attr("__version__") = std::string(kVersion);

  static py::exception<Error> error_type(m, "FFHyperError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& err) {
      // args = (kind, message)
      py::tuple args = py::make_tuple(std::string(to_string(err.kind())), std::string(err.what()));
      PyErr_SetObject(error_type.ptr(), args.ptr());
    }
  });

  m.def("is_prime", [](std::uint64_t n) { return is_prime(n); }, py::arg("n"));
  m.def("prime_power", [](std::uint64_t n) { return prime_power(n); }, py::arg("n"),
        "(p, e) when n = p^e, otherwise None.");

  py::class_<PyField, std::shared_ptr<PyField>>(m, "Field")
      .def(py::init<std::uint32_t, std::uint32_t, std::optional<std::uint32_t>, std::uint64_t>(), py::arg("p"),
           py::arg("e") = 1, py::arg("generator") = py::none(), py::arg("max_order") = kDefaultMaxOrder)
      .def_property_readonly("p", [](const PyField& s) { return s.f().characteristic(); })
      .def_property_readonly("e", [](const PyField& s) { return s.f().degree(); })
      .def_property_readonly("q", [](const PyField& s) { return s.f().order(); })
      .def_property_readonly("generator", [](const PyField& s) { return s.f().generator().value; })
      .def_property_readonly("modulus", [](const PyField& s) {
        const auto mod = s.f().modulus();
        return std::vector<std::uint32_t>(mod.begin(), mod.end());
      })
      .def("add", [](const PyField& s, std::int64_t x, std::int64_t y) { return s.f().add(s.elem(x), s.elem(y)).value; })
      .def("sub", [](const PyField& s, std::int64_t x, std::int64_t y) { return s.f().sub(s.elem(x), s.elem(y)).value; })
      .def("mul", [](const PyField& s, std::int64_t x, std::int64_t y) { return s.f().mul(s.elem(x), s.elem(y)).value; })
      .def("div", [](const PyField& s, std::int64_t x, std::int64_t y) { return s.f().div(s.elem(x), s.elem(y)).value; })
      .def("neg", [](const PyField& s, std::int64_t x) { return s.f().neg(s.elem(x)).value; })
      .def("inv", [](const PyField& s, std::int64_t x) { return s.f().inv(s.elem(x)).value; })
      .def("pow", [](const PyField& s, std::int64_t x, std::int64_t k) { return s.f().pow(s.elem(x), k).value; })
      .def("from_integer", [](const PyField& s, std::int64_t n) { return s.f().from_integer(n).value; })
      .def("digits", [](const PyField& s, std::int64_t x) { return s.f().digits(s.elem(x)); })
      .def("discrete_log", [](const PyField& s, std::int64_t x) { return s.f().discrete_log(s.elem(x)); })
      .def("exp", [](const PyField& s, std::int64_t j) { return s.f().exp(j).value; })
      .def("trace", [](const PyField& s, std::int64_t x) { return s.f().trace_to_prime(s.elem(x)); })
      .def("quadratic_character", [](const PyField& s, std::int64_t x) { return s.f().quadratic_character(s.elem(x)); })
      .def("sqrt", [](const PyField& s, std::int64_t x) { return values(sqrt_opt(s.f(), s.elem(x))); })
      .def("cubic_roots", [](const PyField& s, std::int64_t a, std::int64_t b) {
        return values(roots_of_cubic(s.f(), s.elem(a), s.elem(b)));
      })
      .def("primitive_elements", [](const PyField& s) { return values(primitive_elements(s.f())); })
      .def("format", [](const PyField& s, std::int64_t x) { return s.f().format(s.elem(x)); })
      .def("parse", [](const PyField& s, const std::string& text) { return s.f().parse(text).value; })
      .def("additive_char", [](const PyField& s, std::int64_t x) { return s.ctx().chars().additive(s.elem(x)); })
      .def("mult_char", [](const PyField& s, std::int64_t mi, std::int64_t x) {
        return s.ctx().chars().multiplicative(mi, s.elem(x));
      })
      .def("gauss_sums", [](const PyField& s) { return s.ctx().gauss().values(); })
      .def("gauss_sum", [](const PyField& s, std::int64_t mi) { return s.ctx().gauss()[mi]; })
      .def("gauss_sums_direct", [](const PyField& s) {
        return gauss_sum_table(s.ctx().chars(), GaussMethod::direct).values();
      })
      .def("jacobi_sum", [](const PyField& s, std::int64_t a, std::int64_t b) { return jacobi_sum(s.ctx(), a, b); })
      .def("jacobi_sum_direct", [](const PyField& s, std::int64_t a, std::int64_t b) {
        return jacobi_sum_direct(s.ctx().chars(), a, b);
      })
      .def("binomial", [](const PyField& s, std::int64_t a, std::int64_t b) { return greene_binomial(s.ctx(), a, b); })
      .def("hyper_2f1", [](const PyField& s, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t x) {
        return hyper_2f1(s.ctx(), a, b, c, s.elem(x));
      }, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"))
      .def("hyper_2f1_all", [](const PyField& s, std::int64_t a, std::int64_t b, std::int64_t c) {
        return Hyper2F1(s.ctx(), a, b, c).all_values();
      }, py::arg("a"), py::arg("b"), py::arg("c"))
      .def("hyper", [](const PyField& s, std::vector<CharIndex> top, std::vector<CharIndex> bottom, std::int64_t x) {
        return hyper_npfn(s.ctx(), HyperSpec{std::move(top), std::move(bottom), s.elem(x)});
      }, py::arg("top"), py::arg("bottom"), py::arg("x"))
      .def("check_identity", [](const PyField& s, const std::string& kind, std::int64_t first, std::int64_t second) {
        return check_identity(s.ctx(), parse_identity(kind), first, second);
      }, py::arg("kind"), py::arg("first"), py::arg("second") = 0)
      .def("count_points", [](const PyField& s, std::int64_t c2, std::int64_t c1, std::int64_t c0) {
        return count_points(s.f(), CurveSpec::general(s.elem(c2), s.elem(c1), s.elem(c0)));
      }, py::arg("c2"), py::arg("c1"), py::arg("c0"))
      .def("is_singular", [](const PyField& s, std::int64_t c2, std::int64_t c1, std::int64_t c0) {
        return is_singular(s.f(), CurveSpec::general(s.elem(c2), s.elem(c1), s.elem(c0)));
      }, py::arg("c2"), py::arg("c1"), py::arg("c0"))
      .def("curve_trace", [](const PyField& s, const std::string& method, std::int64_t u, std::int64_t v) {
        const Element a = s.elem(u), b = s.elem(v);
        switch (parse_method(method)) {
          case TraceMethod::naive: return report_to_dict(s.f(), trace_naive(s.f(), CurveSpec::short_weierstrass(a, b)));
          case TraceMethod::thm_1_1: return report_to_dict(s.f(), trace_thm_1_1(s.ctx(), a, b));
          case TraceMethod::thm_1_2: return report_to_dict(s.f(), trace_thm_1_2(s.ctx(), a, b));
          case TraceMethod::thm_3_1: return report_to_dict(s.f(), trace_thm_3_1(s.ctx(), a, b));
          case TraceMethod::thm_3_2: return report_to_dict(s.f(), trace_thm_3_2(s.ctx(), a, b));
        }
        throw Error(ErrorKind::InvalidInput, "unknown method");
      }, py::arg("method"), py::arg("u"), py::arg("v"),
         "Trace report. naive, 1.1 and 1.2 take (a, b) of y^2 = x^3 + a x + b; "
         "3.1 takes (c, d) of y^2 = x^3 + c x^2 + d; 3.2 takes (f, g) of y^2 = x^3 + f x^2 + g x.");

  m.def("_verify_json", [](std::uint32_t q_min, std::uint32_t q_max, const std::string& congruence,
                           const std::vector<std::string>& theorems, const std::string& sampling,
                           std::uint32_t samples, std::optional<std::uint64_t> seed, std::uint32_t exhaustive_max,
                           const std::string& records, bool include_skipped, unsigned threads) {
    VerifyConfig config;
    config.q_min = q_min;
    config.q_max = q_max;
    config.congruence = parse_congruence(congruence);
    config.theorems.clear();
    for (const auto& t : theorems) config.theorems.push_back(parse_theorem(t));
    config.sampling = parse_sampling(sampling);
    config.samples = samples;
    config.seed = seed;
    config.exhaustive_max = exhaustive_max;
    config.records = parse_records(records);
    config.include_skipped = include_skipped;
    config.threads = threads;
    py::gil_scoped_release release;
    return to_json(run_verify(config)).dump();
  });

  m.def("_identities_json", [](std::uint32_t q_min, std::uint32_t q_max, unsigned threads) {
    py::gil_scoped_release release;
    return to_json(run_identity_suite(q_min, q_max, threads)).dump();
  });

  m.def("_bench_json", [](std::uint32_t q, std::uint32_t reps) {
    py::gil_scoped_release release;
    return to_json(run_bench(q, reps)).dump();
  });
}
