#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ncg/cli.hpp"
#include "ncg/suite.hpp"

namespace py = pybind11;
using namespace ncg;

namespace {

ActionPolynomial poly(const std::vector<double>& c) { return ActionPolynomial{c}; }

py::dict report_dict(const IdentityReport& r) {
  py::list checks;
  for (const auto& c : r.checks) {
    py::dict d;
    d["name"] = c.name;
    d["max_deviation"] = c.max_deviation;
    d["tolerance"] = c.tolerance;
    d["enforced"] = c.enforced;
    d["pass"] = c.pass();
    checks.append(d);
  }
  py::dict out;
  out["section"] = r.section;
  out["pass"] = r.pass();
  out["checks"] = checks;
  return out;
}

py::dict chain_dict(const ChainResult& res) {
  std::vector<long> step;
  std::vector<double> tot, ym, h, gh, th, acc;
  for (const auto& r : res.records) {
    step.push_back(r.step);
    tot.push_back(r.s_total);
    ym.push_back(r.s_ym);
    h.push_back(r.s_h);
    gh.push_back(r.s_gh);
    th.push_back(r.s_theta);
    acc.push_back(r.acceptance);
  }
  py::dict d;
  d["step"] = step;
  d["S_total"] = tot;
  d["S_ym"] = ym;
  d["S_h"] = h;
  d["S_gh"] = gh;
  d["S_theta"] = th;
  d["acceptance"] = acc;
  d["final_acceptance"] = res.acceptance;
  d["tuned"] = py::dict(py::arg("L") = res.tuned.L, py::arg("A") = res.tuned.A,
                        py::arg("phi") = res.tuned.phi);
  return d;
}

SamplerConfig sampler_config(int N, int n, const std::vector<double>& c, long steps, long burn_in,
                             long thin, double step, std::uint64_t seed) {
  SamplerConfig sc;
  sc.N = N;
  sc.n = n;
  sc.poly = poly(c);
  sc.steps = steps;
  sc.burn_in = burn_in;
  sc.thin = thin;
  sc.step = {step, step, step};
  sc.seed = seed;
  return sc;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fuzzy spectral triples, Yang-Mills-Higgs fluctuations and their spectral action";

  static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
  py::register_exception<NonFourDimensional>(m, "NonFourDimensional", base.ptr());
  py::register_exception<ConjugationNotFound>(m, "ConjugationNotFound", base.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
  py::register_exception<NotSelfAdjoint>(m, "NotSelfAdjoint", base.ptr());
  py::register_exception<NotFlat>(m, "NotFlat", base.ptr());
  py::register_exception<NotRiemannian>(m, "NotRiemannian", base.ptr());
  py::register_exception<UnstableAction>(m, "UnstableAction", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

  py::class_<Signature>(m, "Signature")
      .def_readonly("p", &Signature::p)
      .def_readonly("q", &Signature::q)
      .def_readonly("s", &Signature::s)
      .def_readonly("e", &Signature::e)
      .def_readonly("e_hat", &Signature::e_hat)
      .def_readonly("eps", &Signature::eps)
      .def_readonly("eps_prime", &Signature::eps_prime)
      .def_readonly("eps_dblprime", &Signature::eps_dblprime)
      .def_readonly("sigma_eta", &Signature::sigma_eta)
      .def_property_readonly("riemannian", &Signature::riemannian)
      .def("label", &Signature::label)
      .def("__repr__", [](const Signature& s) { return "Signature" + s.label(); });
  m.def("signature", &build_signature, py::arg("p"), py::arg("q"));
  m.def("all_signatures", &all_signatures);

  py::class_<CliffordModule>(m, "CliffordModule")
      .def_readonly("signature", &CliffordModule::signature)
      .def_readonly("gammas", &CliffordModule::gammas)
      .def_readonly("chirality", &CliffordModule::chirality)
      .def_readonly("conj_unitary", &CliffordModule::conj_unitary);
  m.def("build_gammas", &build_gammas);
  m.def("trace4", [](const Signature& s, int a, int b, int c, int d) { return trace4(s, a, b, c, d); });

  py::class_<FuzzyData>(m, "FuzzyData")
      .def_readonly("N", &FuzzyData::N)
      .def_readonly("signature", &FuzzyData::sig)
      .def_readwrite("K", &FuzzyData::K)
      .def_readwrite("X", &FuzzyData::X)
      .def_static("zero", &FuzzyData::zero);
  py::class_<FiniteData>(m, "FiniteData")
      .def(py::init([](const Mat& D_F) { return FiniteData{int(D_F.rows()), D_F}; }))
      .def_readonly("n", &FiniteData::n)
      .def_readonly("D_F", &FiniteData::D_F)
      .def_static("zero", &FiniteData::zero);
  py::class_<GaugeTriple>(m, "GaugeTriple")
      .def_readonly("fuzzy", &GaugeTriple::fuzzy)
      .def_readonly("finite", &GaugeTriple::finite)
      .def_property_readonly("N", &GaugeTriple::N)
      .def_property_readonly("n", &GaugeTriple::n)
      .def_property_readonly("hilbert_dim", &GaugeTriple::hilbert_dim);
  py::class_<Fluctuation>(m, "Fluctuation")
      .def_readonly("m", &Fluctuation::m)
      .def_readwrite("A", &Fluctuation::A)
      .def_readwrite("S", &Fluctuation::S)
      .def_readwrite("phi", &Fluctuation::phi)
      .def_static("zero", &Fluctuation::zero);

  m.def("random_fuzzy", &random_fuzzy, py::arg("N"), py::arg("signature"), py::arg("scale"),
        py::arg("seed"), py::arg("include_X") = false);
  m.def("random_finite", &random_finite, py::arg("n"), py::arg("scale") = 1.0, py::arg("seed") = 1);
  m.def("make_triple", &make_triple);
  m.def("random_fluctuation", &random_fluctuation, py::arg("triple"), py::arg("scale"),
        py::arg("seed"), py::arg("include_S") = false);

  m.def("assemble_fuzzy_dirac", &assemble_fuzzy_dirac);
  m.def("assemble_product_dirac", &assemble_product_dirac);
  m.def("assemble_fluctuated", &assemble_fluctuated);
  m.def("lichnerowicz_rhs", py::overload_cast<const FuzzyData&, const CliffordModule&>(&lichnerowicz_rhs));
  m.def("weitzenbock_rhs", &weitzenbock_rhs);

  m.def("trace_d2_closed", &trace_d2_closed);
  m.def("trace_d4_closed", &trace_d4_closed);
  m.def("spectral_action_direct",
        [](const Mat& D, const std::vector<double>& c) { return spectral_action_direct(D, poly(c)); });
  m.def("sectors", [](const GaugeTriple& gt, const Fluctuation& fl, const std::vector<double>& c) {
    const ActionBreakdown b = sectors(gt, fl, poly(c));
    py::dict d;
    d["s_ym"] = b.s_ym;
    d["s_h"] = b.s_h;
    d["s_gh"] = b.s_gh;
    d["s_theta"] = b.s_theta;
    d["s_gh_reduced"] = b.s_gh_reduced;
    d["total_closed"] = b.total_closed;
    d["positivity_applies"] = b.positivity_applies;
    return d;
  });

  m.def("covariance_report",
        [](const GaugeTriple& gt, const Fluctuation& fl, const Mat& u, const std::vector<double>& c) {
          return report_dict(covariance_report(gt, fl, GaugeElement{u, std::nullopt, std::nullopt},
                                               poly(c), build_gammas(gt.sig())).checks);
        });
  m.def("haar_unitary", &haar_unitary, py::arg("k"), py::arg("seed"));

  m.def(
      "identity_suite",
      [](int p, int q, int N, int n, std::uint64_t seed) {
        SuiteOptions o;
        o.N = N;
        o.n = n;
        o.seed = seed;
        return report_dict(run_identity_suite(build_signature(p, q), o));
      },
      py::arg("p") = 0, py::arg("q") = 4, py::arg("N") = 2, py::arg("n") = 2, py::arg("seed") = 1);

  m.def(
      "gaussian_self_test",
      [](int N, long steps, long burn_in, double step, std::uint64_t seed) {
        return chain_dict(run_gaussian_self_test(sampler_config(N, 1, {0, 1}, steps, burn_in, 1, step, seed)));
      },
      py::arg("N") = 2, py::arg("steps") = 110000, py::arg("burn_in") = 10000, py::arg("step") = 1.0,
      py::arg("seed") = 1);
  m.def(
      "run_chain",
      [](const GaugeTriple& gt, const std::vector<double>& c, long steps, long burn_in, long thin,
         double step, std::uint64_t seed) {
        return chain_dict(
            run_chain(sampler_config(gt.N(), gt.n(), c, steps, burn_in, thin, step, seed), gt));
      },
      py::arg("triple"), py::arg("poly") = std::vector<double>{0, 1, 0, 1}, py::arg("steps") = 1000,
      py::arg("burn_in") = 100, py::arg("thin") = 1, py::arg("step") = 0.05, py::arg("seed") = 1);
  m.def("batch_means", [](const std::vector<double>& x, int batches) {
    const Estimate e = batch_means(x, batches);
    return py::make_tuple(e.mean, e.stderr_);
  }, py::arg("x"), py::arg("batches") = 20);

  m.def("matrix_to_json", [](const Mat& x) { return matrix_to_json(x).dump(); });
  m.def("matrix_from_json", [](const std::string& s) {
    try {
      return matrix_from_json(json::parse(s));
    } catch (const json::exception& e) {
      throw ConfigError(std::string("ConfigError: ") + e.what());
    }
  });

  m.def("cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "ncg-ymh");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int rc = run_cli(int(argv.size()), argv.data(), out, err);
    return py::make_tuple(rc, out.str(), err.str());
  });
}
