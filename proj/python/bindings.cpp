#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ko/kac.hpp"
#include "ko/suites.hpp"

namespace py = pybind11;
using namespace ko;

namespace {

AlgebraKind kind_of(const std::string& s) {
  if (s == "m") return AlgebraKind::M;
  if (s == "sm") return AlgebraKind::SM;
  throw py::value_error("algebra must be 'm' or 'sm'");
}

PChar to_pchar(const ContactAlgebra& g, const std::vector<std::int64_t>& values) {
  if (values.size() != g.dim()) throw py::value_error("p-character needs one value per basis element");
  PChar chi = zero_pchar(g.lsa);
  for (std::size_t i = 0; i < values.size(); ++i) chi.values[i] = g.F().reduce(values[i]);
  validate_pchar(g.lsa, chi);
  return chi;
}

std::vector<Scalar> bracket(const LSA& L, std::size_t i, std::size_t j) {
  if (i >= L.dim || j >= L.dim) throw py::index_error("basis index out of range");
  return L.bracket(L.basis_vec(i), L.basis_vec(j));
}

SearchTarget target_of(const std::string& s) {
  if (s == "nonsingular") return SearchTarget::Nonsingular;
  if (s == "delta-invertible") return SearchTarget::DeltaInvertible;
  if (s == "regular-semisimple") return SearchTarget::RegularSemisimple;
  throw py::value_error("unknown search target " + s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic for odd contact Lie superalgebras over F_p";
  m.attr("version") = kToolkitVersion;

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<LSA>(m, "LieSuperalgebra")
      .def_property_readonly("dim", [](const LSA& L) { return L.dim; })
      .def_property_readonly("p", &LSA::p)
      .def_property_readonly("labels", [](const LSA& L) { return L.labels; })
      .def_property_readonly("parity", [](const LSA& L) { return std::vector<int>(L.parity.begin(), L.parity.end()); })
      .def_property_readonly("degree", [](const LSA& L) { return L.degree; })
      .def("bracket", &bracket, py::arg("i"), py::arg("j"), "Coordinates of [e_i, e_j].")
      .def("verify_jacobi", [](const LSA& L) { return verify_jacobi(L).passed(); })
      .def("verify_restricted", [](const LSA& L) { return verify_restricted(L).passed(); })
      .def("to_json", [](const LSA& L) { return export_lsa(L).dump(); });

  py::class_<ContactAlgebra>(m, "ContactAlgebra")
      .def_property_readonly("kind", [](const ContactAlgebra& g) { return to_string(g.kind); })
      .def_property_readonly("n", [](const ContactAlgebra& g) { return g.shape.n; })
      .def_property_readonly("p", [](const ContactAlgebra& g) { return g.shape.p; })
      .def_property_readonly("kappa", [](const ContactAlgebra& g) { return g.shape.kappa; })
      .def_property_readonly("dim", &ContactAlgebra::dim)
      .def_property_readonly("lsa", [](const ContactAlgebra& g) { return g.lsa; })
      .def("graded_dims", &ContactAlgebra::graded_dims)
      .def("monomial_index", [](const ContactAlgebra& g, const std::vector<int>& r) {
        std::vector<std::uint8_t> e;
        for (int x : r) {
          if (x < 0 || x > 255) throw py::value_error("multi-index entries must lie in [0, 255]");
          e.push_back(static_cast<std::uint8_t>(x));
        }
        return g.monomial_index(MultiIndex(std::move(e)));
      });

  m.def("build", [](const std::string& algebra, unsigned n, std::uint32_t p, Scalar kappa) {
    return build_algebra(kind_of(algebra), {n, p, kappa});
  }, py::arg("algebra") = "m", py::arg("n") = 1, py::arg("p") = 5, py::arg("kappa") = 0);
  m.def("import_json", [](const std::string& doc) { return import_lsa(Json::parse(doc)); });

  m.def("height", [](const ContactAlgebra& g, const std::vector<std::int64_t>& chi) {
    return height(g.lsa, to_pchar(g, chi));
  });
  m.def("rank", [](const ContactAlgebra& g, const std::vector<std::int64_t>& chi) {
    return rank_chi(g, to_pchar(g, chi));
  });
  m.def("is_nonsingular", [](const ContactAlgebra& g, const std::vector<std::int64_t>& chi) {
    return is_nonsingular(g, to_pchar(g, chi));
  });
  m.def("is_regular_semisimple", [](const ContactAlgebra& g, const std::vector<std::int64_t>& chi) {
    return is_regular_semisimple(g, to_pchar(g, chi), OrbitMode::Identity).value;
  });
  m.def("is_delta_invertible", [](const ContactAlgebra& g, const std::vector<std::int64_t>& chi) {
    return to_string(is_delta_invertible(g, to_pchar(g, chi), OrbitMode::Identity).decision);
  });
  m.def("search", [](const ContactAlgebra& g, const std::string& target, std::uint64_t seed, std::uint64_t budget) {
    auto r = search_char(g, target_of(target), seed, budget);
    py::dict d;
    d["found"] = r.found;
    d["chi"] = r.chi.values;
    d["evaluations"] = r.evaluations;
    d["log"] = r.log;
    return d;
  }, py::arg("g"), py::arg("target"), py::arg("seed") = 0, py::arg("budget") = 1000);

  m.def("kac_dims", [](const ContactAlgebra& g, const std::vector<std::int64_t>& chi, std::uint64_t seed) {
    auto c = to_pchar(g, chi);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& M : simple_g0_modules(g, c, seed).modules) out.emplace_back(M.dim, kac_module(g, c, M).dim());
    return out;
  }, py::arg("g"), py::arg("chi"), py::arg("seed") = 0, "(dim M, dim K(M)) for each simple g^0-module M.");
  m.def("kac_irreducible", [](const ContactAlgebra& g, const std::vector<std::int64_t>& chi, std::size_t module,
                              std::uint64_t seed) {
    auto c = to_pchar(g, chi);
    auto fam = simple_g0_modules(g, c, seed);
    if (module >= fam.modules.size()) throw py::index_error("module index out of range");
    auto K = kac_module(g, c, fam.modules[module]);
    return to_string(meataxe_irreducible(K.as_module(filtration_basis(g.lsa, g.lsa.min_degree())), seed).verdict);
  }, py::arg("g"), py::arg("chi"), py::arg("module") = 0, py::arg("seed") = 0);

  m.def("run_suite_json", [](const std::string& command, const std::string& sub, const std::string& config) {
    auto j = Json::parse(config);
    RunConfig c;
    c.algebra = kind_of(j.value("algebra", std::string("m")));
    c.n = j.value("n", 1u);
    c.p = j.value("p", 5u);
    c.kappa = j.value("kappa", 0u);
    c.seed = j.value("seed", std::uint64_t{0});
    c.budget = j.value("budget", std::uint64_t{1000});
    c.samples = j.value("samples", 64u);
    c.long_checks = j.value("long", false);
    if (j.contains("chi")) c.chi = j["chi"];
    if (j.contains("height")) c.h = j["height"].get<int>();
    c.module = j.value("module", std::size_t{0});
    if (j.contains("target")) c.target = target_of(j["target"].get<std::string>());
    Report r;
    {
      py::gil_scoped_release release;
      r = run_suite(command, sub, c);
    }
    return py::make_tuple(r.exit_code(), r.to_json().dump());
  });
}
