#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyparr/hyparr.hpp"

namespace py = pybind11;
using namespace hyparr;

namespace {

// Results cross the boundary as JSON text decoded by the stdlib module, so
// callers get plain dicts and lists with rationals as strings.
py::object to_python(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object zeta_result(const Arrangement& a, bool single_variable) {
  RationalFunctionInS z = zeta_global(a);
  if (single_variable) z = specialize_diagonal(z);
  json j = zeta_to_json(z);
  json poles = json::array();
  for (const auto& [f, order] : pole_locus(z)) {
    json entry = to_json(f);
    entry["order"] = order;
    poles.push_back(std::move(entry));
  }
  j["poles"] = std::move(poles);
  j["text"] = z.to_string();
  return to_python(j);
}

py::object roots_result(const Arrangement& a, bool assume_free, unsigned max_degree) {
  if (!a.is_reduced()) throw ValidationError("free_roots: arrangement is not reduced");
  const RootsStatus status = roots_status(support_freeness(a, max_degree), assume_free);
  if (status == RootsStatus::Refused)
    throw ValidationError("free_roots: arrangement is not free (Terao obstruction); pass assume_free=True");
  const RootSet roots = free_roots(Lattice(reduced_complete(a)));
  return to_python({{"roots", roots_to_json(roots)}, {"status", to_string(status)}});
}

}  // namespace

PYBIND11_MODULE(_hyparr, m) {
  m.doc() = "Exact lattice, freeness, Bernstein-Sato and zeta computations for hyperplane arrangements";

  // Translators are tried newest first, so the subclass goes last.
  py::register_exception<Error>(m, "HyparrError", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<Arrangement>(m, "Arrangement")
      .def_static(
          "parse", [](const std::string& text) { return parse_auto(text); }, py::arg("text"),
          "Parse the plain-text or JSON input format.")
      .def_static("load", &load_arrangement, py::arg("path"))
      .def_static(
          "corpus",
          [](const std::string& name) {
            auto entry = corpus_entry(name);
            if (!entry) throw py::key_error("unknown corpus entry: " + name);
            return entry->arrangement;
          },
          py::arg("name"))
      .def_property_readonly("dim", &Arrangement::dim)
      .def_property_readonly("factors", &Arrangement::factors)
      .def_property_readonly("rank", &Arrangement::rank)
      .def_property_readonly("kind", [](const Arrangement& a) { return to_string(a.kind()); })
      .def("is_reduced", &Arrangement::is_reduced)
      .def("is_essential", &Arrangement::is_essential)
      .def("to_plain", &to_plain)
      .def("to_dict", [](const Arrangement& a) { return to_python(to_json(a)); })
      .def("__len__", &Arrangement::size)
      .def("__eq__", [](const Arrangement& a, const Arrangement& b) { return a == b; })
      .def("__repr__", [](const Arrangement& a) {
        return "<Arrangement dim=" + std::to_string(a.dim()) + " hyperplanes=" + std::to_string(a.size()) +
               " factors=" + std::to_string(a.factors()) + ">";
      });

  m.def("corpus_names", [] {
    std::vector<std::string> names;
    for (const auto& e : builtin_corpus()) names.push_back(e.name);
    return names;
  });

  m.def("lattice", [](const Arrangement& a) { return to_python(lattice_to_json(Lattice(a))); }, py::arg("arr"));

  m.def(
      "dense_edges",
      [](const Arrangement& a) {
        const Lattice l(a);
        json out = json::array();
        for (auto w : l.dense_edges())
          out.push_back({{"edge", edge_label(l.edge(w))},
                         {"rank", l.edge(w).rank},
                         {"proj_complement_euler", l.proj_complement_euler(w)}});
        return to_python(out);
      },
      py::arg("arr"));

  m.def(
      "charpoly",
      [](const Arrangement& a) {
        std::vector<std::string> coeffs;
        for (const auto& c : Lattice(a).global_char_poly().ascending_coefficients()) coeffs.push_back(to_string(c));
        return coeffs;
      },
      py::arg("arr"), "Coefficients of the characteristic polynomial, constant term first.");

  m.def("lct", [](const Arrangement& a) { return to_string(lct(Lattice(a))); }, py::arg("arr"));

  m.def(
      "freeness",
      [](const Arrangement& a, unsigned max_degree) { return to_python(freeness_to_json(support_freeness(a, max_degree))); },
      py::arg("arr"), py::arg("max_degree") = 0);

  m.def("free_roots", &roots_result, py::arg("arr"), py::arg("assume_free") = false, py::arg("max_degree") = 0,
        "Bernstein-Sato roots from the free-arrangement formula, closest to zero first.");

  m.def(
      "bs_lower",
      [](const Arrangement& a) {
        const CompleteFactorization cf = complete_factorization(a);
        return to_python(forms_to_json(lower_bound_components(Lattice(cf.arrangement))));
      },
      py::arg("arr"));

  m.def("zeta", &zeta_result, py::arg("arr"), py::arg("single_variable") = false);

  m.def("verify_smc", [](const Arrangement& a) { return to_python(smc_to_json(verify_smc(a))); }, py::arg("arr"));

  m.def(
      "report",
      [](const Arrangement& a, unsigned max_degree, bool assume_free, bool single_variable) {
        return to_python(full_report(a, {max_degree, assume_free, single_variable, false}));
      },
      py::arg("arr"), py::arg("max_degree") = 0, py::arg("assume_free") = false, py::arg("single_variable") = false);
}
