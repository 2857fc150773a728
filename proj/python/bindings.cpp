#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gpea/catalog.hpp"
#include "gpea/ideals.hpp"
#include "gpea/kite.hpp"
#include "gpea/rdp.hpp"
#include "gpea/unitization.hpp"
#include "gpea/verify.hpp"

namespace py = pybind11;
using namespace gpea;

namespace {

std::vector<std::vector<Elem>> subsets(const std::vector<ElementSubset>& xs) {
  std::vector<std::vector<Elem>> out;
  for (const auto& s : xs) out.push_back(s.members());
  return out;
}

py::dict flags_dict(const StructureFlags& s) {
  py::dict d;
  d["total"] = s.total;
  d["weakly_commutative"] = s.weakly_commutative;
  d["commutative"] = s.commutative;
  d["has_unit"] = s.has_unit;
  d["upward_directed"] = s.upward_directed;
  d["downward_directed"] = s.downward_directed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite generalized pseudo effect algebras";

  auto base_error = py::register_exception<GpeaError>(m, "GpeaError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base_error);
  py::register_exception<AxiomError>(m, "AxiomError", base_error);
  py::register_exception<PreconditionError>(m, "PreconditionError", base_error);
  py::register_exception<ContractViolation>(m, "ContractViolation", base_error);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base_error);
  // attach the position to ParseError instances
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::gil_scoped_acquire gil;
      py::object type = py::module_::import("gpea._core").attr("ParseError");
      py::object err = type(e.what());
      err.attr("line") = e.line();
      err.attr("column") = e.column();
      PyErr_SetObject(type.ptr(), err.ptr());
    }
  });

  py::class_<Gpea>(m, "Gpea")
      .def_property_readonly("size", &Gpea::size)
      .def("op", [](const Gpea& g, Elem a, Elem b) -> std::optional<Elem> {
        const Elem v = g.op(a, b);
        if (v == kUndefined) return std::nullopt;
        return v;
      })
      .def("leq", &Gpea::leq)
      .def("name", &Gpea::name)
      .def_property_readonly("top", [](const Gpea& g) -> std::optional<Elem> {
        if (!g.has_unit()) return std::nullopt;
        return g.top();
      })
      .def("serialize", [](const Gpea& g) { return serialize(g); })
      .def("flags", [](const Gpea& g) { return flags_dict(classify(g)); })
      .def("__len__", &Gpea::size)
      .def("__eq__", &Gpea::operator==)
      .def("__repr__", [](const Gpea& g) { return "<Gpea size=" + std::to_string(g.size()) + ">"; });

  m.def("builtin", [](const std::string& spec) { return builtin(spec); }, py::arg("spec"));
  m.def("catalog_names", &catalog_names);
  m.def("load", [](const std::string& text) { return load(text); }, py::arg("text"));
  m.def(
      "axiom_report",
      [](const std::string& text) {
        const AxiomReport r = validate_axioms(parse(text));
        return std::vector<bool>(r.pass.begin(), r.pass.end());
      },
      py::arg("text"), "Per-axiom verdicts for a table that may not be a GPEA.");

  m.def("enumerate_gpeas", [](std::size_t n, std::optional<bool> total, std::optional<bool> wc,
                              std::optional<bool> unit) { return enumerate_gpeas(n, {total, wc, unit}); },
        py::arg("n"), py::arg("total") = py::none(), py::arg("weakly_commutative") = py::none(),
        py::arg("has_unit") = py::none());
  m.def("automorphisms", [](const Gpea& g) { return find_morphisms(g, g, MorphismMode::kAuto); });
  m.def("unitizing_automorphisms", &enumerate_unitizing);
  m.def("gamma_unitize", [](const Gpea& g, const Permutation& gamma) { return gamma_unitize(g, gamma).algebra; },
        py::arg("g"), py::arg("gamma"));

  m.def("normal_riesz_ideals",
        [](const Gpea& g, std::optional<Permutation> gamma) { return subsets(normal_riesz_ideals(g, gamma)); },
        py::arg("g"), py::arg("gamma") = py::none());
  m.def("sim_from_ideal", [](const Gpea& g, const std::vector<Elem>& ideal) {
    return sim_from_ideal(g, ElementSubset::from_members(g.size(), ideal)).blocks();
  });

  m.def("rdp_profile", [](const Gpea& g) {
    const RdpProfile p = rdp_profile(g);
    py::dict d;
    d["rdp0"] = p.rdp0;
    d["rdp"] = p.rdp;
    d["rdp1"] = p.rdp1;
    d["rdp2"] = p.rdp2;
    return d;
  });

  m.def("check_kc", [](const Gpea& base, const Permutation& lambda, const Permutation& rho) {
    const KcVerdict kc = check_kc({base, lambda.size(), lambda, rho});
    return std::make_pair(kc.kci.ok, kc.kcii.ok);
  });
  m.def("build_kite", [](const Gpea& base, const Permutation& lambda, const Permutation& rho) {
    return build_kite({base, lambda.size(), lambda, rho});
  });
  m.def("kite_iso", [](const Gpea& base, const Permutation& lambda, const Permutation& rho) {
    const KiteIsoReport r = kite_iso({base, lambda.size(), lambda, rho});
    return std::make_pair(r.phi, r.failures);
  });

  m.def("twisted_window_violations", [](long n) { return twisted_window(n).violations; }, py::arg("n"));

  m.def(
      "verify",
      [](const std::string& scope, std::size_t max_size) {
        VerifyOptions opts;
        opts.max_size = max_size;
        const VerifyReport r = verify(scope, opts);
        return std::make_pair(r.ok(), r.render());
      },
      py::arg("scope") = "all", py::arg("max_size") = 4,
      "Runs a theorem suite; returns (all passed, report text).");
}
