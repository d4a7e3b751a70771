#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gradsym/replicate.hpp"

namespace py = pybind11;
using namespace gradsym;

namespace {

// Values cross the boundary as canonical JSON text; the Python side decodes.
std::string text(const Json& j) { return canonical_text(j); }

GradedAlgebra from_text(const std::string& s) { return parse_algebra_text(s); }

HuntParams hunt_params(std::uint32_t p, const std::vector<std::uint32_t>& ext_degrees,
                       const std::vector<std::string>& groups, const std::vector<std::uint32_t>& alpha,
                       std::uint64_t budget, unsigned workers) {
  HuntParams h;
  h.p = p;
  h.ext_degrees = ext_degrees;
  h.groups.clear();
  for (const auto& g : groups) h.groups.push_back(group_from_json(parse_json_text(g)));
  h.alpha_values = alpha;
  h.budget = budget;
  h.workers = workers;
  return h;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact decisions of graded symmetry for group-graded algebras";

  py::register_exception<Error>(m, "GradsymError");

  py::class_<GradedAlgebra>(m, "Algebra")
      .def_property_readonly("dim", &GradedAlgebra::dim)
      .def_property_readonly("degrees", [](const GradedAlgebra& a) { return a.degrees(); })
      .def_property_readonly("labels", [](const GradedAlgebra& a) { return a.labels(); })
      .def_property_readonly("field", [](const GradedAlgebra& a) { return a.field().name(); })
      .def_property_readonly("group_order", [](const GradedAlgebra& a) { return a.group().order(); })
      .def("to_json", [](const GradedAlgebra& a) { return text(algebra_to_json(a)); })
      .def("hash", &algebra_hash)
      .def("__eq__", &GradedAlgebra::operator==)
      .def("__repr__", [](const GradedAlgebra& a) {
        return "<Algebra dim=" + std::to_string(a.dim()) + " over " + a.field().name() + ">";
      });

  m.def("parse_algebra", &from_text, py::arg("text"));
  m.def("constructor_names", &constructor_names);

  m.def("decide", [](const GradedAlgebra& a, const std::string& mode) {
    return text(verdict_to_json(a, decide_form_existence(a, parse_mode(mode))));
  }, py::arg("algebra"), py::arg("mode") = "graded-symmetric");

  m.def("check_certificate", [](const GradedAlgebra& a, const std::string& cert) {
    const auto c = check_certificate(a, parse_json_text(cert));
    return text(Json{{"failures", c.failures}, {"hash_matches", c.hash_matches}, {"passed", c.passed}});
  });

  m.def("invariants", [](const GradedAlgebra& a) {
    Json sup = Json::array();
    for (auto g : support(a)) sup.push_back(a.group().label(g));
    return text(Json{{"center", subspace_to_json(center(a))},
                     {"commutators", subspace_to_json(commutator_subspace(a))},
                     {"division", division_to_json(is_graded_division(a))},
                     {"graded_commutators", subspace_to_json(graded_commutator_space(a))},
                     {"support", sup}});
  });

  m.def("center_algebra", [](const GradedAlgebra& a) { return subspace_algebra(a, center(a)); });
  m.def("trivial_extension", &trivial_extension);
  m.def("direct_product", &direct_product);
  m.def("tensor_product", &tensor_product);
  m.def("ungrade", &ungrade);
  m.def("scalar_extension", &scalar_extension);

  m.def("suite_names", &suite_names);
  m.def("suite_instance_names", &suite_instance_names);
  m.def("run_suite", [](const std::string& only, const std::string& corrupt) {
    SuiteOptions o;
    o.only = only;
    o.corrupt = corrupt;
    return text(suite_to_json(run_suite(o)));
  }, py::arg("only") = "", py::arg("corrupt") = "");

  m.def("hunt", [](std::uint32_t p, const std::vector<std::uint32_t>& ext_degrees,
                   const std::vector<std::string>& groups, const std::vector<std::uint32_t>& alpha,
                   std::uint64_t budget, unsigned workers) {
    const auto params = hunt_params(p, ext_degrees, groups, alpha, budget, workers);
    HuntReport r;
    {
      py::gil_scoped_release release;
      r = hunt_counterexample(params);
    }
    return text(hunt_checkpoint(params, r));
  }, py::arg("p"), py::arg("ext_degrees"), py::arg("groups"), py::arg("alpha"), py::arg("budget"),
     py::arg("workers"));

  m.def("resume_hunt", [](const std::string& checkpoint, std::uint64_t budget, unsigned workers) {
    const Json ck = parse_json_text(checkpoint);
    HuntReport r;
    {
      py::gil_scoped_release release;
      r = resume_hunt(ck, budget, workers);
    }
    return text(hunt_report_to_json(r));
  });

  m.attr("HUNT_REGRESSION_INSTANCES") = kHuntRegressionInstances;
}
