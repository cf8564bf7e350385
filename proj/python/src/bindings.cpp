#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "finloc/builders.hpp"
#include "finloc/cli.hpp"
#include "finloc/demorgan.hpp"
#include "finloc/dot.hpp"
#include "finloc/errors.hpp"
#include "finloc/frame_spec.hpp"
#include "finloc/heyting_laws.hpp"
#include "finloc/report.hpp"
#include "finloc/sublocale.hpp"

#include <sstream>

namespace py = pybind11;
using namespace finloc;

namespace {

Frame topology_frame(std::vector<std::string> points,
                     std::vector<std::vector<std::string>> opens) {
  return from_topology(TopologySpec{std::move(points), std::move(opens)});
}

Frame standard(const std::string &family, std::size_t n) {
  if (family == "chain")
    return standard_frame(StandardFamily::chain, n);
  if (family == "boolean")
    return standard_frame(StandardFamily::boolean, n);
  throw InputError("family must be \"chain\" or \"boolean\"");
}

std::vector<std::vector<std::string>> sublocales(const Frame &f) {
  std::vector<std::vector<std::string>> out;
  for (const auto &s : enumerate_sublocales(f))
    out.push_back(s.labels());
  return out;
}

std::vector<std::pair<std::string, std::string>> law_failures(const Frame &f,
                                                              std::uint64_t seed) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto &l : verify_heyting_laws(f, seed).failures())
    out.emplace_back(l.law, l.detail);
  return out;
}

std::string analyze(const Frame &f, const std::string &name, bool verify,
                    bool oracle, std::uint64_t seed) {
  AnalysisOptions o;
  o.verify = verify;
  o.oracle = oracle;
  o.seed = seed;
  return report_to_json(analyze_frame(f, name, o));
}

py::tuple cli(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

} // namespace

PYBIND11_MODULE(_finloc, m) {
  m.doc() = "Finite frames, sublocales, Booleanization and DeMorganization";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<IntegrityError>(m, "IntegrityError", PyExc_RuntimeError);

  auto id = [](const Frame &f, const std::string &label) { return f.element(label); };

  py::class_<Frame>(m, "Frame")
      .def_static("from_topology", &topology_frame, py::arg("points"), py::arg("opens"))
      .def_static("from_spec", [](const std::string &text) {
        return build_frame(parse_frame_spec(text));
      }, py::arg("json"))
      .def_static("standard", &standard, py::arg("family"), py::arg("n"))
      .def_static("product", [](const Frame &a, const Frame &b) {
        return product_frame(a, b);
      })
      .def("__len__", &Frame::size)
      .def_property_readonly("labels", &Frame::labels)
      .def_property_readonly("bottom", [](const Frame &f) { return f.label(f.bottom()); })
      .def_property_readonly("top", [](const Frame &f) { return f.label(f.top()); })
      .def("leq", [=](const Frame &f, const std::string &a, const std::string &b) {
        return f.leq(id(f, a), id(f, b));
      })
      .def("meet", [=](const Frame &f, const std::string &a, const std::string &b) {
        return f.label(f.meet(id(f, a), id(f, b)));
      })
      .def("join", [=](const Frame &f, const std::string &a, const std::string &b) {
        return f.label(f.join(id(f, a), id(f, b)));
      })
      .def("implies", [=](const Frame &f, const std::string &a, const std::string &b) {
        return f.label(f.heyting(id(f, a), id(f, b)));
      })
      .def("pseudocomplement", [=](const Frame &f, const std::string &a) {
        return f.label(f.pseudocomplement(id(f, a)));
      })
      .def("__repr__", [](const Frame &f) {
        return "<finloc.Frame with " + std::to_string(f.size()) + " elements>";
      });

  m.def("booleanization", [](const Frame &f) { return booleanization(f).labels(); });
  m.def("demorganization", [](const Frame &f) { return demorganization(f).labels(); });
  m.def("is_extremally_disconnected",
        [](const Frame &f) { return is_extremally_disconnected(f); });
  m.def("is_boolean", [](const Frame &f) { return is_boolean(f); });
  m.def("sublocales", &sublocales, "All sublocales as member label lists");
  m.def("heyting_law_failures", &law_failures, py::arg("frame"), py::arg("seed") = 0);
  m.def("_analyze", &analyze, py::arg("frame"), py::arg("name"), py::arg("verify"),
        py::arg("oracle"), py::arg("seed"));
  m.def("frame_to_dot", &frame_to_dot);
  m.def("sublocales_to_dot", [](const Frame &f) { return sublocales_to_dot(f); });
  m.def("topology_count", [](std::size_t n) {
    return for_each_topology(n, [](const TopologySpec &) {});
  });
  m.def("run_cli", &cli, "Run the command-line tool; returns (exit code, stdout, stderr)");
}
