#include <memory>
#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcn/classify.hpp"
#include "qcn/error.hpp"
#include "qcn/pipeline.hpp"
#include "qcn/rate_region.hpp"
#include "qcn/report.hpp"
#include "qcn/scheduling.hpp"
#include "qcn/simulation.hpp"

namespace py = pybind11;
using namespace qcn;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(r));
}

py::list fractions(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& x : v) out.append(fraction(x));
  return out;
}

std::vector<Rational> rationals(const py::sequence& seq) {
  std::vector<Rational> out;
  for (auto item : seq) out.push_back(parse_rational(py::str(item).cast<std::string>()));
  return out;
}

AnalysisOptions options(std::optional<std::string> pattern, const std::string& io, bool coded, bool dnt) {
  AnalysisOptions o;
  if (pattern) o.pattern = parse_pattern(*pattern);
  o.io = parse_io_regime(io);
  o.coded = coded;
  o.do_not_transmit = dnt;
  return o;
}

struct PyRegion {
  std::shared_ptr<const Analysis> analysis;
  std::shared_ptr<const RateRegion> region;
};

struct PyAnalysis {
  std::shared_ptr<const Analysis> analysis;
  std::shared_ptr<const RateRegion> region;

  const RateRegion& get_region() {
    if (!region) region = std::make_shared<const RateRegion>(analysis->graph);
    return *region;
  }
};

PyAnalysis make_analysis(const SystemDescription& desc, const AnalysisOptions& o) {
  return PyAnalysis{std::make_shared<const Analysis>(analyze(desc, o)), nullptr};
}

py::dict report_dict(const ConflictGraph& g, const ClassificationReport& r) {
  auto labels = [&](auto const& vs) {
    py::list out;
    for (int v : vs) out.append(g.label(v));
    return out;
  };
  py::dict d;
  d["claw_free"] = r.claw_free;
  d["claw"] = r.claw ? py::object(labels(*r.claw)) : py::none();
  d["quasi_line"] = r.quasi_line;
  d["perfect"] = std::string(to_string(r.perfect));
  d["odd_hole"] = labels(r.odd_hole);
  d["odd_antihole"] = r.odd_antihole;
  d["net"] = r.net ? py::object(labels(*r.net)) : py::none();
  d["stability_number"] = r.stability_number;
  d["pairwise_exact"] = r.pairwise_exact;
  return d;
}

}  // namespace

PYBIND11_MODULE(qcnpy, m) {
  m.doc() = "Queued cross-bar network models of replicated and coded storage";
  py::register_exception<Error>(m, "QcnError", PyExc_ValueError);

  py::class_<PyRegion>(m, "RateRegion")
      .def_property_readonly("dim", [](const PyRegion& r) { return r.region->dim(); })
      .def_property_readonly("flows",
                             [](const PyRegion& r) {
                               std::vector<std::string> names;
                               for (int f : r.region->flows()) names.push_back(r.region->flow_name(f));
                               return names;
                             })
      .def_property_readonly("num_stable_sets", [](const PyRegion& r) { return r.region->family().size(); })
      .def_property_readonly("stable_sets", [](const PyRegion& r) { return r.region->family().sets; })
      .def_property_readonly("vertices", [](const PyRegion& r) { return r.region->polytope().vertices(); })
      .def_property_readonly("volume", [](const PyRegion& r) { return fraction(r.region->volume()); })
      .def("incidence",
           [](const PyRegion& r, int chunk, int user) { return r.region->incidence().aggregate(chunk - 1, user - 1); },
           py::arg("chunk"), py::arg("user"), "C^{i,j} over the stable-set family (1-based chunk and user).")
      .def("contains", [](const PyRegion& r, const py::sequence& rho) { return r.region->contains(rationals(rho)); })
      .def("decompose",
           [](const PyRegion& r, const py::sequence& rho) {
             auto d = decompose_rate(*r.region, rationals(rho));
             py::dict out;
             out["phi"] = fractions(d.phi);
             out["achieved"] = fractions(d.achieved);
             out["margin"] = fraction(d.margin);
             return out;
           })
      .def("schedule",
           [](const PyRegion& r, const py::sequence& rho) {
             auto f = build_frame_schedule(decompose_rate(*r.region, rationals(rho)));
             py::dict out;
             out["frame"] = f.frame;
             out["slots"] = f.slots;
             return out;
           })
      .def("export", [](const PyRegion& r) { return export_region(*r.region); });

  py::class_<PyAnalysis>(m, "Analysis")
      .def_static(
          "from_file",
          [](const std::string& path, std::optional<std::string> pattern, const std::string& io, bool coded,
             bool dnt) { return make_analysis(load_system_description(path), options(pattern, io, coded, dnt)); },
          py::arg("path"), py::arg("pattern") = py::none(), py::arg("io") = "finite", py::arg("coded") = false,
          py::arg("do_not_transmit") = false)
      .def_static(
          "from_text",
          [](const std::string& text, std::optional<std::string> pattern, const std::string& io, bool coded,
             bool dnt) { return make_analysis(parse_system_description(text), options(pattern, io, coded, dnt)); },
          py::arg("text"), py::arg("pattern") = py::none(), py::arg("io") = "finite", py::arg("coded") = false,
          py::arg("do_not_transmit") = false)
      .def_property_readonly("pattern", [](const PyAnalysis& a) { return std::string(to_string(a.analysis->pattern)); })
      .def_property_readonly("num_vertices", [](const PyAnalysis& a) { return a.analysis->graph.size(); })
      .def_property_readonly("labels",
                             [](const PyAnalysis& a) {
                               std::vector<std::string> out;
                               for (int v = 0; v < a.analysis->graph.size(); ++v) out.push_back(a.analysis->graph.label(v));
                               return out;
                             })
      .def_property_readonly("edges", [](const PyAnalysis& a) { return a.analysis->graph.graph().edges(); })
      .def("adjacency", [](const PyAnalysis& a) { return export_adjacency(a.analysis->graph); })
      .def("classify",
           [](const PyAnalysis& a) { return report_dict(a.analysis->graph, classify(a.analysis->graph)); })
      .def("region",
           [](PyAnalysis& a) {
             a.get_region();
             return PyRegion{a.analysis, a.region};
           })
      .def(
          "simulate",
          [](PyAnalysis& a, const py::sequence& rates, const std::string& policy, std::int64_t horizon,
             std::uint64_t seed) {
            const auto& region = a.get_region();
            auto rho = rationals(rates);
            Policy p = policy == "frame"    ? Policy::frame(build_frame_schedule(decompose_rate(region, rho)))
                       : policy == "online" ? Policy::online()
                                            : throw Error("unknown policy '" + policy + "'");
            ArrivalProcess arrivals(region.to_all_flows(region.to_active(rho)), seed);
            auto trace = simulate(a.analysis->graph, region.family(), p, arrivals, horizon);
            auto v = stability_verdict(trace);
            py::dict out;
            out["stable"] = v.stable;
            out["slope"] = v.slope;
            out["max_backlog"] = v.max_backlog;
            out["final_backlog"] = trace.backlog.empty() ? 0 : trace.backlog.back();
            return out;
          },
          py::arg("rates"), py::arg("policy") = "online", py::arg("horizon") = 100000, py::arg("seed") = 1);

  m.def(
      "compare",
      [](const std::string& path) {
        auto desc = load_system_description(path);
        auto base = build_system(desc);
        auto table = compare_volumes(base, coded_layout_for(desc, base));
        py::list rows;
        for (const auto& r : table.rows) {
          py::dict d;
          d["pattern"] = r.label;
          d["rx"] = r.rx;
          d["uncoded"] = fraction(r.uncoded);
          d["coded"] = fraction(r.coded);
          d["pct_delta"] = r.delta_infinite ? py::object(py::float_(INFINITY)) : fraction(r.pct_delta);
          rows.append(d);
        }
        py::dict out;
        out["rows"] = rows;
        out["average"] = table.average_infinite ? py::object(py::float_(INFINITY)) : fraction(table.average);
        out["text"] = format_compare(table);
        return out;
      },
      py::arg("path"), "Uncoded versus coded rate-region volumes for the seven pattern rows.");
}
