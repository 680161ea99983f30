// Copyright 2026 The porient Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "porient/base_orientation.h"
#include "porient/error.h"
#include "porient/generators.h"
#include "porient/graph.h"
#include "porient/oracle.h"
#include "porient/report.h"
#include "porient/schedules.h"

namespace py = pybind11;

namespace porient {
namespace {

using EdgePairs = std::vector<std::pair<int, int>>;

Graph ToGraph(int n, const EdgePairs& edges) { return Graph::FromEdges(n, edges); }

EdgePairs ToPairs(const Graph& g) {
  EdgePairs out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

std::optional<VertexPartition> ToPartition(const Graph& g,
                                           const std::optional<std::vector<int>>& classes) {
  if (!classes) return std::nullopt;
  VertexPartition p;
  p.class_of = *classes;
  for (int c : p.class_of) p.r = std::max(p.r, c);
  p.Validate(g);
  return p;
}

std::pair<std::string, std::string> AsFraction(const Rational& q) {
  return {q.get_num().get_str(), q.get_den().get_str()};
}

py::dict Orient(int n, const EdgePairs& edges, const std::optional<std::vector<int>>& classes,
                const std::string& schedule, int k) {
  const Graph g = ToGraph(n, edges);
  std::optional<VertexPartition> part = ToPartition(g, classes);
  ScheduleParams s = ScheduleByName(g, schedule, k, &part);
  PipelineResult res = RunPipeline(g, *part, s);
  py::dict d;
  d["arcs"] = res.orientation.Arcs(g);
  d["outdegrees"] = res.orientation.Outdegrees(g);
  d["max_outdegree"] = res.achieved_max;
  d["bound"] = res.guaranteed_bound;
  d["schedule"] = std::string(FamilyTagName(s.family));
  d["partition"] = part->class_of;
  d["report"] = PipelineJson(g, res).dump();
  return d;
}

py::dict Verify(int n, const EdgePairs& edges, const EdgePairs& arcs, std::optional<int> bound) {
  const Graph g = ToGraph(n, edges);
  IntegralOrientation o = IntegralOrientation::FromArcs(g, arcs);
  VerificationReport rep = VerifyProperOrientation(g, o, bound.value_or(g.num_edges()));
  py::dict d;
  d["is_proper"] = rep.is_proper;
  d["max_outdegree"] = rep.max_outdegree;
  d["bound_respected"] = rep.bound_respected;
  EdgePairs bad;
  for (const Edge& e : rep.violations) bad.emplace_back(e.u, e.v);
  d["violations"] = bad;
  return d;
}

py::tuple Generated(const GeneratedGraph& gg) {
  py::object part = py::none();
  if (gg.partition) part = py::cast(gg.partition->class_of);
  return py::make_tuple(gg.graph.num_vertices(), ToPairs(gg.graph), part);
}

}  // namespace
}  // namespace porient

PYBIND11_MODULE(_core, m) {
  using namespace porient;
  m.doc() = "Proper orientations with bounded maximum outdegree";

  static py::exception<Error> base_exc(m, "PorientError", PyExc_RuntimeError);
  static py::exception<ParseError> parse_exc(m, "ParseError", base_exc.ptr());
  static py::exception<PreconditionError> pre_exc(m, "PreconditionError", base_exc.ptr());
  static py::exception<InvariantError> inv_exc(m, "InvariantError", base_exc.ptr());
  static py::exception<BudgetExceeded> budget_exc(m, "BudgetExceeded", base_exc.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_exc, e.what());
    } catch (const PreconditionError& e) {
      py::set_error(pre_exc, e.what());
    } catch (const InvariantError& e) {
      py::set_error(inv_exc, e.what());
    } catch (const BudgetExceeded& e) {
      py::set_error(budget_exc, e.what());
    } catch (const Error& e) {
      py::set_error(base_exc, e.what());
    }
  });

  m.def(
      "parse_graph",
      [](const std::string& text) {
        ParsedGraph pg = ParseGraph(text);
        return py::make_tuple(pg.graph.num_vertices(), ToPairs(pg.graph),
                              std::vector<std::string>(pg.graph.labels().begin(),
                                                       pg.graph.labels().end()));
      },
      py::arg("text"), "Parse an edge list; returns (n, edges, labels).");
  m.def("orient", &Orient, py::arg("n"), py::arg("edges"), py::arg("partition") = py::none(),
        py::arg("schedule") = "auto", py::arg("k") = -1,
        "Run the pipeline; returns a dict with arcs, outdegrees and the JSON report.");
  m.def("verify", &Verify, py::arg("n"), py::arg("edges"), py::arg("arcs"),
        py::arg("bound") = py::none());
  m.def(
      "min_orientation_k",
      [](int n, const EdgePairs& edges) { return MinOrientationK(ToGraph(n, edges)); },
      py::arg("n"), py::arg("edges"));
  m.def(
      "exact_mad",
      [](int n, const EdgePairs& edges) { return AsFraction(ExactMad(ToGraph(n, edges))); },
      py::arg("n"), py::arg("edges"), "Maximum average degree as (numerator, denominator).");
  m.def(
      "exact_proper_chromatic",
      [](int n, const EdgePairs& edges, int max_edges, int max_vertices, int time_ms) {
        const Graph g = ToGraph(n, edges);
        if (n > 0 && g.num_edges() == n - 1 && IsConnected(g)) return ExactProperChromaticTree(g);
        OracleBudget b;
        b.max_edges = max_edges;
        b.max_vertices = max_vertices;
        b.time_cap = std::chrono::milliseconds(time_ms);
        py::gil_scoped_release release;
        return ExactProperChromatic(g, b);
      },
      py::arg("n"), py::arg("edges"), py::arg("max_edges") = 20, py::arg("max_vertices") = 20,
      py::arg("time_ms") = 10000);
  m.def(
      "gen_family",
      [](const std::string& name, int n, int m, int a, int b, int rows, int cols,
         uint64_t seed) {
        FamilyParams fp{n, m, a, b, rows, cols, seed};
        return Generated(GenFamily(name, fp));
      },
      py::arg("name"), py::arg("n") = 0, py::arg("m") = 0, py::arg("a") = 0, py::arg("b") = 0,
      py::arg("rows") = 0, py::arg("cols") = 0, py::arg("seed") = 0,
      "Returns (n, edges, partition or None).");
  m.def(
      "gen_tightness",
      [](int k, bool g1_only) { return Generated(g1_only ? GenTightnessG1(k) : GenTightnessG(k)); },
      py::arg("k"), py::arg("g1_only") = false);
  m.def("family_names", &FamilyNames);
}
