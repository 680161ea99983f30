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

#include "porient/cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <functional>
#include <fstream>
#include <optional>
#include <sstream>

#include "porient/base_orientation.h"
#include "porient/error.h"
#include "porient/generators.h"
#include "porient/graph.h"
#include "porient/oracle.h"
#include "porient/report.h"
#include "porient/schedules.h"

namespace porient {

namespace {

namespace fs = std::filesystem;

struct OrientConfig {
  std::string graph;
  std::string partition;
  std::string schedule = "auto";
  int k = -1;
  std::string output;
  std::string report;
  std::string log;
  bool verbose = false;
  bool exact_selection = false;
  std::string batch;
};

Graph LoadGraph(const std::string& path, std::ostream& err) {
  ParsedGraph pg = ParseGraph(ReadFile(path));
  if (pg.duplicate_edges > 0) {
    err << "warning: " << path << ": ignored " << pg.duplicate_edges << " duplicate edge(s)\n";
  }
  return std::move(pg.graph);
}

void OrientOne(const OrientConfig& cfg, const std::string& graph_path,
               const std::string& out_path, const std::string& report_path,
               const std::string& log_path, std::ostream& out, std::ostream& err) {
  const Graph g = LoadGraph(graph_path, err);
  std::optional<VertexPartition> part;
  if (!cfg.partition.empty()) part = ParsePartition(g, ReadFile(cfg.partition));
  ScheduleParams sched = ScheduleByName(g, cfg.schedule, cfg.k, &part);
  if (part->r > sched.r) {
    throw PreconditionError("partition has " + std::to_string(part->r) + " classes, schedule " +
                            FamilyTagName(sched.family) + " needs at most " +
                            std::to_string(sched.r));
  }
  std::ofstream log_file;
  PipelineOptions opts;
  opts.exact_selection = cfg.exact_selection;
  opts.verbose_log = cfg.verbose;
  if (!log_path.empty()) {
    log_file.open(log_path);
    if (!log_file) throw Error("cannot write '" + log_path + "'");
    opts.log = &log_file;
  }
  PipelineResult res = RunPipeline(g, *part, sched, opts);
  const std::string text = SerializeOrientation(g, res.orientation);
  const std::string report = PipelineJson(g, res).dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    WriteFile(out_path, text);
  }
  if (!report_path.empty()) {
    WriteFile(report_path, report);
  } else if (!out_path.empty()) {
    out << report;
  }
}

int ExitFor(const std::exception& e) {
  if (dynamic_cast<const BudgetExceeded*>(&e)) return kExitBudget;
  if (dynamic_cast<const PreconditionError*>(&e)) return kExitPrecondition;
  if (dynamic_cast<const InvariantError*>(&e)) return kExitInternal;
  return kExitFormat;
}

int Guard(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return ExitFor(e);
  }
}

int CmdOrient(const OrientConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.batch.empty()) {
    return Guard(err, [&] {
      OrientOne(cfg, cfg.graph, cfg.output, cfg.report, cfg.log, out, err);
      return kExitOk;
    });
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(cfg.batch)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  const fs::path out_dir = cfg.output.empty() ? fs::path(cfg.batch) : fs::path(cfg.output);
  fs::create_directories(out_dir);
  int worst = kExitOk;
  for (const fs::path& f : files) {
    const std::string stem = f.stem().string();
    int code = Guard(err, [&] {
      OrientOne(cfg, f.string(), (out_dir / (stem + ".orient")).string(),
                (out_dir / (stem + ".report.json")).string(), "", out, err);
      return kExitOk;
    });
    out << f.filename().string() << ' ' << code << '\n';
    worst = std::max(worst, code);
  }
  return worst;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proper orientations with bounded maximum outdegree"};
  app.name(args.empty() ? std::string("porient") : fs::path(args[0]).filename().string());
  app.require_subcommand(1);

  OrientConfig ocfg;
  CLI::App* orient = app.add_subcommand("orient", "Compute a proper orientation");
  orient->add_option("graph", ocfg.graph, "Edge-list file");
  orient->add_option("--partition", ocfg.partition, "Partition file (vertex class)");
  orient->add_option("--schedule", ocfg.schedule, "Round schedule")
      ->check(CLI::IsMember({"auto", "bipartite", "rpartite", "planar4", "colorable3",
                             "outerplanar"}));
  orient->add_option("--k", ocfg.k, "Base orientation outdegree k");
  orient->add_option("-o,--output", ocfg.output, "Orientation output (directory with --batch)");
  orient->add_option("--report", ocfg.report, "JSON report output");
  orient->add_option("--log", ocfg.log, "NDJSON round log");
  orient->add_flag("-v,--verbose", ocfg.verbose, "Log every precondition check");
  orient->add_flag("--exact-selection", ocfg.exact_selection,
                   "Exact independent-set selection (small rounds only)");
  orient->add_option("--batch", ocfg.batch, "Orient every .txt graph in a directory");

  std::string vgraph, vorient;
  std::optional<int> vbound;
  CLI::App* verify = app.add_subcommand("verify", "Check a proper orientation");
  verify->add_option("graph", vgraph)->required();
  verify->add_option("orientation", vorient)->required();
  verify->add_option("--bound", vbound, "Maximum allowed outdegree");

  std::string mgraph;
  bool min_k = false;
  CLI::App* mad = app.add_subcommand("mad", "Maximum average degree");
  mad->add_option("graph", mgraph)->required();
  mad->add_flag("--min-k", min_k, "Print the least k admitting a k-orientation");

  std::string egraph;
  OracleBudget budget;
  int time_ms = 10000;
  CLI::App* exact = app.add_subcommand("exact", "Exact proper chromatic number");
  exact->add_option("graph", egraph)->required();
  exact->add_option("--max-edges", budget.max_edges, "Edge budget for backtracking");
  exact->add_option("--max-vertices", budget.max_vertices, "Vertex budget");
  exact->add_option("--time-ms", time_ms, "Time cap in milliseconds");

  std::string family, gen_out, gen_part;
  FamilyParams fp;
  int gk = 1;
  bool g1_only = false;
  CLI::App* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("family", family, "tightness or a family name")->required();
  gen->add_option("--k", gk, "Tightness parameter");
  gen->add_flag("--g1", g1_only, "Tightness: single gadget G1 only");
  gen->add_option("--n", fp.n);
  gen->add_option("--m", fp.m);
  gen->add_option("--a", fp.a);
  gen->add_option("--b", fp.b);
  gen->add_option("--rows", fp.rows);
  gen->add_option("--cols", fp.cols);
  gen->add_option("--seed", fp.seed);
  gen->add_option("-o,--output", gen_out, "Edge-list output (default stdout)");
  gen->add_option("--partition-out", gen_part, "Partition output");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFormat;
  }

  if (*orient) {
    if (ocfg.graph.empty() == ocfg.batch.empty()) {
      err << "error: give either a graph file or --batch\n";
      return kExitFormat;
    }
    return CmdOrient(ocfg, out, err);
  }
  if (*verify) {
    return Guard(err, [&] {
      const Graph g = LoadGraph(vgraph, err);
      const IntegralOrientation o = ParseOrientation(g, ReadFile(vorient));
      VerificationReport rep = VerifyProperOrientation(g, o, vbound.value_or(g.num_edges()));
      nlohmann::json j = VerificationJson(g, rep);
      if (!vbound) j.erase("bound"), j.erase("bound_respected");
      out << j.dump(2) << '\n';
      return rep.is_proper && (!vbound || rep.bound_respected) ? kExitOk : kExitPrecondition;
    });
  }
  if (*mad) {
    return Guard(err, [&] {
      const Graph g = LoadGraph(mgraph, err);
      if (min_k) {
        out << MinOrientationK(g) << '\n';
      } else {
        out << ToString(ExactMad(g)) << '\n';
      }
      return kExitOk;
    });
  }
  if (*exact) {
    return Guard(err, [&] {
      const Graph g = LoadGraph(egraph, err);
      budget.time_cap = std::chrono::milliseconds(time_ms);
      const bool tree = g.num_vertices() > 0 && g.num_edges() == g.num_vertices() - 1 &&
                        IsConnected(g);
      out << (tree ? ExactProperChromaticTree(g) : ExactProperChromatic(g, budget)) << '\n';
      return kExitOk;
    });
  }
  return Guard(err, [&] {
    GeneratedGraph gg;
    if (family == "tightness") {
      gg = g1_only ? GenTightnessG1(gk) : GenTightnessG(gk);
    } else {
      gg = GenFamily(family, fp);
    }
    const std::string text = SerializeGraph(gg.graph);
    if (gen_out.empty()) {
      out << text;
    } else {
      WriteFile(gen_out, text);
    }
    if (!gen_part.empty()) {
      if (!gg.partition) throw PreconditionError("family '" + family + "' has no partition");
      WriteFile(gen_part, SerializePartition(gg.graph, *gg.partition));
    }
    return kExitOk;
  });
}

}  // namespace porient
