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

#include "porient/report.h"

namespace porient {

namespace {

nlohmann::json GapArray(const std::vector<std::optional<Rational>>& gaps) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& g : gaps) out.push_back(g ? nlohmann::json(ToString(*g)) : nlohmann::json());
  return out;
}

}  // namespace

nlohmann::json RoundReportJson(const Graph& g, const RoundReport& rep, bool verbose) {
  const RoundSpec& s = rep.spec;
  nlohmann::json j = {
      {"label", s.label},
      {"j", s.j},
      {"focus", s.focus_part},
      {"protected", s.protected_parts},
      {"i", s.i()},
      {"mode", RoundModeName(s.mode)},
      {"delta_bound", ToString(rep.delta_bound)},
      {"old_part_gaps", GapArray(rep.old_part_gaps)},
      {"new_part_gaps", GapArray(rep.new_part_gaps)},
      {"candidates", rep.candidates},
      {"seed", rep.seed},
      {"selected", rep.selected},
      {"hall_edges", rep.hall_edges},
      {"fractional_edges", rep.fractional_edges},
      {"selector_iterations", rep.selector_iterations},
      {"strongify", {{"path_shifts", rep.strongify.path_shifts},
                     {"cycle_shifts", rep.strongify.cycle_shifts}}},
  };
  j["corollary_bound"] = rep.corollary_bound ? nlohmann::json(ToString(*rep.corollary_bound))
                                             : nlohmann::json();
  nlohmann::json claims = nlohmann::json::array();
  for (const ClaimCheck& c : rep.claims) {
    claims.push_back({{"claim", c.claim},
                      {"value", ToString(c.value)},
                      {"cap", ToString(c.cap)},
                      {"pass", c.pass}});
  }
  j["claims"] = claims;
  int failed = 0;
  nlohmann::json checks = nlohmann::json::array();
  for (const PreconditionCheck& c : rep.precondition_checks) {
    failed += !c.pass;
    if (!verbose && c.pass) continue;
    checks.push_back({{"vertex", c.vertex >= 0 ? nlohmann::json(g.label(c.vertex)) : nlohmann::json()},
                      {"inequality", c.inequality},
                      {"pass", c.pass}});
  }
  j["precondition_checks_total"] = rep.precondition_checks.size();
  j["precondition_checks_failed"] = failed;
  j["precondition_checks"] = checks;
  return j;
}

nlohmann::json VerificationJson(const Graph& g, const VerificationReport& rep) {
  nlohmann::json bad = nlohmann::json::array();
  for (const Edge& e : rep.violations) bad.push_back({g.label(e.u), g.label(e.v)});
  return {{"is_proper", rep.is_proper},
          {"max_outdegree", rep.max_outdegree},
          {"bound", rep.bound},
          {"bound_respected", rep.bound_respected},
          {"violations", bad}};
}

nlohmann::json PipelineJson(const Graph& g, const PipelineResult& res) {
  const ScheduleParams& s = res.schedule;
  nlohmann::json rounds = nlohmann::json::array();
  for (const RoundReport& r : res.round_log) rounds.push_back(RoundReportJson(g, r));
  return {{"schema", kReportSchema},
          {"vertices", g.num_vertices()},
          {"edges", g.num_edges()},
          {"schedule",
           {{"family", FamilyTagName(s.family)}, {"r", s.r}, {"k", s.k}, {"l", s.l}, {"t", s.t}}},
          {"achieved_max", res.achieved_max},
          {"guaranteed_bound", res.guaranteed_bound},
          {"initial_part_gaps", GapArray(res.initial_part_gaps)},
          {"rounds", rounds},
          {"audit_checks", res.audit_checks},
          {"audit_violations", res.audit_violations},
          {"verification", VerificationJson(g, res.verification)}};
}

}  // namespace porient
