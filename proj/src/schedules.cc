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

#include "porient/schedules.h"

#include <variant>

#include "porient/base_orientation.h"
#include "porient/error.h"
#include "porient/pfo.h"
#include "porient/report.h"

namespace porient {

namespace {

Rational InversePower(int t, int e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(t), static_cast<unsigned long>(e));
  Rational q(mpz_class(1), p);
  q.canonicalize();
  return q;
}

RoundSpec Round(int j, int focus, std::vector<int> prot, RoundMode mode, std::string label) {
  RoundSpec s;
  s.j = j;
  s.focus_part = focus;
  s.protected_parts = std::move(prot);
  s.mode = mode;
  s.label = std::move(label);
  return s;
}

void Log(const PipelineOptions& options, const nlohmann::json& record) {
  if (options.log) *options.log << record.dump() << '\n';
}

}  // namespace

const char* FamilyTagName(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::kBipartite: return "bipartite";
    case FamilyTag::kRpartite: return "rpartite";
    case FamilyTag::kPlanar4: return "planar4";
    case FamilyTag::kColorable3: return "colorable3";
    case FamilyTag::kOuterplanar: return "outerplanar";
  }
  return "?";
}

std::optional<FamilyTag> ParseFamilyTag(std::string_view name) {
  for (FamilyTag t : {FamilyTag::kBipartite, FamilyTag::kRpartite, FamilyTag::kPlanar4,
                      FamilyTag::kColorable3, FamilyTag::kOuterplanar}) {
    if (name == FamilyTagName(t)) return t;
  }
  return std::nullopt;
}

int MinimalT(int r) {
  if (r < 2) throw PreconditionError("r-partite schedule needs r >= 2");
  for (int t = 1;; ++t) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), t, t + 1);
    if (p >= r - 1) return t;
  }
}

ScheduleParams ScheduleBipartite(int k) {
  if (k < 1) throw PreconditionError("bipartite schedule needs k >= 1");
  ScheduleParams s;
  s.family = FamilyTag::kBipartite;
  s.r = 2;
  s.k = k;
  s.l = k + 3;
  s.rounds.push_back(Round(k + 1, 1, {2}, RoundMode::kCorollary, "close"));
  return s;
}

ScheduleParams ScheduleRpartite(int r, int k) {
  if (k < 0) throw PreconditionError("k must be nonnegative");
  ScheduleParams s;
  s.family = FamilyTag::kRpartite;
  s.r = r;
  s.k = k;
  s.t = MinimalT(r);
  const int t = s.t;
  s.l = k + 3 * r * (t + 1);
  for (int m = 0; m < r * t; ++m) {
    RoundSpec rs = Round(s.l - r - m, m % r + 1, {}, RoundMode::kCorollary,
                         "phase1." + std::to_string(m));
    rs.delta_cap = InversePower(t, (m + 1 + r - 1) / r);
    s.rounds.push_back(std::move(rs));
  }
  for (int i = 0; i < r; ++i) {
    std::vector<int> prot;
    for (int p = 1; p <= i; ++p) prot.push_back(p);
    RoundSpec rs = Round(s.l - r * (t + 1) - i, i + 1, std::move(prot), RoundMode::kCorollary,
                         "phase2." + std::to_string(i));
    rs.delta_cap = InversePower(t, t + 1);
    s.rounds.push_back(std::move(rs));
  }
  if (s.LevelsConsumed() != r * (t + 2) || s.LevelsConsumed() > s.l - k) {
    throw InvariantError("r-partite schedule consumes too many levels");
  }
  return s;
}

ScheduleParams SchedulePlanar4(int k) {
  if (k != 3) throw PreconditionError("planar schedule is defined for k = 3 only");
  ScheduleParams s;
  s.family = FamilyTag::kPlanar4;
  s.r = 4;
  s.k = 3;
  s.l = 14;
  RoundSpec r1 = Round(10, 1, {4}, RoundMode::kLemma, "step1");
  r1.delta_cap = MakeRational(3, 7);
  r1.part_gap_caps = {{2, MakeRational(17, 7)}, {3, MakeRational(10, 7)}};
  RoundSpec r2 = Round(9, 2, {1, 4}, RoundMode::kLemma, "step2");
  r2.delta_cap = MakeRational(17, 21);
  r2.part_gap_caps = {{3, MakeRational(1) + MakeRational(3, 7) + MakeRational(17, 21)}};
  RoundSpec r3 = Round(8, 3, {1, 2}, RoundMode::kLemma, "step3");
  r3.delta_cap = MakeRational(1);
  r3.part_gap_caps = {{4, MakeRational(1)}};
  RoundSpec r4 = Round(7, 4, {1, 2, 3}, RoundMode::kLemma, "step4");
  s.rounds = {r1, r2, r3, r4};
  return s;
}

ScheduleParams ScheduleColorable3(int k) {
  if (k != 2 && k != 3) throw PreconditionError("3-colorable schedule needs k in {2, 3}");
  ScheduleParams s;
  s.family = FamilyTag::kColorable3;
  s.r = 3;
  s.k = k;
  s.l = k + 8;
  RoundSpec r1 = Round(s.l - 3, 1, {3}, RoundMode::kLemma, "step1");
  r1.delta_cap = MakeRational(2, 5);
  r1.part_gap_caps = {{2, MakeRational(7, 5)}};
  RoundSpec r2 = Round(s.l - 4, 2, {1, 3}, RoundMode::kLemma, "step2");
  s.rounds = {r1, r2};
  return s;
}

ScheduleParams ScheduleOuterplanar() {
  ScheduleParams s = ScheduleColorable3(2);
  s.family = FamilyTag::kOuterplanar;
  return s;
}

ScheduleParams AutoSchedule(const Graph& g, std::optional<VertexPartition>* part) {
  if (!*part) {
    if (auto two = TwoColoring(g)) {
      *part = *two;
    } else {
      *part = GreedyPartition(g);
    }
  }
  const int k = MinOrientationK(g);
  if ((*part)->r <= 2) return ScheduleBipartite(std::max(1, k));
  return ScheduleRpartite((*part)->r, k);
}

ScheduleParams ScheduleByName(const Graph& g, std::string_view name, int k_override,
                              std::optional<VertexPartition>* part) {
  const auto tag = ParseFamilyTag(name);
  const int min_k = MinOrientationK(g);
  const int k = k_override >= 0 ? k_override : min_k;
  if (!tag && name != "auto") {
    throw PreconditionError("unknown schedule '" + std::string(name) + "'");
  }
  if (!tag) {
    ScheduleParams s = AutoSchedule(g, part);
    if (k_override >= 0) {
      s = s.family == FamilyTag::kBipartite ? ScheduleBipartite(k_override)
                                            : ScheduleRpartite(s.r, k_override);
    }
    return s;
  }
  switch (*tag) {
    case FamilyTag::kBipartite: {
      if (!*part) {
        auto two = TwoColoring(g);
        if (!two) throw PreconditionError("graph is not bipartite");
        *part = *two;
      }
      return ScheduleBipartite(std::max(1, k));
    }
    case FamilyTag::kRpartite:
      if (!*part) *part = GreedyPartition(g);
      return ScheduleRpartite(std::max(2, (*part)->r), k);
    case FamilyTag::kPlanar4:
      if (!*part) *part = GreedyPartition(g);
      return SchedulePlanar4(k_override >= 0 ? k_override : 3);
    case FamilyTag::kColorable3:
      if (!*part) *part = GreedyPartition(g);
      return ScheduleColorable3(k_override >= 0 ? k_override : std::max(2, min_k));
    case FamilyTag::kOuterplanar:
      if (!*part) *part = GreedyPartition(g);
      return ScheduleOuterplanar();
  }
  throw PreconditionError("unknown schedule");
}

PipelineResult RunPipeline(const Graph& g, const VertexPartition& part_in,
                           const ScheduleParams& sched, const PipelineOptions& options) {
  part_in.Validate(g);
  if (part_in.r > sched.r) {
    throw PreconditionError("partition has " + std::to_string(part_in.r) +
                            " classes but the schedule expects " + std::to_string(sched.r));
  }
  const VertexPartition part = part_in.WithClassCount(sched.r);

  KOrientationResult kr = BuildKOrientation(g, sched.k);
  if (auto* w = std::get_if<InfeasibilityWitness>(&kr)) {
    throw PreconditionError("no " + std::to_string(sched.k) + "-orientation: a subgraph on " +
                            std::to_string(w->vertex_set.size()) + " vertices has " +
                            std::to_string(w->edge_count) + " edges");
  }
  const BaseOrientation& base = std::get<BaseOrientation>(kr);

  PipelineResult res;
  res.schedule = sched;
  res.guaranteed_bound = sched.l;
  auto audit = [&](const PartialOrientation& pfo, const std::string& step) {
    InvariantAudit a = AuditInvariants(pfo, base);
    res.audit_checks += a.checks;
    for (std::string& v : a.violations) res.audit_violations.push_back(step + ": " + v);
    return a;
  };

  PartialOrientation pfo = InitialLevels(g, part, base, sched.l);
  {
    InvariantAudit a = audit(pfo, "initial");
    GapLedger led = ComputeGapLedger(pfo, part);
    res.initial_part_gaps = led.part_gap;
    for (int s = 1; s <= sched.r; ++s) {
      const auto& gs = led.PartGap(s);
      if (gs && *gs > sched.r - s) {
        res.audit_violations.push_back("initial: Gap(" + std::to_string(s) + ") exceeds r - i");
      }
    }
    nlohmann::json rec = {{"event", "initial_levels"}, {"schema", kReportSchema},
                          {"l", sched.l},              {"j", pfo.level()},
                          {"audit_checks", a.checks},  {"audit_violations", a.violations}};
    nlohmann::json gaps = nlohmann::json::array();
    for (const auto& gs : led.part_gap) gaps.push_back(gs ? nlohmann::json(ToString(*gs)) : nullptr);
    rec["part_gaps"] = gaps;
    Log(options, rec);
  }

  CloseRoundOptions ro;
  ro.exact_selection = options.exact_selection;
  for (const RoundSpec& spec : sched.rounds) {
    RoundReport rep = CloseRound(pfo, base, part, spec, ro);
    InvariantAudit a = audit(pfo, spec.label.empty() ? "round" : spec.label);
    nlohmann::json rec = RoundReportJson(g, rep, options.verbose_log);
    rec["event"] = "round";
    rec["schema"] = kReportSchema;
    rec["audit_checks"] = a.checks;
    rec["audit_violations"] = a.violations;
    Log(options, rec);
    const bool claims_ok = rep.ClaimsHold();
    res.round_log.push_back(std::move(rep));
    if (options.enforce_claims && !claims_ok) {
      throw InvariantError("round " + spec.label + " misses a claimed cap");
    }
  }

  res.orientation = Finalize(pfo, base);
  res.verification = VerifyProperOrientation(g, res.orientation, sched.l);
  res.achieved_max = res.verification.max_outdegree;
  Log(options, {{"event", "finalize"},
                {"schema", kReportSchema},
                {"verification", VerificationJson(g, res.verification)}});
  if (!res.audit_violations.empty()) {
    throw InvariantError("invariant audit failed: " + res.audit_violations.front());
  }
  if (!res.verification.is_proper || !res.verification.bound_respected) {
    throw InvariantError("pipeline output is not a proper orientation within the bound");
  }
  return res;
}

}  // namespace porient
