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

#ifndef PORIENT_REPORT_H_
#define PORIENT_REPORT_H_

#include <json.hpp>

#include "porient/gap_closer.h"
#include "porient/graph.h"
#include "porient/schedules.h"

namespace porient {

inline constexpr int kReportSchema = 1;

// Rationals are written as strings ("17/21") so they round-trip exactly.
nlohmann::json RoundReportJson(const Graph& g, const RoundReport& rep, bool verbose = false);
nlohmann::json VerificationJson(const Graph& g, const VerificationReport& rep);
nlohmann::json PipelineJson(const Graph& g, const PipelineResult& res);

}  // namespace porient

#endif  // PORIENT_REPORT_H_
