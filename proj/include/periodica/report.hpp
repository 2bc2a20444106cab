// Copyright 2026 The Periodica Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PERIODICA_REPORT_HPP_
#define PERIODICA_REPORT_HPP_

#include <string>

#include "periodica/io.hpp"
#include "periodica/periodicity.hpp"

namespace periodica {

struct AnalysisOptions {
  TiePolicy tie_policy = TiePolicy::kStrict;
  std::size_t max_cycle_len = 0;
};

// Exit status: 0 success, 2 degeneracy under the strict tie policy.
struct AnalysisResult {
  Json report;
  int exit_code = 0;
};

AnalysisResult AnalyzeStrategic(const Game& game, const std::string& name,
                                const AnalysisOptions& options);
AnalysisResult AnalyzeBayesian(const GameFile& file, const AnalysisOptions& options);
AnalysisResult AnalyzeQuadratic(const QuadraticInput& input);
AnalysisResult AnalyzeFile(const GameFile& file, const AnalysisOptions& options);

// Transformed strategic game file; printed-table mismatches become errata
// entries. With then_analyze the result is {"game": ..., "analysis": ...}.
AnalysisResult TransformFile(const GameFile& file, Transform transform, bool then_analyze,
                             const AnalysisOptions& options);

// Resolves fixture errata against a report: each entry with a path gains the
// derived value found there and whether it agrees with the printed one.
Json ResolveErrata(const Json& report, const Json& errata);

// Periodicity report in machine form.
Json PeriodicityToJson(const Game& game, const PeriodicityReport& report);

std::string RenderText(const Json& report);

}  // namespace periodica

#endif  // PERIODICA_REPORT_HPP_
