// Copyright 2026 The Authors.
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

// Planner dispatch and the `run` command: plan a scenario with one or more
// planners, score the plans, and write the CSV and manifest artifacts.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "viewplan/evaluation.hpp"
#include "viewplan/scenario.hpp"
#include "viewplan/solver.hpp"

namespace viewplan {

enum class PlannerKind { kMyopic, kFormation, kAssignment, kGreedy, kMultiRound };

std::string_view planner_name(PlannerKind kind);
// Accepts the names printed by planner_name.
std::optional<PlannerKind> parse_planner(std::string_view name);
const std::vector<PlannerKind>& all_planners();

Solution plan(PlannerKind kind, const SrppaObjective& objective,
              const Scenario& scenario, int rounds);

struct RunConfig {
  std::string scenario;  // builtin name, "all", or a path to a JSON file
  std::vector<PlannerKind> planners;
  int rounds = 3;
  std::optional<std::uint64_t> seed;  // re-draws seeded starts
  std::filesystem::path out = "out";
  bool image_eval = false;
  int width = 640;
  int height = 480;
  std::optional<double> path_weight;
  std::optional<double> alpha;  // pixel density override
  bool dump_images = false;     // PPM id maps, needs image_eval
};

// Builtin fixture or scenario file. Throws ScenarioError.
Scenario resolve_scenario(const std::string& name_or_path);

// Applies the seed and the parameter overrides of the config.
Scenario configure(Scenario scenario, const RunConfig& config);

struct ScenarioRun {
  Scenario scenario;
  std::vector<RewardSeries> series;  // in the order of config.planners
};

// Plans and scores one scenario. With `image_dir`, id maps go there.
ScenarioRun run_scenario(const Scenario& scenario, const RunConfig& config,
                         const std::optional<std::filesystem::path>& image_dir =
                             std::nullopt);

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBadScenario = 2;
inline constexpr int kExitInvariant = 3;

// Writes timeseries.csv, summary.csv and manifest.json under config.out (one
// subdirectory per scenario for "all", plus a combined summary). Returns the
// process exit status; diagnostics go to `log`.
int run(const RunConfig& config, std::ostream& log);

}  // namespace viewplan
