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

#include "viewplan/run.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "viewplan/baselines.hpp"
#include "viewplan/errors.hpp"

namespace viewplan {

namespace fs = std::filesystem;

namespace {

constexpr std::array<std::string_view, 5> kNames = {
    "myopic", "formation", "assignment", "greedy", "multi-round"};

// Write to a sibling temp file, then rename over the target.
void write_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    if (!out) throw Error("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

void check_plan(const Solution& solution, PlannerKind kind,
                const Scenario& scenario) {
  const auto& grid = scenario.problem.grid;
  const auto horizon = static_cast<std::size_t>(scenario.problem.horizon());
  if (solution.assignments().size() !=
      static_cast<std::size_t>(scenario.robot_count)) {
    throw PreconditionError(fmt::format("{}: wrong number of trajectories",
                                        planner_name(kind)));
  }
  for (const auto& a : solution.assignments()) {
    if (a.states.size() != horizon) {
      throw PreconditionError(fmt::format("{}: robot {} trajectory length {}",
                                          planner_name(kind), a.robot,
                                          a.states.size()));
    }
    if (kind != PlannerKind::kFormation && !is_feasible(a, grid)) {
      throw PreconditionError(fmt::format("{}: robot {} violates the motion model",
                                          planner_name(kind), a.robot));
    }
  }
}

}  // namespace

std::string_view planner_name(PlannerKind kind) {
  return kNames[static_cast<std::size_t>(kind)];
}

std::optional<PlannerKind> parse_planner(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<PlannerKind>(i);
  }
  return std::nullopt;
}

const std::vector<PlannerKind>& all_planners() {
  static const std::vector<PlannerKind> kinds = {
      PlannerKind::kMyopic, PlannerKind::kFormation, PlannerKind::kAssignment,
      PlannerKind::kGreedy, PlannerKind::kMultiRound};
  return kinds;
}

Solution plan(PlannerKind kind, const SrppaObjective& objective,
              const Scenario& scenario, int rounds) {
  switch (kind) {
    case PlannerKind::kMyopic:
      return myopic(objective, scenario.starts);
    case PlannerKind::kFormation:
      return formation_plan(objective, scenario.robot_count);
    case PlannerKind::kAssignment:
      return assignment_plan(objective, scenario.starts);
    case PlannerKind::kGreedy:
      return sequential_greedy(objective, scenario.starts);
    case PlannerKind::kMultiRound:
      return multi_round_greedy(objective, scenario.starts, rounds);
  }
  throw PreconditionError("unknown planner");
}

Scenario resolve_scenario(const std::string& name_or_path) {
  if (auto s = builtin_scenario(name_or_path)) return *s;
  if (!fs::exists(name_or_path)) {
    throw ScenarioError("no builtin scenario or file named '" + name_or_path +
                        "'");
  }
  return load_scenario(name_or_path);
}

Scenario configure(Scenario scenario, const RunConfig& config) {
  if (config.seed && scenario.start_seed) {
    scenario = reseeded(std::move(scenario), *config.seed);
  }
  if (config.path_weight) scenario.problem.path_weight = *config.path_weight;
  if (config.alpha) scenario.problem.camera.pixel_density = *config.alpha;
  scenario.problem.camera.validate();
  return scenario;
}

ScenarioRun run_scenario(const Scenario& scenario, const RunConfig& config,
                         const std::optional<fs::path>& image_dir) {
  const SrppaObjective objective(scenario.problem);
  ScenarioRun result{scenario, {}};
  std::optional<double> greedy_value;
  std::optional<double> multi_value;
  for (PlannerKind kind : config.planners) {
    const Solution solution = plan(kind, objective, scenario, config.rounds);
    check_plan(solution, kind, scenario);
    if (kind == PlannerKind::kGreedy) greedy_value = solution.value();
    if (kind == PlannerKind::kMultiRound) multi_value = solution.value();

    RewardSeries series{std::string(planner_name(kind)),
                        srppa_series(solution, objective), {}};
    if (config.image_eval) {
      series.image = image_series(solution, scenario.problem,
                                  {config.width, config.height});
    }
    if (image_dir) {
      const fs::path dir = *image_dir / planner_name(kind);
      fs::create_directories(dir);
      for (int t = 0; t < scenario.problem.horizon(); ++t) {
        std::vector<RasterCamera> cameras;
        for (const auto& a : solution.assignments()) {
          cameras.push_back(RasterCamera::from_state(
              a.states[static_cast<std::size_t>(t)], scenario.problem.grid,
              scenario.problem.camera, config.width, config.height));
        }
        const auto images = rasterize(cameras, scenario.problem.scene, t);
        for (std::size_t i = 0; i < images.size(); ++i) {
          write_ppm(images[i],
                    dir / fmt::format("t{:03}_r{}.ppm", t,
                                      solution.assignments()[i].robot));
        }
      }
    }
    result.series.push_back(std::move(series));
  }
  if (greedy_value && multi_value &&
      *multi_value < *greedy_value - 1e-9 * std::max(1.0, std::abs(*greedy_value))) {
    throw PreconditionError("multi-round result is worse than greedy");
  }
  return result;
}

namespace {

nlohmann::json manifest(const ScenarioRun& r, const RunConfig& config) {
  nlohmann::json planners = nlohmann::json::array();
  for (PlannerKind k : config.planners) planners.push_back(planner_name(k));
  nlohmann::json totals = nlohmann::json::object();
  for (const auto& s : r.series) {
    nlohmann::json entry = {{"srppa_total", s.srppa_total()}};
    entry["image_total"] =
        s.image.empty() ? nlohmann::json(nullptr) : nlohmann::json(s.image_total());
    totals[s.planner] = entry;
  }
  const auto& p = r.scenario.problem;
  nlohmann::json m = {
      {"schema_version", kScenarioSchemaVersion},
      {"scenario", r.scenario.name},
      {"source", config.scenario},
      {"planners", planners},
      {"rounds", config.rounds},
      {"seed", config.seed ? nlohmann::json(*config.seed)
                           : nlohmann::json(nullptr)},
      {"start_seed", r.scenario.start_seed
                         ? nlohmann::json(*r.scenario.start_seed)
                         : nlohmann::json(nullptr)},
      {"image_eval", config.image_eval},
      {"resolution", {config.width, config.height}},
      {"path_weight", p.path_weight},
      {"pixel_density", p.camera.pixel_density},
      // Totals are per-step view rewards summed over the horizon; the path
      // term is not included.
      {"totals_include_path_reward", false},
      {"totals", totals},
      {"scenario_definition", scenario_to_json(r.scenario)},
  };
  return m;
}

void write_run(const ScenarioRun& r, const RunConfig& config,
               const fs::path& dir) {
  fs::create_directories(dir);
  std::ostringstream ts;
  write_timeseries_csv(ts, r.series);
  write_atomic(dir / "timeseries.csv", ts.str());
  std::ostringstream sum;
  const auto rows = summarize(r.scenario.name, r.series);
  write_summary_csv(sum, rows);
  write_atomic(dir / "summary.csv", sum.str());
  write_atomic(dir / "manifest.json", manifest(r, config).dump(2) + "\n");
}

}  // namespace

int run(const RunConfig& config, std::ostream& log) {
  if (config.rounds < 1) {
    log << "error: rounds must be at least 1\n";
    return kExitUsage;
  }
  if (config.planners.empty()) {
    log << "error: no planner selected\n";
    return kExitUsage;
  }
  if (config.width <= 0 || config.height <= 0) {
    log << "error: image resolution must be positive\n";
    return kExitUsage;
  }

  std::vector<Scenario> scenarios;
  try {
    if (config.scenario == "all") {
      scenarios = builtin_scenarios();
    } else {
      scenarios.push_back(resolve_scenario(config.scenario));
    }
    for (auto& s : scenarios) s = configure(std::move(s), config);
  } catch (const ScenarioError& e) {
    log << "scenario error: " << e.what() << "\n";
    return kExitBadScenario;
  } catch (const Error& e) {
    log << "scenario error: " << e.what() << "\n";
    return kExitBadScenario;
  }

  try {
    const bool many = scenarios.size() > 1;
    std::vector<SummaryRow> combined;
    for (const auto& s : scenarios) {
      const fs::path dir = many ? config.out / s.name : config.out;
      std::optional<fs::path> image_dir;
      if (config.dump_images) image_dir = dir / "images";
      const ScenarioRun r = run_scenario(s, config, image_dir);
      write_run(r, config, dir);
      const auto rows = summarize(s.name, r.series);
      combined.insert(combined.end(), rows.begin(), rows.end());
      for (const auto& row : rows) {
        log << fmt::format("{:<18} {:<12} srppa {:.6g}", row.scenario,
                           row.planner, row.srppa_total);
        if (row.image_total) log << fmt::format("  image {:.6g}", *row.image_total);
        log << "\n";
      }
    }
    if (many) {
      std::ostringstream sum;
      write_summary_csv(sum, combined);
      write_atomic(config.out / "summary.csv", sum.str());
    }
  } catch (const Error& e) {
    log << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const fs::filesystem_error& e) {
    log << "i/o error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace viewplan
