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

// viewplan command line.
//
//   viewplan run --scenario cluster --planner all --out out/
//   viewplan verify-properties --trials 1000 --seed 1
//   viewplan export-scenarios --out scenarios/
//   viewplan list-scenarios
//
// Every `run` flag can also be set through an environment variable named
// VIEWPLAN_<FLAG>, e.g. VIEWPLAN_SCENARIO or VIEWPLAN_IMAGE_EVAL.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "viewplan/analysis.hpp"
#include "viewplan/run.hpp"
#include "viewplan/scenario.hpp"

namespace {

bool parse_resolution(const std::string& text, int& w, int& h) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) return false;
  try {
    std::size_t used = 0;
    w = std::stoi(text.substr(0, x), &used);
    if (used != x) return false;
    const std::string rest = text.substr(x + 1);
    h = std::stoi(rest, &used);
    if (used != rest.size()) return false;
  } catch (const std::exception&) {
    return false;
  }
  return w > 0 && h > 0;
}

std::vector<viewplan::PlannerKind> parse_planners(const std::string& text) {
  if (text == "all") return viewplan::all_planners();
  std::vector<viewplan::PlannerKind> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto kind = viewplan::parse_planner(item);
    if (!kind) throw CLI::ValidationError("--planner", "unknown planner '" + item + "'");
    out.push_back(*kind);
  }
  if (out.empty()) throw CLI::ValidationError("--planner", "no planner given");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-robot camera view planning"};
  app.require_subcommand(1);

  // run
  auto* run_cmd = app.add_subcommand("run", "plan and score a scenario");
  std::string scenario = "cluster";
  std::string planners = "all";
  int rounds = 3;
  std::uint64_t seed = 0;
  std::string out = "out";
  bool image_eval = false;
  std::string resolution = "640x480";
  double path_weight = 0.0;
  double alpha = 0.0;
  bool dump_images = false;
  run_cmd->add_option("--scenario", scenario,
                      "builtin name, 'all', or a scenario JSON file")
      ->envname("VIEWPLAN_SCENARIO");
  run_cmd->add_option("--planner", planners,
                      "myopic, formation, assignment, greedy, multi-round, "
                      "a comma list, or 'all'")
      ->envname("VIEWPLAN_PLANNER");
  run_cmd->add_option("--rounds", rounds, "multi-round greedy rounds")
      ->check(CLI::PositiveNumber)
      ->envname("VIEWPLAN_ROUNDS");
  auto* seed_opt = run_cmd->add_option("--seed", seed, "start placement seed")
                       ->envname("VIEWPLAN_SEED");
  run_cmd->add_option("--out", out, "output directory")->envname("VIEWPLAN_OUT");
  run_cmd->add_flag("--image-eval", image_eval, "also render and score images")
      ->envname("VIEWPLAN_IMAGE_EVAL");
  run_cmd->add_option("--resolution", resolution, "image size WxH")
      ->envname("VIEWPLAN_RESOLUTION");
  auto* pw_opt = run_cmd->add_option("--path-weight", path_weight,
                                     "override the path reward weight")
                     ->check(CLI::NonNegativeNumber)
                     ->envname("VIEWPLAN_PATH_WEIGHT");
  auto* alpha_opt = run_cmd->add_option("--alpha", alpha,
                                        "override the pixel density constant")
                        ->check(CLI::PositiveNumber)
                        ->envname("VIEWPLAN_ALPHA");
  run_cmd->add_flag("--dump-images", dump_images,
                    "write PPM id maps (implies --image-eval)")
      ->envname("VIEWPLAN_DUMP_IMAGES");

  // verify-properties
  auto* verify_cmd =
      app.add_subcommand("verify-properties", "numerical monotonicity checks");
  int trials = 1000;
  std::uint64_t verify_seed = 1;
  verify_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify_seed);

  // export-scenarios
  auto* export_cmd =
      app.add_subcommand("export-scenarios", "write the builtin fixtures as JSON");
  std::string export_dir = "scenarios";
  export_cmd->add_option("--out", export_dir);

  auto* list_cmd = app.add_subcommand("list-scenarios", "print builtin names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (*run_cmd) {
    viewplan::RunConfig config;
    try {
      config.planners = parse_planners(planners);
    } catch (const CLI::ParseError& e) {
      return app.exit(e);
    }
    if (!parse_resolution(resolution, config.width, config.height)) {
      std::cerr << "error: --resolution expects WxH, got '" << resolution << "'\n";
      return viewplan::kExitUsage;
    }
    config.scenario = scenario;
    config.rounds = rounds;
    if (*seed_opt) config.seed = seed;
    config.out = out;
    config.image_eval = image_eval || dump_images;
    config.dump_images = dump_images;
    if (*pw_opt) config.path_weight = path_weight;
    if (*alpha_opt) config.alpha = alpha;
    return viewplan::run(config, std::cerr);
  }

  if (*verify_cmd) {
    const auto report = viewplan::verify_properties(trials, verify_seed);
    for (const auto& c : report.checks) {
      std::cout << fmt::format("{} {} ({} cases){}\n", c.passed ? "PASS" : "FAIL",
                               c.name, c.cases,
                               c.detail.empty() ? "" : ": " + c.detail);
    }
    std::cout << (report.passed() ? "all properties hold\n"
                                  : "some properties failed\n");
    return report.passed() ? 0 : 1;
  }

  if (*export_cmd) {
    std::filesystem::create_directories(export_dir);
    for (const auto& s : viewplan::builtin_scenarios()) {
      const auto path = std::filesystem::path(export_dir) / (s.name + ".json");
      viewplan::save_scenario(s, path);
      std::cout << path.string() << "\n";
    }
    return 0;
  }

  if (*list_cmd) {
    for (const auto& s : viewplan::builtin_scenarios()) {
      std::cout << fmt::format("{:<18} {} robots, {} actors, T={}\n", s.name,
                               s.robot_count, s.actor_count(),
                               s.problem.horizon());
    }
    return 0;
  }
  return 0;
}
