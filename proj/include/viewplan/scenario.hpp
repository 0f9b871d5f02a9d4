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

// Scenario files: a versioned JSON schema describing the actors, the grid,
// the camera and the robot team, plus the eight built-in fixtures.
//
// Schema (version 1):
//
//   {
//     "schema_version": 1,
//     "name": "cluster",
//     "description": "free text",                       (optional)
//     "horizon": 80,
//     "grid": {"origin": [x, y], "resolution": 1.0, "size": [nx, ny]},
//     "camera": {"fov": rad, "declination": rad, "altitude": m,
//                "pixel_density": px_per_m2_at_1m},         (each optional)
//     "path_weight": 1.0,                                 (optional)
//     "robots": {"count": 4,
//                "starts": [{"cell": [i, j], "yaw": k}, ...]}
//            or {"count": 4, "seed": 7,
//                "start_region": {"min": [i, j], "max": [i, j]}}  (optional)
//     "actors": [{"id": 0, "radius": 0.5, "height": 1.8, "weight": 1.0,
//                 "face_weights": [w0, ..., w6],          (optional)
//                 "poses": [[x, y, yaw], ...]             (one per step)
//              or "waypoints": [{"step": 0, "x": 0, "y": 0, "yaw": 0}, ...]}]
//   }
//
// Radius and height default to 0.5 m and 1.8 m. Unknown top-level keys and
// other schema versions are rejected.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "viewplan/kinematics.hpp"
#include "viewplan/objective.hpp"

namespace viewplan {

inline constexpr int kScenarioSchemaVersion = 1;

// Inclusive cell box for seeded start placement.
struct StartRegion {
  Cell min;
  Cell max;
  bool operator==(const StartRegion&) const = default;
};

struct Scenario {
  std::string name;
  std::string description;
  Problem problem;
  int robot_count = 0;
  std::vector<RobotState> starts;
  // Set when the starts were drawn from a seed rather than listed.
  std::optional<std::uint64_t> start_seed;
  std::optional<StartRegion> start_region;

  std::size_t actor_count() const { return problem.scene.actors().size(); }
  bool operator==(const Scenario&) const = default;
};

// Uniform random cells (inside `region` when given) and headings.
// Reproducible across platforms for a given seed.
std::vector<RobotState> random_starts(const GridSpec& grid, int count,
                                      std::uint64_t seed,
                                      std::optional<StartRegion> region);

// Re-draws the starts of a seeded scenario with another seed.
Scenario reseeded(Scenario scenario, std::uint64_t seed);

Scenario parse_scenario(const nlohmann::json& doc);
Scenario parse_scenario_text(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

nlohmann::json scenario_to_json(const Scenario& scenario);
void save_scenario(const Scenario& scenario,
                   const std::filesystem::path& path);

// cluster, cross-mix, four-split, priority-runners, priority-speaker,
// split-and-join, spreadout-group, track-runners.
std::vector<Scenario> builtin_scenarios();
std::optional<Scenario> builtin_scenario(std::string_view name);

}  // namespace viewplan
