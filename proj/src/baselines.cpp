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

#include "viewplan/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "viewplan/errors.hpp"

namespace viewplan {

namespace {

int snap_heading(double radians) {
  const auto k = static_cast<int>(std::lround(normalize_angle(radians) / (kPi / 4.0)));
  return k % kHeadingCount;
}

}  // namespace

Solution formation_plan(const SrppaObjective& objective, int robot_count,
                        const FormationConfig& config) {
  const Problem& problem = objective.problem();
  const Scene& scene = problem.scene;
  if (scene.actors().empty()) {
    throw PreconditionError("formation needs at least one actor");
  }
  if (!(config.safety_margin >= 0.0)) {
    throw PreconditionError("safety margin must be non-negative");
  }
  const int horizon = scene.horizon();
  std::vector<TrajectoryAssignment> plans(static_cast<std::size_t>(robot_count));
  for (int r = 0; r < robot_count; ++r) plans[static_cast<std::size_t>(r)].robot = r;

  for (int t = 0; t < horizon; ++t) {
    Eigen::Vector2d centroid = Eigen::Vector2d::Zero();
    for (const Actor& a : scene.actors()) centroid += a.pose(t).position;
    centroid /= static_cast<double>(scene.actors().size());
    double spread = 0.0;
    for (const Actor& a : scene.actors()) {
      spread = std::max(spread, (a.pose(t).position - centroid).norm());
    }
    const double radius = spread + config.safety_margin;

    for (int r = 0; r < robot_count; ++r) {
      const double angle = 2.0 * kPi * r / robot_count;
      const Eigen::Vector2d target =
          centroid + radius * Eigen::Vector2d(std::cos(angle), std::sin(angle));
      RobotState state;
      state.cell = problem.grid.nearest_cell(target);
      const Eigen::Vector2d at = problem.grid.position(state.cell);

      double nearest = std::numeric_limits<double>::infinity();
      Eigen::Vector2d look = centroid;
      for (const Actor& a : scene.actors()) {
        const double d = (a.pose(t).position - at).norm();
        if (d < nearest) {
          nearest = d;
          look = a.pose(t).position;
        }
      }
      const Eigen::Vector2d dir = look - at;
      state.yaw_index = snap_heading(std::atan2(dir.y(), dir.x()));
      plans[static_cast<std::size_t>(r)].states.push_back(state);
    }
  }

  Solution solution(objective);
  for (auto& plan : plans) solution.add(std::move(plan));
  return solution;
}

AssignmentMap build_assignment_map(const Problem& problem,
                                   std::span<const RobotState> starts) {
  const auto robots = static_cast<int>(starts.size());
  AssignmentMap map(starts.size());
  std::vector<int> ids;
  for (const Actor& a : problem.scene.actors()) ids.push_back(a.id());
  std::sort(ids.begin(), ids.end());
  const auto actors = static_cast<int>(ids.size());
  if (robots == 0 || actors == 0) return map;

  if (actors < robots) {
    for (int r = 0; r < robots; ++r) {
      map[static_cast<std::size_t>(r)] = {ids[static_cast<std::size_t>(r % actors)]};
    }
    return map;
  }

  const int block = actors / robots;
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(robots));
  std::vector<Eigen::Vector2d> centers(static_cast<std::size_t>(robots),
                                       Eigen::Vector2d::Zero());
  for (int b = 0; b < robots; ++b) {
    for (int i = 0; i < block; ++i) {
      const int id = ids[static_cast<std::size_t>(b * block + i)];
      blocks[static_cast<std::size_t>(b)].push_back(id);
      for (const Actor& a : problem.scene.actors()) {
        if (a.id() == id) centers[static_cast<std::size_t>(b)] += a.pose(0).position;
      }
    }
    centers[static_cast<std::size_t>(b)] /= static_cast<double>(block);
  }

  std::vector<bool> robot_done(static_cast<std::size_t>(robots), false);
  std::vector<bool> block_done(static_cast<std::size_t>(robots), false);
  for (int pair = 0; pair < robots; ++pair) {
    double best = std::numeric_limits<double>::infinity();
    int best_r = -1;
    int best_b = -1;
    for (int r = 0; r < robots; ++r) {
      if (robot_done[static_cast<std::size_t>(r)]) continue;
      const Eigen::Vector2d p =
          problem.grid.position(starts[static_cast<std::size_t>(r)].cell);
      for (int b = 0; b < robots; ++b) {
        if (block_done[static_cast<std::size_t>(b)]) continue;
        const double d = (centers[static_cast<std::size_t>(b)] - p).norm();
        if (d < best) {
          best = d;
          best_r = r;
          best_b = b;
        }
      }
    }
    robot_done[static_cast<std::size_t>(best_r)] = true;
    block_done[static_cast<std::size_t>(best_b)] = true;
    map[static_cast<std::size_t>(best_r)] = blocks[static_cast<std::size_t>(best_b)];
  }
  return map;
}

Solution assignment_plan(const SrppaObjective& objective,
                         std::span<const RobotState> starts) {
  const Problem& problem = objective.problem();
  const AssignmentMap map = build_assignment_map(problem, starts);
  Solution solution(objective);
  for (std::size_t r = 0; r < starts.size(); ++r) {
    Problem sub = problem;
    sub.scene = problem.scene.restricted_to(map[r]);
    const SrppaObjective restricted(std::move(sub));
    PlanResult plan = value_iteration(restricted, static_cast<int>(r), starts[r],
                                      restricted.empty_ledger());
    solution.add(std::move(plan.assignment));
  }
  return solution;
}

}  // namespace viewplan
