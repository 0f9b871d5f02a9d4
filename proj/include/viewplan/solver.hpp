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

// Exact single-robot planning by backward value iteration, and the team
// planners built on it.

#pragma once

#include <span>
#include <vector>

#include "viewplan/kinematics.hpp"
#include "viewplan/objective.hpp"

namespace viewplan {

// A team plan: at most one trajectory per robot, with the pixel ledger of
// the whole set kept in sync.
class Solution {
 public:
  explicit Solution(const SrppaObjective& objective);

  // Throws MatroidViolationError if the robot already has a trajectory.
  void add(TrajectoryAssignment assignment);
  // Replaces the robot's trajectory and rebuilds the ledger.
  void replace(TrajectoryAssignment assignment);

  // Sorted by robot id.
  const std::vector<TrajectoryAssignment>& assignments() const {
    return assignments_;
  }
  const TrajectoryAssignment& of(int robot) const;
  bool contains(int robot) const;
  const PixelLedger& ledger() const { return ledger_; }
  // Ledger of every assignment except the robot's, summed in robot order.
  PixelLedger ledger_without(int robot) const;

  double value() const;

 private:
  const SrppaObjective* objective_;
  std::vector<TrajectoryAssignment> assignments_;
  PixelLedger ledger_;
};

struct PlanResult {
  TrajectoryAssignment assignment;
  double gain = 0.0;  // marginal gain over the prior, as seen by the planner
};

// Trajectory from `start` that maximizes the marginal gain over `prior`.
// Ties go to the first action in canonical order.
PlanResult value_iteration(const SrppaObjective& objective, int robot,
                           const RobotState& start, const PixelLedger& prior);

// Robots plan in ascending id order, each conditioned on its predecessors.
Solution sequential_greedy(const SrppaObjective& objective,
                           std::span<const RobotState> starts);

// First round is sequential greedy; later rounds let every robot replan
// against all other robots' current trajectories. A replan is kept only if
// it strictly improves the objective. `history`, when given, receives the
// objective after the first round and after every later replanning step.
Solution multi_round_greedy(const SrppaObjective& objective,
                            std::span<const RobotState> starts, int rounds,
                            std::vector<double>* history = nullptr);

// Every robot plans alone against an empty prior.
Solution myopic(const SrppaObjective& objective,
                std::span<const RobotState> starts);

}  // namespace viewplan
