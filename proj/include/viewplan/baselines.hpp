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

// Formation and fixed-assignment baseline planners.

#pragma once

#include <span>
#include <vector>

#include "viewplan/kinematics.hpp"
#include "viewplan/objective.hpp"
#include "viewplan/solver.hpp"

namespace viewplan {

struct FormationConfig {
  double safety_margin = 2.0;  // m beyond the furthest actor
};

// Robots sit evenly on a circle around the actor centroid (robot 0 at angle
// 0), each turned toward its nearest actor. Positions are snapped to the
// grid at every step and the motion model is not enforced.
Solution formation_plan(const SrppaObjective& objective, int robot_count,
                        const FormationConfig& config = {});

// Actor ids assigned to each robot, indexed by robot id.
using AssignmentMap = std::vector<std::vector<int>>;

// With at least as many actors as robots, every robot receives a block of
// floor(Na / Nr) consecutive actor ids and the highest leftover ids stay
// unassigned; blocks go to robots by greedy nearest-start pairing. With
// fewer actors than robots, robot r watches actor r mod Na.
AssignmentMap build_assignment_map(const Problem& problem,
                                   std::span<const RobotState> starts);

// Each robot plans alone for its assigned actors only, keeping the
// assignment for the whole horizon.
Solution assignment_plan(const SrppaObjective& objective,
                         std::span<const RobotState> starts);

}  // namespace viewplan
