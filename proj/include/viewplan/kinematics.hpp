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

// Discrete robot state space: a planar grid with 8 camera headings at a fixed
// altitude, and the one-step motion model.

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace viewplan {

inline constexpr int kHeadingCount = 8;

struct Cell {
  int x = 0;
  int y = 0;
  auto operator<=>(const Cell&) const = default;
};

// Axis-aligned planning grid. Cell (i, j) is centered at
// origin + resolution * (i, j); the resolution is also the per-axis step
// length of one move.
struct GridSpec {
  Eigen::Vector2d origin = Eigen::Vector2d::Zero();
  double resolution = 1.0;
  int nx = 1;
  int ny = 1;

  bool contains(const Cell& c) const {
    return c.x >= 0 && c.y >= 0 && c.x < nx && c.y < ny;
  }
  int cell_count() const { return nx * ny; }
  Eigen::Vector2d position(const Cell& c) const;
  // Closest cell to a world point, clamped to the grid.
  Cell nearest_cell(const Eigen::Vector2d& p) const;
  void validate() const;

  bool operator==(const GridSpec&) const = default;
};

struct RobotState {
  Cell cell;
  int yaw_index = 0;  // heading = yaw_index * pi/4

  double heading() const;
  // Horizontal unit vector along the camera axis.
  Eigen::Vector3d heading_vector() const;

  auto operator<=>(const RobotState&) const = default;
};

struct Action {
  int dx = 0;
  int dy = 0;
  int dyaw = 0;

  bool is_stay() const { return dx == 0 && dy == 0; }
  auto operator<=>(const Action&) const = default;
};

// All 27 actions in canonical order: row-major over the move (dy outer,
// dx inner, each -1..1), then dyaw ascending.
const std::array<Action, 27>& all_actions();

RobotState transition(const RobotState& state, const Action& action,
                      const GridSpec& grid);

// Actions that keep the robot on the grid, in canonical order.
std::vector<Action> valid_actions(const RobotState& state,
                                  const GridSpec& grid);

// Dense numbering of the state space: (cell row-major) * 8 + yaw.
class StateSpace {
 public:
  explicit StateSpace(const GridSpec& grid) : grid_(grid) {}

  std::size_t size() const {
    return static_cast<std::size_t>(grid_.cell_count()) * kHeadingCount;
  }
  std::size_t index(const RobotState& s) const {
    return (static_cast<std::size_t>(s.cell.y) * grid_.nx + s.cell.x) *
               kHeadingCount +
           static_cast<std::size_t>(s.yaw_index);
  }
  RobotState state(std::size_t index) const;
  const GridSpec& grid() const { return grid_; }

 private:
  GridSpec grid_;
};

// One element of the ground set: a robot paired with a full trajectory.
// `states` has one entry per time step. Plans that obey the motion model
// also carry the `states.size() - 1` actions that produced them; teleporting
// baselines leave `actions` empty.
struct TrajectoryAssignment {
  int robot = 0;
  std::vector<Action> actions;
  std::vector<RobotState> states;

  bool operator==(const TrajectoryAssignment&) const = default;
};

// Rolls a start state forward through `actions`.
TrajectoryAssignment realize(int robot, const RobotState& start,
                             std::span<const Action> actions,
                             const GridSpec& grid);

// True when consecutive states differ by at most one cell per axis and one
// heading step, and (if actions are present) replay to the same states.
bool is_feasible(const TrajectoryAssignment& assignment, const GridSpec& grid);

}  // namespace viewplan
