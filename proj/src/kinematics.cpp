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

#include "viewplan/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "viewplan/errors.hpp"
#include "viewplan/scene.hpp"

namespace viewplan {

Eigen::Vector2d GridSpec::position(const Cell& c) const {
  return origin + resolution * Eigen::Vector2d(c.x, c.y);
}

Cell GridSpec::nearest_cell(const Eigen::Vector2d& p) const {
  const Eigen::Vector2d rel = (p - origin) / resolution;
  Cell c{static_cast<int>(std::lround(rel.x())),
         static_cast<int>(std::lround(rel.y()))};
  c.x = std::clamp(c.x, 0, nx - 1);
  c.y = std::clamp(c.y, 0, ny - 1);
  return c;
}

void GridSpec::validate() const {
  if (nx <= 0 || ny <= 0) throw InvalidGeometryError("grid must be non-empty");
  if (!(resolution > 0.0)) {
    throw InvalidGeometryError("grid resolution must be positive");
  }
}

double RobotState::heading() const {
  return static_cast<double>(yaw_index) * kPi / 4.0;
}

Eigen::Vector3d RobotState::heading_vector() const {
  const double h = heading();
  return {std::cos(h), std::sin(h), 0.0};
}

const std::array<Action, 27>& all_actions() {
  static const std::array<Action, 27> actions = [] {
    std::array<Action, 27> out{};
    std::size_t i = 0;
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        for (int dyaw = -1; dyaw <= 1; ++dyaw) out[i++] = {dx, dy, dyaw};
      }
    }
    return out;
  }();
  return actions;
}

namespace {

bool action_ok(const Action& a) {
  return std::abs(a.dx) <= 1 && std::abs(a.dy) <= 1 && std::abs(a.dyaw) <= 1;
}

}  // namespace

RobotState transition(const RobotState& state, const Action& action,
                      const GridSpec& grid) {
  if (!action_ok(action)) throw PreconditionError("malformed action");
  RobotState next;
  next.cell = {state.cell.x + action.dx, state.cell.y + action.dy};
  next.yaw_index =
      ((state.yaw_index + action.dyaw) % kHeadingCount + kHeadingCount) %
      kHeadingCount;
  if (!grid.contains(next.cell)) {
    throw InvalidTransitionError(
        "move to (" + std::to_string(next.cell.x) + ", " +
        std::to_string(next.cell.y) + ") leaves the grid");
  }
  return next;
}

std::vector<Action> valid_actions(const RobotState& state,
                                  const GridSpec& grid) {
  std::vector<Action> out;
  out.reserve(27);
  for (const Action& a : all_actions()) {
    if (grid.contains({state.cell.x + a.dx, state.cell.y + a.dy})) {
      out.push_back(a);
    }
  }
  return out;
}

RobotState StateSpace::state(std::size_t index) const {
  RobotState s;
  s.yaw_index = static_cast<int>(index % kHeadingCount);
  const auto cell = static_cast<int>(index / kHeadingCount);
  s.cell = {cell % grid_.nx, cell / grid_.nx};
  return s;
}

TrajectoryAssignment realize(int robot, const RobotState& start,
                             std::span<const Action> actions,
                             const GridSpec& grid) {
  if (!grid.contains(start.cell) || start.yaw_index < 0 ||
      start.yaw_index >= kHeadingCount) {
    throw InvalidTransitionError("start state outside the state space");
  }
  TrajectoryAssignment out;
  out.robot = robot;
  out.actions.assign(actions.begin(), actions.end());
  out.states.reserve(actions.size() + 1);
  out.states.push_back(start);
  for (const Action& a : actions) {
    out.states.push_back(transition(out.states.back(), a, grid));
  }
  return out;
}

bool is_feasible(const TrajectoryAssignment& assignment,
                 const GridSpec& grid) {
  const auto& s = assignment.states;
  for (const RobotState& st : s) {
    if (!grid.contains(st.cell) || st.yaw_index < 0 ||
        st.yaw_index >= kHeadingCount) {
      return false;
    }
  }
  for (std::size_t i = 1; i < s.size(); ++i) {
    const int dyaw = ((s[i].yaw_index - s[i - 1].yaw_index) % 8 + 8) % 8;
    if (std::abs(s[i].cell.x - s[i - 1].cell.x) > 1 ||
        std::abs(s[i].cell.y - s[i - 1].cell.y) > 1 ||
        !(dyaw == 0 || dyaw == 1 || dyaw == 7)) {
      return false;
    }
  }
  if (!assignment.actions.empty()) {
    if (assignment.actions.size() + 1 != s.size()) return false;
    for (std::size_t i = 0; i < assignment.actions.size(); ++i) {
      if (!grid.contains({s[i].cell.x + assignment.actions[i].dx,
                          s[i].cell.y + assignment.actions[i].dy})) {
        return false;
      }
      if (transition(s[i], assignment.actions[i], grid) != s[i + 1]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace viewplan
