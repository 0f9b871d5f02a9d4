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

#include "viewplan/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "viewplan/errors.hpp"

namespace viewplan {

namespace {

// Action values closer than this (relative) are treated as ties so that the
// canonical order decides, independent of summation rounding.
constexpr double kTieTolerance = 1e-12;

}  // namespace

Solution::Solution(const SrppaObjective& objective)
    : objective_(&objective), ledger_(objective.empty_ledger()) {}

void Solution::add(TrajectoryAssignment assignment) {
  if (contains(assignment.robot)) {
    throw MatroidViolationError("robot " + std::to_string(assignment.robot) +
                                " already has a trajectory");
  }
  objective_->accumulate(ledger_, assignment);
  auto pos = std::lower_bound(
      assignments_.begin(), assignments_.end(), assignment.robot,
      [](const TrajectoryAssignment& a, int r) { return a.robot < r; });
  const bool appended = pos == assignments_.end();
  assignments_.insert(pos, std::move(assignment));
  // Out-of-order inserts change the summation order; keep the ledger
  // identical to a fresh sum in robot order.
  if (!appended) ledger_ = objective_->ledger(assignments_);
}

void Solution::replace(TrajectoryAssignment assignment) {
  auto it = std::find_if(
      assignments_.begin(), assignments_.end(),
      [&](const TrajectoryAssignment& a) { return a.robot == assignment.robot; });
  if (it == assignments_.end()) {
    throw IndexError("robot " + std::to_string(assignment.robot) +
                     " has no trajectory to replace");
  }
  *it = std::move(assignment);
  ledger_ = objective_->ledger(assignments_);
}

bool Solution::contains(int robot) const {
  return std::any_of(assignments_.begin(), assignments_.end(),
                     [robot](const auto& a) { return a.robot == robot; });
}

const TrajectoryAssignment& Solution::of(int robot) const {
  for (const auto& a : assignments_) {
    if (a.robot == robot) return a;
  }
  throw IndexError("robot " + std::to_string(robot) + " has no trajectory");
}

PixelLedger Solution::ledger_without(int robot) const {
  PixelLedger out = objective_->empty_ledger();
  for (const auto& a : assignments_) {
    if (a.robot != robot) objective_->accumulate(out, a);
  }
  return out;
}

double Solution::value() const {
  double path = 0.0;
  for (const auto& a : assignments_) {
    path += path_reward(a, objective_->problem().path_weight);
  }
  return path + objective_->view_value(ledger_);
}

PlanResult value_iteration(const SrppaObjective& objective, int robot,
                           const RobotState& start, const PixelLedger& prior) {
  const GridSpec& grid = objective.problem().grid;
  if (!grid.contains(start.cell) || start.yaw_index < 0 ||
      start.yaw_index >= kHeadingCount) {
    throw PreconditionError("start state outside the grid");
  }
  const StateSpace& space = objective.states();
  const int horizon = objective.horizon();
  const std::size_t n = space.size();
  const double weight = objective.problem().path_weight;
  const RewardTable reward = objective.marginal_gain_table(prior);
  const auto& actions = all_actions();

  // Successor of every (state, action), or -1 when the move leaves the grid.
  std::vector<std::int64_t> successor(n * actions.size(), -1);
  for (std::size_t s = 0; s < n; ++s) {
    const RobotState st = space.state(s);
    for (std::size_t a = 0; a < actions.size(); ++a) {
      const Cell c{st.cell.x + actions[a].dx, st.cell.y + actions[a].dy};
      if (!grid.contains(c)) continue;
      successor[s * actions.size() + a] = static_cast<std::int64_t>(
          space.index(transition(st, actions[a], grid)));
    }
  }
  std::vector<double> action_bonus(actions.size());
  for (std::size_t a = 0; a < actions.size(); ++a) {
    action_bonus[a] = (actions[a].is_stay() ? weight : 0.0) +
                      (actions[a].dyaw == 0 ? weight : 0.0);
  }

  std::vector<double> value(n), next(n);
  for (std::size_t s = 0; s < n; ++s) next[s] = reward.at(horizon - 1, s);
  std::vector<std::uint8_t> policy(
      static_cast<std::size_t>(std::max(horizon - 1, 0)) * n, 0);

  std::vector<double> q(actions.size());
  for (int t = horizon - 2; t >= 0; --t) {
    for (std::size_t s = 0; s < n; ++s) {
      double best = -std::numeric_limits<double>::infinity();
      for (std::size_t a = 0; a < actions.size(); ++a) {
        const std::int64_t nx = successor[s * actions.size() + a];
        q[a] = nx < 0 ? -std::numeric_limits<double>::infinity()
                      : action_bonus[a] + next[static_cast<std::size_t>(nx)];
        best = std::max(best, q[a]);
      }
      const double cut = best - kTieTolerance * std::max(1.0, std::abs(best));
      std::size_t choice = 0;
      while (q[choice] < cut) ++choice;
      policy[static_cast<std::size_t>(t) * n + s] =
          static_cast<std::uint8_t>(choice);
      value[s] = reward.at(t, s) + q[choice];
    }
    std::swap(value, next);
  }

  std::vector<Action> plan;
  plan.reserve(static_cast<std::size_t>(std::max(horizon - 1, 0)));
  RobotState state = start;
  for (int t = 0; t + 1 < horizon; ++t) {
    const Action& a =
        actions[policy[static_cast<std::size_t>(t) * n + space.index(state)]];
    plan.push_back(a);
    state = transition(state, a, grid);
  }
  PlanResult result;
  result.gain = next[space.index(start)];
  result.assignment = realize(robot, start, plan, grid);
  return result;
}

Solution sequential_greedy(const SrppaObjective& objective,
                           std::span<const RobotState> starts) {
  Solution solution(objective);
  for (std::size_t r = 0; r < starts.size(); ++r) {
    PlanResult plan = value_iteration(objective, static_cast<int>(r),
                                      starts[r], solution.ledger());
    solution.add(std::move(plan.assignment));
  }
  return solution;
}

Solution multi_round_greedy(const SrppaObjective& objective,
                            std::span<const RobotState> starts, int rounds,
                            std::vector<double>* history) {
  if (rounds < 1) throw PreconditionError("rounds must be at least 1");
  Solution solution = sequential_greedy(objective, starts);
  if (history) history->push_back(solution.value());
  for (int round = 1; round < rounds; ++round) {
    bool changed = false;
    for (std::size_t r = 0; r < starts.size(); ++r) {
      const int robot = static_cast<int>(r);
      const PixelLedger others = solution.ledger_without(robot);
      PlanResult plan = value_iteration(objective, robot, starts[r], others);
      const double incumbent = objective.marginal_gain(solution.of(robot), others);
      const double candidate = objective.marginal_gain(plan.assignment, others);
      if (candidate > incumbent + 1e-9 * std::max(1.0, std::abs(incumbent))) {
        solution.replace(std::move(plan.assignment));
        changed = true;
      }
      if (history) history->push_back(solution.value());
    }
    // A round without changes is a fixed point; further rounds repeat it.
    if (!changed) break;
  }
  return solution;
}

Solution myopic(const SrppaObjective& objective,
                std::span<const RobotState> starts) {
  Solution solution(objective);
  const PixelLedger empty = objective.empty_ledger();
  for (std::size_t r = 0; r < starts.size(); ++r) {
    solution.add(
        value_iteration(objective, static_cast<int>(r), starts[r], empty)
            .assignment);
  }
  return solution;
}

}  // namespace viewplan
