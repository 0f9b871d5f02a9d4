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

// Brute-force reference solutions shared by the unit and acceptance tests.
// Everything here scores through the uncached geometric objective, so it
// shares no code path with the value-iteration tables.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "viewplan/analysis.hpp"
#include "viewplan/kinematics.hpp"
#include "viewplan/objective.hpp"
#include "viewplan/scene.hpp"

namespace viewplan::oracle {

// Every feasible trajectory from `start`, in lexicographic canonical action
// order.
inline std::vector<TrajectoryAssignment> enumerate_trajectories(
    int robot, const RobotState& start, const Problem& problem) {
  std::vector<TrajectoryAssignment> out;
  std::vector<Action> seq;
  std::function<void(const RobotState&)> walk = [&](const RobotState& s) {
    if (static_cast<int>(seq.size()) + 1 == problem.horizon()) {
      out.push_back(realize(robot, start, seq, problem.grid));
      return;
    }
    for (const Action& a : all_actions()) {
      const Cell c{s.cell.x + a.dx, s.cell.y + a.dy};
      if (!problem.grid.contains(c)) continue;
      seq.push_back(a);
      walk(transition(s, a, problem.grid));
      seq.pop_back();
    }
  };
  walk(start);
  return out;
}

inline double reference_value(std::vector<TrajectoryAssignment> set,
                              const Problem& problem) {
  return objective_value(set, problem);
}

struct Best {
  TrajectoryAssignment assignment;
  double gain = 0.0;
};

// Highest marginal gain over `prior`; among near-equal maxima the first in
// canonical order wins.
inline Best best_single(int robot, const RobotState& start,
                        const std::vector<TrajectoryAssignment>& prior,
                        const Problem& problem) {
  const double base = reference_value(prior, problem);
  const auto all = enumerate_trajectories(robot, start, problem);
  std::vector<double> gains;
  for (const auto& tr : all) {
    auto with = prior;
    with.push_back(tr);
    gains.push_back(reference_value(with, problem) - base);
  }
  const double top = *std::max_element(gains.begin(), gains.end());
  const double cut = top - 1e-9 * std::max(1.0, std::abs(top));
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (gains[i] >= cut) return {all[i], gains[i]};
  }
  return {all.front(), gains.front()};
}

// Exhaustive team optimum, one trajectory per robot.
inline double team_optimum(const std::vector<RobotState>& starts,
                           const Problem& problem) {
  std::vector<std::vector<TrajectoryAssignment>> options;
  for (std::size_t r = 0; r < starts.size(); ++r) {
    options.push_back(
        enumerate_trajectories(static_cast<int>(r), starts[r], problem));
  }
  double best = -1.0;
  std::vector<TrajectoryAssignment> pick(starts.size());
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == starts.size()) {
      best = std::max(best, reference_value(pick, problem));
      return;
    }
    for (const auto& tr : options[r]) {
      pick[r] = tr;
      rec(r + 1);
    }
  };
  rec(0);
  return best;
}

// Small random instance that still leaves the actors in reach of the
// cameras: grid up to `max_grid` per side, horizon up to `max_horizon`.
inline MicroInstance small_instance(std::mt19937_64& rng, int robots,
                                    int max_grid, int max_horizon) {
  MicroLimits limits;
  limits.max_grid = max_grid;
  limits.max_horizon = max_horizon;
  for (;;) {
    MicroInstance inst = random_micro_instance(rng, limits);
    if (inst.problem.horizon() < 2) continue;
    inst.starts.resize(static_cast<std::size_t>(robots));
    for (auto& s : inst.starts) {
      s = {{static_cast<int>(rng() % static_cast<unsigned>(inst.problem.grid.nx)),
            static_cast<int>(rng() % static_cast<unsigned>(inst.problem.grid.ny))},
           static_cast<int>(rng() % kHeadingCount)};
    }
    return inst;
  }
}

}  // namespace viewplan::oracle
