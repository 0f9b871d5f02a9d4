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

// Numerical checks of higher-order monotonicity for set functions over small
// ground sets, and the property report behind `verify-properties`.

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "viewplan/kinematics.hpp"
#include "viewplan/objective.hpp"

namespace viewplan {

// Subsets of a ground set {0..n-1} as bit masks.
using SubsetMask = std::uint32_t;

inline constexpr int kMaxExhaustiveGround = 12;

class SetFunction {
 public:
  SetFunction(int ground_size, std::function<double(SubsetMask)> fn);

  int ground_size() const { return ground_size_; }
  SubsetMask full_set() const {
    return ground_size_ == 32 ? ~SubsetMask{0}
                              : (SubsetMask{1} << ground_size_) - 1;
  }
  double operator()(SubsetMask set) const { return fn_(set); }

 private:
  int ground_size_;
  std::function<double(SubsetMask)> fn_;
};

// Evaluates every subset once; later calls read the table.
SetFunction tabulate(const SetFunction& f);

// n-th derivative g(Y1; ...; Yn | X), defined recursively by
// g(Y1..Yn | X) = g(Y1..Yn-1 | X, Yn) - g(Y1..Yn-1 | X) with g(. | X) = g(X).
// The sets must be pairwise disjoint.
double discrete_derivative(const SetFunction& f, SubsetMask x,
                           std::span<const SubsetMask> ys);

enum class Direction { kIncreasing, kDecreasing };

struct Witness {
  SubsetMask x = 0;
  std::vector<SubsetMask> ys;
  double value = 0.0;
};

struct MonotonicityReport {
  int order = 1;
  Direction direction = Direction::kIncreasing;
  bool passed = true;
  std::uint64_t checked = 0;
  // Smallest derivative seen when checking "increasing", largest otherwise.
  double extreme = 0.0;
  std::optional<Witness> witness;  // worst violation, if any
};

struct CheckOptions {
  bool exhaustive = true;
  std::uint64_t trials = 1000;  // sampled mode only
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
};

// Checks the sign of every m-th derivative over disjoint (X, Y1..Ym): all of
// them when exhaustive, otherwise `trials` random tuples.
MonotonicityReport check_m_monotone(const SetFunction& f, int m,
                                    Direction direction,
                                    const CheckOptions& options = {});

// psi(sum of weights in the set). Weights must be non-negative.
SetFunction compose(std::vector<double> weights,
                    std::function<double(double)> psi);

// The objective over a ground set of trajectory assignments. Any subset is
// accepted, including several trajectories of one robot.
SetFunction srppa_set_function(
    std::shared_ptr<const SrppaObjective> objective,
    std::vector<TrajectoryAssignment> ground);

struct MicroLimits {
  int max_robots = 3;
  int max_actors = 2;
  int max_horizon = 3;
  int max_grid = 4;
};

struct MicroInstance {
  Problem problem;
  std::vector<RobotState> starts;
};

// Small random planning problem with random actor motion and camera.
MicroInstance random_micro_instance(std::mt19937_64& rng,
                                    const MicroLimits& limits = {});

// Uniformly random feasible trajectory from `start`.
TrajectoryAssignment random_trajectory(std::mt19937_64& rng, int robot,
                                       const RobotState& start,
                                       const Problem& problem);

struct PropertyCheck {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail;
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;
  bool passed() const;
};

// Normalization, monotonicity and submodularity on `trials` random
// instances; second- and third-order checks on 8-element ground sets; the
// composition and negative-control checks on plain set functions.
PropertyReport verify_properties(int trials, std::uint64_t seed);

}  // namespace viewplan
