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

// The square-root pixels-per-area objective: the visibility gate, per-robot
// pixel density, per-face view reward, path reward and marginal gains over
// sets of trajectory assignments.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "viewplan/kinematics.hpp"
#include "viewplan/scene.hpp"

namespace viewplan {

struct CameraParams {
  double fov = kPi / 2.0;          // horizontal field of view, radians
  double declination = kPi / 12.0;  // downward tilt, used by the renderer only
  double altitude = 3.0;           // flight height, m
  double pixel_density = 1e6;      // pixels per m^2 at 1 m

  void validate() const;
  bool operator==(const CameraParams&) const = default;
};

// Everything needed to score trajectories against a scripted scene.
struct Problem {
  Scene scene;
  GridSpec grid;
  CameraParams camera;
  double path_weight = 1.0;

  int horizon() const { return scene.horizon(); }
  bool operator==(const Problem&) const = default;
};

Eigen::Vector3d robot_position(const RobotState& state, const GridSpec& grid,
                               const CameraParams& camera);

// Face center within half the field of view of the heading (horizontal
// bearing only) and the face front side turned toward the robot.
bool in_view(const Eigen::Vector3d& robot_position,
             const Eigen::Vector3d& heading, const WorldFace& face,
             const CameraParams& camera);

// alpha * (-d.n)/|d|^3 * (d.h)/|d| for faces in view, 0 otherwise, where d
// runs from the robot to the face center. Throws InvalidGeometryError when
// the robot sits on the face center.
double pixel_contribution(const Eigen::Vector3d& robot_position,
                          const Eigen::Vector3d& heading,
                          const WorldFace& face, const CameraParams& camera);

// w * A * sqrt(pixels).
double view_reward(const Face& face, double pixels);

// `weight` per transition that keeps the cell plus `weight` per transition
// that keeps the heading.
double path_reward(const TrajectoryAssignment& assignment, double weight);
double step_path_reward(const RobotState& from, const RobotState& to,
                        double weight);

// Accumulated pixel density per (face, step) for some set of assignments.
class PixelLedger {
 public:
  PixelLedger() = default;
  PixelLedger(std::size_t face_count, int horizon);

  std::size_t face_count() const { return faces_; }
  int horizon() const { return horizon_; }
  double at(std::size_t face, int t) const { return values_[slot(face, t)]; }
  double& at(std::size_t face, int t) { return values_[slot(face, t)]; }
  std::span<const double> step(int t) const {
    return {values_.data() + static_cast<std::size_t>(t) * faces_, faces_};
  }

  void add(const PixelLedger& other);
  bool operator==(const PixelLedger&) const = default;

 private:
  std::size_t slot(std::size_t face, int t) const {
    return static_cast<std::size_t>(t) * faces_ + face;
  }

  std::size_t faces_ = 0;
  int horizon_ = 0;
  std::vector<double> values_;
};

// Per-(step, state) scalar table.
class RewardTable {
 public:
  RewardTable(int horizon, std::size_t states)
      : horizon_(horizon),
        states_(states),
        values_(static_cast<std::size_t>(horizon) * states, 0.0) {}

  int horizon() const { return horizon_; }
  std::size_t state_count() const { return states_; }
  double at(int t, std::size_t s) const {
    return values_[static_cast<std::size_t>(t) * states_ + s];
  }
  double& at(int t, std::size_t s) {
    return values_[static_cast<std::size_t>(t) * states_ + s];
  }

 private:
  int horizon_;
  std::size_t states_;
  std::vector<double> values_;
};

// Objective evaluator with a precomputed table of nonzero pixel
// contributions for every (step, robot state). Immutable after
// construction.
class SrppaObjective {
 public:
  explicit SrppaObjective(Problem problem);

  const Problem& problem() const { return problem_; }
  const StateSpace& states() const { return states_; }
  int horizon() const { return problem_.horizon(); }

  // Faces with nonzero contribution from state `s` at step `t`, in
  // ascending face order, and the matching contributions.
  std::span<const std::uint32_t> visible_faces(int t, std::size_t s) const;
  std::span<const double> visible_pixels(int t, std::size_t s) const;

  PixelLedger empty_ledger() const;
  void accumulate(PixelLedger& ledger,
                  const TrajectoryAssignment& assignment) const;
  PixelLedger ledger(std::span<const TrajectoryAssignment> set) const;

  std::vector<double> view_series(const PixelLedger& ledger) const;
  double view_value(const PixelLedger& ledger) const;

  // Objective for any subset of the ground set (no matroid check).
  double set_value(std::span<const TrajectoryAssignment> set) const;
  // Objective for a team solution; throws MatroidViolationError if a robot
  // appears twice.
  double objective_value(std::span<const TrajectoryAssignment> solution) const;

  // g(x | prior) where `prior` is the ledger of the conditioning set.
  double marginal_gain(const TrajectoryAssignment& assignment,
                       const PixelLedger& prior) const;

  // Per-step view gain of occupying each state given `prior`. Summing the
  // entries along a trajectory and adding its path reward gives its exact
  // marginal gain.
  RewardTable marginal_gain_table(const PixelLedger& prior) const;

 private:
  void check_assignment(const TrajectoryAssignment& assignment) const;
  std::size_t slot(int t, std::size_t s) const {
    return static_cast<std::size_t>(t) * states_.size() + s;
  }

  Problem problem_;
  StateSpace states_;
  std::vector<double> face_scale_;  // w_f * A_f
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> faces_;
  std::vector<double> pixels_;
};

// Reference evaluation that recomputes every contribution from geometry.
PixelLedger pixel_ledger(std::span<const TrajectoryAssignment> set,
                         const Problem& problem);
double objective_value(std::span<const TrajectoryAssignment> solution,
                       const Problem& problem);

// Throws MatroidViolationError if two assignments share a robot.
void check_independent(std::span<const TrajectoryAssignment> solution);

}  // namespace viewplan
