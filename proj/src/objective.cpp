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

#include "viewplan/objective.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "viewplan/errors.hpp"

namespace viewplan {

void CameraParams::validate() const {
  if (!(fov > 0.0 && fov < 2.0 * kPi)) {
    throw DomainError("field of view must lie in (0, 2*pi)");
  }
  if (!(pixel_density > 0.0)) {
    throw DomainError("pixel density must be positive");
  }
  if (!(altitude >= 0.0)) throw DomainError("altitude must be non-negative");
}

Eigen::Vector3d robot_position(const RobotState& state, const GridSpec& grid,
                               const CameraParams& camera) {
  const Eigen::Vector2d xy = grid.position(state.cell);
  return {xy.x(), xy.y(), camera.altitude};
}

bool in_view(const Eigen::Vector3d& robot_position,
             const Eigen::Vector3d& heading, const WorldFace& face,
             const CameraParams& camera) {
  const Eigen::Vector3d d = face.center - robot_position;
  if (d.dot(face.normal) >= 0.0) return false;
  const double hx = d.x();
  const double hy = d.y();
  if (std::hypot(hx, hy) <= 1e-12) return false;
  const double along = hx * heading.x() + hy * heading.y();
  const double across = heading.x() * hy - heading.y() * hx;
  const double bearing = std::atan2(std::abs(across), along);
  return bearing <= camera.fov / 2.0 + 1e-12;
}

double pixel_contribution(const Eigen::Vector3d& robot_position,
                          const Eigen::Vector3d& heading,
                          const WorldFace& face, const CameraParams& camera) {
  const Eigen::Vector3d d = face.center - robot_position;
  const double dist = d.norm();
  if (dist <= 1e-12) {
    throw InvalidGeometryError("robot coincides with a face center");
  }
  if (!in_view(robot_position, heading, face, camera)) return 0.0;
  const double facing = -d.dot(face.normal) / (dist * dist * dist);
  // Only negative for fields of view wider than pi.
  const double centering = std::max(0.0, d.dot(heading) / dist);
  return camera.pixel_density * facing * centering;
}

double view_reward(const Face& face, double pixels) {
  if (pixels < 0.0 || std::isnan(pixels)) {
    throw DomainError("pixel density must be non-negative");
  }
  return face.weight * face.area * std::sqrt(pixels);
}

double step_path_reward(const RobotState& from, const RobotState& to,
                        double weight) {
  double r = 0.0;
  if (from.cell == to.cell) r += weight;
  if (from.yaw_index == to.yaw_index) r += weight;
  return r;
}

double path_reward(const TrajectoryAssignment& assignment, double weight) {
  double total = 0.0;
  for (std::size_t i = 1; i < assignment.states.size(); ++i) {
    total += step_path_reward(assignment.states[i - 1], assignment.states[i],
                              weight);
  }
  return total;
}

PixelLedger::PixelLedger(std::size_t face_count, int horizon)
    : faces_(face_count),
      horizon_(horizon),
      values_(face_count * static_cast<std::size_t>(horizon), 0.0) {}

void PixelLedger::add(const PixelLedger& other) {
  if (other.faces_ != faces_ || other.horizon_ != horizon_) {
    throw PreconditionError("ledger shapes differ");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
}

void check_independent(std::span<const TrajectoryAssignment> solution) {
  std::set<int> robots;
  for (const auto& a : solution) {
    if (!robots.insert(a.robot).second) {
      throw MatroidViolationError("robot " + std::to_string(a.robot) +
                                  " has more than one trajectory");
    }
  }
}

SrppaObjective::SrppaObjective(Problem problem)
    : problem_(std::move(problem)), states_(problem_.grid) {
  problem_.grid.validate();
  problem_.camera.validate();
  if (!(problem_.path_weight >= 0.0)) {
    throw DomainError("path weight must be non-negative");
  }
  const Scene& scene = problem_.scene;
  const std::size_t face_count = scene.face_count();
  face_scale_.reserve(face_count);
  for (std::size_t f = 0; f < face_count; ++f) {
    face_scale_.push_back(scene.face(f).weight * scene.face(f).area);
  }

  const int horizon = problem_.horizon();
  const std::size_t n_states = states_.size();
  offsets_.reserve(static_cast<std::size_t>(horizon) * n_states + 1);
  offsets_.push_back(0);
  std::vector<WorldFace> world(face_count);
  for (int t = 0; t < horizon; ++t) {
    for (std::size_t f = 0; f < face_count; ++f) world[f] = scene.world_face(f, t);
    for (std::size_t s = 0; s < n_states; ++s) {
      const RobotState state = states_.state(s);
      const Eigen::Vector3d pos =
          robot_position(state, problem_.grid, problem_.camera);
      const Eigen::Vector3d heading = state.heading_vector();
      for (std::size_t f = 0; f < face_count; ++f) {
        // Robots fly above the actors in practice; a coincident center has
        // nothing to see and is skipped here instead of aborting the table.
        if ((world[f].center - pos).norm() <= 1e-12) continue;
        const double c = pixel_contribution(pos, heading, world[f],
                                            problem_.camera);
        if (c > 0.0) {
          faces_.push_back(static_cast<std::uint32_t>(f));
          pixels_.push_back(c);
        }
      }
      offsets_.push_back(faces_.size());
    }
  }
}

std::span<const std::uint32_t> SrppaObjective::visible_faces(
    int t, std::size_t s) const {
  const std::size_t k = slot(t, s);
  return {faces_.data() + offsets_[k], offsets_[k + 1] - offsets_[k]};
}

std::span<const double> SrppaObjective::visible_pixels(int t,
                                                       std::size_t s) const {
  const std::size_t k = slot(t, s);
  return {pixels_.data() + offsets_[k], offsets_[k + 1] - offsets_[k]};
}

PixelLedger SrppaObjective::empty_ledger() const {
  return PixelLedger(problem_.scene.face_count(), horizon());
}

void SrppaObjective::check_assignment(
    const TrajectoryAssignment& assignment) const {
  if (assignment.states.size() != static_cast<std::size_t>(horizon())) {
    throw IndexError("trajectory for robot " +
                     std::to_string(assignment.robot) + " has " +
                     std::to_string(assignment.states.size()) +
                     " states, horizon is " + std::to_string(horizon()));
  }
  for (const auto& st : assignment.states) {
    if (!problem_.grid.contains(st.cell) || st.yaw_index < 0 ||
        st.yaw_index >= kHeadingCount) {
      throw IndexError("trajectory leaves the state space");
    }
  }
}

void SrppaObjective::accumulate(PixelLedger& ledger,
                                const TrajectoryAssignment& assignment) const {
  check_assignment(assignment);
  for (int t = 0; t < horizon(); ++t) {
    const std::size_t s =
        states_.index(assignment.states[static_cast<std::size_t>(t)]);
    const auto faces = visible_faces(t, s);
    const auto pixels = visible_pixels(t, s);
    for (std::size_t i = 0; i < faces.size(); ++i) {
      ledger.at(faces[i], t) += pixels[i];
    }
  }
}

PixelLedger SrppaObjective::ledger(
    std::span<const TrajectoryAssignment> set) const {
  PixelLedger out = empty_ledger();
  for (const auto& a : set) accumulate(out, a);
  return out;
}

std::vector<double> SrppaObjective::view_series(
    const PixelLedger& ledger) const {
  std::vector<double> series(static_cast<std::size_t>(horizon()), 0.0);
  for (int t = 0; t < horizon(); ++t) {
    double sum = 0.0;
    const auto row = ledger.step(t);
    for (std::size_t f = 0; f < row.size(); ++f) {
      sum += face_scale_[f] * std::sqrt(row[f]);
    }
    series[static_cast<std::size_t>(t)] = sum;
  }
  return series;
}

double SrppaObjective::view_value(const PixelLedger& ledger) const {
  double total = 0.0;
  for (double v : view_series(ledger)) total += v;
  return total;
}

double SrppaObjective::set_value(
    std::span<const TrajectoryAssignment> set) const {
  double path = 0.0;
  for (const auto& a : set) path += path_reward(a, problem_.path_weight);
  return path + view_value(ledger(set));
}

double SrppaObjective::objective_value(
    std::span<const TrajectoryAssignment> solution) const {
  check_independent(solution);
  return set_value(solution);
}

double SrppaObjective::marginal_gain(const TrajectoryAssignment& assignment,
                                     const PixelLedger& prior) const {
  check_assignment(assignment);
  double gain = path_reward(assignment, problem_.path_weight);
  for (int t = 0; t < horizon(); ++t) {
    const std::size_t s =
        states_.index(assignment.states[static_cast<std::size_t>(t)]);
    const auto faces = visible_faces(t, s);
    const auto pixels = visible_pixels(t, s);
    for (std::size_t i = 0; i < faces.size(); ++i) {
      const double p = prior.at(faces[i], t);
      gain += face_scale_[faces[i]] * (std::sqrt(p + pixels[i]) - std::sqrt(p));
    }
  }
  return gain;
}

RewardTable SrppaObjective::marginal_gain_table(
    const PixelLedger& prior) const {
  if (prior.face_count() != problem_.scene.face_count() ||
      prior.horizon() != horizon()) {
    throw PreconditionError("prior ledger does not match the problem");
  }
  RewardTable table(horizon(), states_.size());
  for (int t = 0; t < horizon(); ++t) {
    const auto prior_row = prior.step(t);
    for (std::size_t s = 0; s < states_.size(); ++s) {
      const auto faces = visible_faces(t, s);
      const auto pixels = visible_pixels(t, s);
      double sum = 0.0;
      for (std::size_t i = 0; i < faces.size(); ++i) {
        const double p = prior_row[faces[i]];
        sum += face_scale_[faces[i]] * (std::sqrt(p + pixels[i]) - std::sqrt(p));
      }
      table.at(t, s) = sum;
    }
  }
  return table;
}

PixelLedger pixel_ledger(std::span<const TrajectoryAssignment> set,
                         const Problem& problem) {
  const Scene& scene = problem.scene;
  PixelLedger ledger(scene.face_count(), scene.horizon());
  for (const auto& a : set) {
    if (a.states.size() != static_cast<std::size_t>(scene.horizon())) {
      throw IndexError("trajectory length does not match the horizon");
    }
    for (int t = 0; t < scene.horizon(); ++t) {
      const RobotState& st = a.states[static_cast<std::size_t>(t)];
      const Eigen::Vector3d pos = robot_position(st, problem.grid, problem.camera);
      for (std::size_t f = 0; f < scene.face_count(); ++f) {
        ledger.at(f, t) += pixel_contribution(pos, st.heading_vector(),
                                              scene.world_face(f, t),
                                              problem.camera);
      }
    }
  }
  return ledger;
}

double objective_value(std::span<const TrajectoryAssignment> solution,
                       const Problem& problem) {
  check_independent(solution);
  const PixelLedger ledger = pixel_ledger(solution, problem);
  double total = 0.0;
  for (const auto& a : solution) total += path_reward(a, problem.path_weight);
  for (int t = 0; t < problem.horizon(); ++t) {
    for (std::size_t f = 0; f < problem.scene.face_count(); ++f) {
      total += view_reward(problem.scene.face(f), ledger.at(f, t));
    }
  }
  return total;
}

}  // namespace viewplan
