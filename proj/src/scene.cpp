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

#include "viewplan/scene.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include <Eigen/Geometry>

#include "viewplan/errors.hpp"

namespace viewplan {

double normalize_angle(double radians) {
  double wrapped = std::fmod(radians, 2.0 * kPi);
  if (wrapped < 0.0) wrapped += 2.0 * kPi;
  // fmod of a tiny negative value can round up to exactly 2*pi.
  if (wrapped >= 2.0 * kPi) wrapped = 0.0;
  return wrapped;
}

ActorPose::ActorPose(double x, double y, double yaw_radians)
    : position(x, y), yaw(normalize_angle(yaw_radians)) {}

Eigen::Matrix3d ActorPose::rotation() const {
  return Eigen::AngleAxisd(yaw, Eigen::Vector3d::UnitZ()).toRotationMatrix();
}

Actor::Actor(int id, double radius, double height, std::vector<Face> faces,
             std::vector<ActorPose> poses)
    : id_(id),
      radius_(radius),
      height_(height),
      faces_(std::move(faces)),
      poses_(std::move(poses)) {
  if (!(radius_ > 0.0) || !(height_ > 0.0)) {
    throw InvalidGeometryError("actor " + std::to_string(id_) +
                               ": radius and height must be positive");
  }
  if (poses_.empty()) {
    throw InvalidGeometryError("actor " + std::to_string(id_) +
                               ": empty pose sequence");
  }
  for (const Face& face : faces_) {
    if (std::abs(face.normal.norm() - 1.0) > 1e-9 || !(face.area > 0.0) ||
        !(face.weight >= 0.0)) {
      throw InvalidGeometryError("actor " + std::to_string(id_) +
                                 ": malformed face");
    }
  }
}

const ActorPose& Actor::pose(int t) const {
  if (t < 0 || t >= horizon()) {
    throw IndexError("time step " + std::to_string(t) + " outside horizon " +
                     std::to_string(horizon()));
  }
  return poses_[static_cast<std::size_t>(t)];
}

WorldFace Actor::world_face(std::size_t face_index, int t) const {
  if (face_index >= faces_.size()) {
    throw IndexError("face index " + std::to_string(face_index) +
                     " out of range");
  }
  const ActorPose& p = pose(t);
  const Eigen::Matrix3d rot = p.rotation();
  const Face& face = faces_[face_index];
  return {rot * face.normal, p.origin() + rot * face.center};
}

std::vector<Eigen::Vector3d> Actor::world_corners(std::size_t face_index,
                                                  int t) const {
  if (face_index >= faces_.size()) {
    throw IndexError("face index " + std::to_string(face_index) +
                     " out of range");
  }
  const ActorPose& p = pose(t);
  const Eigen::Matrix3d rot = p.rotation();
  std::vector<Eigen::Vector3d> out;
  out.reserve(faces_[face_index].corners.size());
  for (const auto& c : faces_[face_index].corners) {
    out.push_back(p.origin() + rot * c);
  }
  return out;
}

Actor build_hex_prism_actor(int id, double radius, double height,
                            double weight, std::vector<ActorPose> poses,
                            std::optional<std::vector<double>> face_weights) {
  if (!(radius > 0.0) || !(height > 0.0)) {
    throw InvalidGeometryError("hex prism needs positive radius and height");
  }
  if (!(weight >= 0.0)) {
    throw InvalidGeometryError("actor weight must be non-negative");
  }
  if (face_weights && face_weights->size() != kSideFaceCount + 1) {
    throw InvalidGeometryError("expected 7 per-face weights");
  }

  // Hexagon vertices sit at 30 + 60k degrees so that side face k faces
  // 60k degrees.
  std::vector<Eigen::Vector3d> ring;
  for (std::size_t k = 0; k < kSideFaceCount; ++k) {
    const double a = kPi / 6.0 + static_cast<double>(k) * kPi / 3.0;
    ring.emplace_back(radius * std::cos(a), radius * std::sin(a), 0.0);
  }
  const double apothem = radius * std::sqrt(3.0) / 2.0;

  std::vector<Face> faces;
  for (std::size_t k = 0; k < kSideFaceCount; ++k) {
    const double a = static_cast<double>(k) * kPi / 3.0;
    Face face;
    face.normal = Eigen::Vector3d(std::cos(a), std::sin(a), 0.0);
    face.area = radius * height;
    face.center = Eigen::Vector3d(apothem * std::cos(a),
                                  apothem * std::sin(a), height / 2.0);
    face.weight = weight;
    const Eigen::Vector3d& lo = ring[(k + kSideFaceCount - 1) % kSideFaceCount];
    const Eigen::Vector3d& hi = ring[k];
    const Eigen::Vector3d up(0.0, 0.0, height);
    face.corners = {lo, hi, hi + up, lo + up};
    faces.push_back(std::move(face));
  }

  Face cap;
  cap.normal = Eigen::Vector3d::UnitZ();
  cap.area = 1.5 * std::sqrt(3.0) * radius * radius;
  cap.center = Eigen::Vector3d(0.0, 0.0, height);
  cap.weight = weight;
  for (const auto& v : ring) cap.corners.push_back(v + Eigen::Vector3d(0, 0, height));
  faces.push_back(std::move(cap));

  if (face_weights) {
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (!((*face_weights)[i] >= 0.0)) {
        throw InvalidGeometryError("face weights must be non-negative");
      }
      faces[i].weight = (*face_weights)[i];
    }
  }
  return Actor(id, radius, height, std::move(faces), std::move(poses));
}

Scene::Scene(std::vector<Actor> actors, int horizon)
    : actors_(std::move(actors)), horizon_(horizon) {
  if (horizon_ < 0) {
    if (actors_.empty()) {
      throw InvalidGeometryError("a scene without actors needs a horizon");
    }
    horizon_ = actors_.front().horizon();
  }
  if (horizon_ == 0) throw InvalidGeometryError("horizon must be positive");
  std::set<int> ids;
  for (std::size_t a = 0; a < actors_.size(); ++a) {
    if (!ids.insert(actors_[a].id()).second) {
      throw InvalidGeometryError("duplicate actor id " +
                                 std::to_string(actors_[a].id()));
    }
    if (actors_[a].horizon() != horizon_) {
      throw InvalidGeometryError("actors disagree on the horizon");
    }
    for (std::size_t f = 0; f < actors_[a].faces().size(); ++f) {
      refs_.push_back({a, f});
    }
  }
}

const FaceRef& Scene::face_ref(std::size_t global_face) const {
  if (global_face >= refs_.size()) {
    throw IndexError("face " + std::to_string(global_face) + " out of range");
  }
  return refs_[global_face];
}

const Face& Scene::face(std::size_t global_face) const {
  const FaceRef& ref = face_ref(global_face);
  return actors_[ref.actor].faces()[ref.face];
}

WorldFace Scene::world_face(std::size_t global_face, int t) const {
  const FaceRef& ref = face_ref(global_face);
  return actors_[ref.actor].world_face(ref.face, t);
}

Scene Scene::restricted_to(std::span<const int> actor_ids) const {
  std::vector<Actor> kept;
  for (int id : actor_ids) {
    auto it = std::find_if(actors_.begin(), actors_.end(),
                           [id](const Actor& a) { return a.id() == id; });
    if (it == actors_.end()) {
      throw IndexError("no actor with id " + std::to_string(id));
    }
    kept.push_back(*it);
  }
  return Scene(std::move(kept), horizon_);
}

std::vector<ActorPose> resample_waypoints(std::span<const Waypoint> waypoints,
                                          int horizon) {
  if (waypoints.empty()) throw InvalidGeometryError("no waypoints");
  if (horizon <= 0) throw InvalidGeometryError("horizon must be positive");
  for (std::size_t i = 1; i < waypoints.size(); ++i) {
    if (waypoints[i].step <= waypoints[i - 1].step) {
      throw InvalidGeometryError("waypoint steps must strictly increase");
    }
  }
  std::vector<ActorPose> poses;
  poses.reserve(static_cast<std::size_t>(horizon));
  std::size_t seg = 0;
  for (int t = 0; t < horizon; ++t) {
    if (t <= waypoints.front().step) {
      const Waypoint& w = waypoints.front();
      poses.emplace_back(w.x, w.y, w.yaw);
      continue;
    }
    if (t >= waypoints.back().step) {
      const Waypoint& w = waypoints.back();
      poses.emplace_back(w.x, w.y, w.yaw);
      continue;
    }
    while (waypoints[seg + 1].step < t) ++seg;
    const Waypoint& a = waypoints[seg];
    const Waypoint& b = waypoints[seg + 1];
    const double s = static_cast<double>(t - a.step) /
                     static_cast<double>(b.step - a.step);
    double dyaw = std::remainder(b.yaw - a.yaw, 2.0 * kPi);
    poses.emplace_back(a.x + s * (b.x - a.x), a.y + s * (b.y - a.y),
                       a.yaw + s * dyaw);
  }
  return poses;
}

}  // namespace viewplan
