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

// Actors modeled as capped hexagonal prisms that follow scripted planar
// trajectories, and the world-frame face geometry derived from them.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace viewplan {

inline constexpr double kPi = 3.14159265358979323846;

// Wraps an angle into [0, 2*pi).
double normalize_angle(double radians);

// Oriented planar polygon on an actor, expressed in the actor body frame.
struct Face {
  Eigen::Vector3d normal = Eigen::Vector3d::UnitZ();
  double area = 0.0;
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  double weight = 1.0;
  // Polygon corners, counterclockwise when viewed from the front side.
  std::vector<Eigen::Vector3d> corners;

  bool operator==(const Face&) const = default;
};

// Planar actor pose. The actor origin sits on the ground (z = 0).
struct ActorPose {
  Eigen::Vector2d position = Eigen::Vector2d::Zero();
  double yaw = 0.0;  // [0, 2*pi)

  ActorPose() = default;
  ActorPose(double x, double y, double yaw_radians);

  Eigen::Matrix3d rotation() const;
  Eigen::Vector3d origin() const { return {position.x(), position.y(), 0.0}; }

  bool operator==(const ActorPose&) const = default;
};

// A face placed in the world at one time step.
struct WorldFace {
  Eigen::Vector3d normal;
  Eigen::Vector3d center;
};

class Actor {
 public:
  Actor(int id, double radius, double height, std::vector<Face> faces,
        std::vector<ActorPose> poses);

  int id() const { return id_; }
  double radius() const { return radius_; }
  double height() const { return height_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<ActorPose>& poses() const { return poses_; }
  int horizon() const { return static_cast<int>(poses_.size()); }
  const ActorPose& pose(int t) const;

  // Face normal and center in the world frame at step t.
  WorldFace world_face(std::size_t face_index, int t) const;
  std::vector<Eigen::Vector3d> world_corners(std::size_t face_index,
                                             int t) const;

  bool operator==(const Actor&) const = default;

 private:
  int id_;
  double radius_;
  double height_;
  std::vector<Face> faces_;
  std::vector<ActorPose> poses_;
};

// Index of the first side face and of the top cap in canonical order. Side
// faces run counterclockwise from the +x-facing face; the cap comes last.
inline constexpr std::size_t kSideFaceCount = 6;
inline constexpr std::size_t kTopCapIndex = 6;

inline constexpr double kDefaultActorRadius = 0.5;
inline constexpr double kDefaultActorHeight = 1.8;

// Builds a capped hexagonal prism with edge length equal to the circumradius.
// `face_weights`, when given, overrides the weight of each of the 7 faces.
Actor build_hex_prism_actor(int id, double radius, double height,
                            double weight, std::vector<ActorPose> poses,
                            std::optional<std::vector<double>> face_weights =
                                std::nullopt);

// Global handle for a face of the scene.
struct FaceRef {
  std::size_t actor;  // position in Scene::actors()
  std::size_t face;   // position in Actor::faces()
};

class Scene {
 public:
  Scene() = default;
  // `horizon` may be omitted when there is at least one actor; otherwise it
  // must match every actor's pose count.
  explicit Scene(std::vector<Actor> actors, int horizon = -1);

  const std::vector<Actor>& actors() const { return actors_; }
  int horizon() const { return horizon_; }
  std::size_t face_count() const { return refs_.size(); }
  const FaceRef& face_ref(std::size_t global_face) const;
  const Face& face(std::size_t global_face) const;
  WorldFace world_face(std::size_t global_face, int t) const;

  // Scene holding only the listed actors, in the order given.
  Scene restricted_to(std::span<const int> actor_ids) const;

  bool operator==(const Scene& other) const {
    return horizon_ == other.horizon_ && actors_ == other.actors_;
  }

 private:
  std::vector<Actor> actors_;
  int horizon_ = 0;
  std::vector<FaceRef> refs_;
};

// Keyframe for a scripted trajectory.
struct Waypoint {
  int step = 0;
  double x = 0.0;
  double y = 0.0;
  double yaw = 0.0;
};

// Samples a waypoint list at every step 0..horizon-1. Position and yaw are
// interpolated linearly (yaw along the shorter arc) and held constant before
// the first and after the last keyframe.
std::vector<ActorPose> resample_waypoints(std::span<const Waypoint> waypoints,
                                          int horizon);

}  // namespace viewplan
