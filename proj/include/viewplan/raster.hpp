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

// Id-buffer software rasterizer used to count the pixels each actor face
// covers in a perspective camera, with occlusion.

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "viewplan/kinematics.hpp"
#include "viewplan/objective.hpp"
#include "viewplan/scene.hpp"

namespace viewplan {

inline constexpr std::uint32_t kNoFace = 0xFFFFFFFFu;

// Pinhole camera with square pixels. The horizontal field of view fixes the
// focal length; the vertical one follows from the aspect ratio.
struct RasterCamera {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  double yaw = 0.0;
  double pitch = 0.0;  // negative tilts the camera down
  double fov = kPi / 2.0;
  int width = 640;
  int height = 480;

  // Camera of a robot at its flight altitude, tilted down by the
  // declination.
  static RasterCamera from_state(const RobotState& state, const GridSpec& grid,
                                 const CameraParams& camera, int width,
                                 int height);

  double focal_length() const;
};

struct FaceImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint32_t> ids;  // row-major, kNoFace where empty
  std::vector<double> depth;       // distance along the optical axis

  std::uint32_t id_at(int x, int y) const {
    return ids[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
               static_cast<std::size_t>(x)];
  }
  // Pixels per face id, for ids below `face_count`.
  std::vector<std::uint64_t> pixel_counts(std::size_t face_count) const;
};

// A planar convex polygon in world coordinates. Only its front side, the
// side `normal` points to, is drawn.
struct RasterPolygon {
  std::uint32_t id = 0;
  Eigen::Vector3d normal = Eigen::Vector3d::UnitZ();
  std::vector<Eigen::Vector3d> corners;
};

FaceImage rasterize_polygons(const RasterCamera& camera,
                             std::span<const RasterPolygon> polygons);

// Every actor face at step t, with ids equal to global face indices.
std::vector<RasterPolygon> scene_polygons(const Scene& scene, int t);

std::vector<FaceImage> rasterize(std::span<const RasterCamera> cameras,
                                 const Scene& scene, int t);

// Writes the id map as a binary PPM with one color per face.
void write_ppm(const FaceImage& image, const std::filesystem::path& path);

}  // namespace viewplan
