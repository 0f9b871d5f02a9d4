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

#include "viewplan/raster.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include <Eigen/Geometry>

#include "viewplan/errors.hpp"

namespace viewplan {

namespace {

constexpr double kNearPlane = 1e-3;

struct CameraFrame {
  Eigen::Vector3d origin;
  Eigen::Vector3d right;
  Eigen::Vector3d down;
  Eigen::Vector3d forward;

  Eigen::Vector3d to_camera(const Eigen::Vector3d& p) const {
    const Eigen::Vector3d d = p - origin;
    return {right.dot(d), down.dot(d), forward.dot(d)};
  }
};

CameraFrame frame_of(const RasterCamera& cam) {
  CameraFrame f;
  f.origin = cam.position;
  const double cp = std::cos(cam.pitch);
  f.forward = Eigen::Vector3d(std::cos(cam.yaw) * cp, std::sin(cam.yaw) * cp,
                              std::sin(cam.pitch));
  f.right = Eigen::Vector3d(std::sin(cam.yaw), -std::cos(cam.yaw), 0.0);
  f.down = f.forward.cross(f.right);
  return f;
}

// Sutherland-Hodgman against z >= near.
std::vector<Eigen::Vector3d> clip_near(const std::vector<Eigen::Vector3d>& in) {
  std::vector<Eigen::Vector3d> out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const Eigen::Vector3d& a = in[i];
    const Eigen::Vector3d& b = in[(i + 1) % in.size()];
    const bool a_in = a.z() >= kNearPlane;
    const bool b_in = b.z() >= kNearPlane;
    if (a_in) out.push_back(a);
    if (a_in != b_in) {
      const double s = (kNearPlane - a.z()) / (b.z() - a.z());
      out.push_back(a + s * (b - a));
    }
  }
  return out;
}

struct ScreenVertex {
  double x;
  double y;
  double inv_z;
};

void draw_triangle(FaceImage& img, std::uint32_t id, const ScreenVertex& a,
                   const ScreenVertex& b, const ScreenVertex& c) {
  const double area = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  if (std::abs(area) < 1e-12) return;
  const int x0 = std::max(0, static_cast<int>(std::floor(std::min({a.x, b.x, c.x}))));
  const int x1 = std::min(img.width - 1,
                          static_cast<int>(std::ceil(std::max({a.x, b.x, c.x}))));
  const int y0 = std::max(0, static_cast<int>(std::floor(std::min({a.y, b.y, c.y}))));
  const int y1 = std::min(img.height - 1,
                          static_cast<int>(std::ceil(std::max({a.y, b.y, c.y}))));
  const double inv_area = 1.0 / area;
  for (int py = y0; py <= y1; ++py) {
    const double sy = py + 0.5;
    for (int px = x0; px <= x1; ++px) {
      const double sx = px + 0.5;
      const double w0 = ((b.x - sx) * (c.y - sy) - (b.y - sy) * (c.x - sx)) * inv_area;
      const double w1 = ((c.x - sx) * (a.y - sy) - (c.y - sy) * (a.x - sx)) * inv_area;
      const double w2 = 1.0 - w0 - w1;
      if (w0 < 0.0 || w1 < 0.0 || w2 < 0.0) continue;
      const double inv_z = w0 * a.inv_z + w1 * b.inv_z + w2 * c.inv_z;
      if (!(inv_z > 0.0)) continue;
      const double z = 1.0 / inv_z;
      const std::size_t k = static_cast<std::size_t>(py) * static_cast<std::size_t>(img.width) +
                            static_cast<std::size_t>(px);
      if (z < img.depth[k]) {
        img.depth[k] = z;
        img.ids[k] = id;
      }
    }
  }
}

}  // namespace

RasterCamera RasterCamera::from_state(const RobotState& state,
                                      const GridSpec& grid,
                                      const CameraParams& camera, int width,
                                      int height) {
  RasterCamera cam;
  cam.position = robot_position(state, grid, camera);
  cam.yaw = state.heading();
  cam.pitch = -camera.declination;
  cam.fov = camera.fov;
  cam.width = width;
  cam.height = height;
  return cam;
}

double RasterCamera::focal_length() const {
  return 0.5 * width / std::tan(0.5 * fov);
}

std::vector<std::uint64_t> FaceImage::pixel_counts(
    std::size_t face_count) const {
  std::vector<std::uint64_t> counts(face_count, 0);
  for (std::uint32_t id : ids) {
    if (id != kNoFace && id < face_count) ++counts[id];
  }
  return counts;
}

FaceImage rasterize_polygons(const RasterCamera& camera,
                             std::span<const RasterPolygon> polygons) {
  if (!(camera.fov > 0.0 && camera.fov < kPi)) {
    throw InvalidGeometryError("raster camera needs a field of view in (0, pi)");
  }
  if (camera.width <= 0 || camera.height <= 0) {
    throw InvalidGeometryError("image size must be positive");
  }
  FaceImage img;
  img.width = camera.width;
  img.height = camera.height;
  const auto n = static_cast<std::size_t>(camera.width) *
                 static_cast<std::size_t>(camera.height);
  img.ids.assign(n, kNoFace);
  img.depth.assign(n, std::numeric_limits<double>::infinity());

  const CameraFrame frame = frame_of(camera);
  const double focal = camera.focal_length();
  const double cx = 0.5 * camera.width;
  const double cy = 0.5 * camera.height;

  for (const RasterPolygon& poly : polygons) {
    if (poly.corners.size() < 3) continue;
    // Back faces: the camera must sit on the side the normal points to.
    if (poly.normal.dot(poly.corners.front() - camera.position) >= 0.0) continue;
    std::vector<Eigen::Vector3d> local;
    local.reserve(poly.corners.size());
    for (const auto& c : poly.corners) local.push_back(frame.to_camera(c));
    const auto clipped = clip_near(local);
    if (clipped.size() < 3) continue;
    std::vector<ScreenVertex> screen;
    screen.reserve(clipped.size());
    for (const auto& p : clipped) {
      screen.push_back({cx + focal * p.x() / p.z(), cy + focal * p.y() / p.z(),
                        1.0 / p.z()});
    }
    for (std::size_t i = 1; i + 1 < screen.size(); ++i) {
      draw_triangle(img, poly.id, screen[0], screen[i], screen[i + 1]);
    }
  }
  return img;
}

std::vector<RasterPolygon> scene_polygons(const Scene& scene, int t) {
  std::vector<RasterPolygon> out;
  out.reserve(scene.face_count());
  for (std::size_t f = 0; f < scene.face_count(); ++f) {
    const FaceRef& ref = scene.face_ref(f);
    const Actor& actor = scene.actors()[ref.actor];
    RasterPolygon poly;
    poly.id = static_cast<std::uint32_t>(f);
    poly.normal = actor.world_face(ref.face, t).normal;
    poly.corners = actor.world_corners(ref.face, t);
    out.push_back(std::move(poly));
  }
  return out;
}

std::vector<FaceImage> rasterize(std::span<const RasterCamera> cameras,
                                 const Scene& scene, int t) {
  const auto polygons = scene_polygons(scene, t);
  std::vector<FaceImage> out;
  out.reserve(cameras.size());
  for (const auto& cam : cameras) out.push_back(rasterize_polygons(cam, polygons));
  return out;
}

void write_ppm(const FaceImage& image, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << "P6\n" << image.width << ' ' << image.height << "\n255\n";
  for (std::uint32_t id : image.ids) {
    unsigned char rgb[3] = {0, 0, 0};
    if (id != kNoFace) {
      // Spread consecutive ids across the color cube.
      const std::uint32_t h = (id + 1) * 2654435761u;
      rgb[0] = static_cast<unsigned char>(64 + (h >> 24) % 192);
      rgb[1] = static_cast<unsigned char>(64 + (h >> 16) % 192);
      rgb[2] = static_cast<unsigned char>(64 + (h >> 8) % 192);
    }
    out.write(reinterpret_cast<const char*>(rgb), 3);
  }
}

}  // namespace viewplan
