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

#include <cmath>

#include <Eigen/Geometry>
#include <doctest.h>

#include "viewplan/errors.hpp"
#include "viewplan/scene.hpp"

using namespace viewplan;
using doctest::Approx;

namespace {

Actor still(double yaw, double r = 1.0, double h = 2.0) {
  return build_hex_prism_actor(0, r, h, 1.0, {ActorPose(0, 0, yaw)});
}

}  // namespace

TEST_CASE("hex prism areas") {
  const Actor a = still(0.0, 1.0, 2.0);
  REQUIRE(a.faces().size() == 7);
  for (std::size_t k = 0; k < kSideFaceCount; ++k) {
    CHECK(a.faces()[k].area == Approx(2.0));
  }
  CHECK(a.faces()[kTopCapIndex].area == Approx(2.598).epsilon(1e-3));
  CHECK(a.faces()[kTopCapIndex].area == Approx(1.5 * std::sqrt(3.0)));
}

TEST_CASE("canonical face order and normals") {
  const Actor a = still(0.0, 1.0, 1.0);
  CHECK(a.faces()[0].normal.isApprox(Eigen::Vector3d(1, 0, 0)));
  CHECK(a.faces()[1].normal.isApprox(
      Eigen::Vector3d(std::cos(kPi / 3), std::sin(kPi / 3), 0)));
  CHECK(a.faces()[kTopCapIndex].normal.isApprox(Eigen::Vector3d::UnitZ()));
  for (const auto& f : a.faces()) {
    CHECK(f.normal.norm() == Approx(1.0).epsilon(1e-12));
    CHECK(f.weight == 1.0);
  }
  // side centers at the apothem, half height; cap on top
  CHECK(a.faces()[0].center.isApprox(Eigen::Vector3d(std::sqrt(3.0) / 2, 0, 0.5)));
  CHECK(a.faces()[kTopCapIndex].center.isApprox(Eigen::Vector3d(0, 0, 1.0)));
}

TEST_CASE("corners agree with centers, normals and areas") {
  const Actor a = still(0.7, 0.5, 1.8);
  for (const auto& f : a.faces()) {
    Eigen::Vector3d c = Eigen::Vector3d::Zero();
    for (const auto& p : f.corners) c += p;
    c /= static_cast<double>(f.corners.size());
    CHECK((c - f.center).norm() < 1e-12);
    // polygon area by the cross-product fan, oriented by the normal
    Eigen::Vector3d twice = Eigen::Vector3d::Zero();
    for (std::size_t i = 0; i < f.corners.size(); ++i) {
      twice += f.corners[i].cross(f.corners[(i + 1) % f.corners.size()]);
    }
    CHECK(0.5 * twice.dot(f.normal) == Approx(f.area).epsilon(1e-12));
  }
}

TEST_CASE("bad actor geometry") {
  CHECK_THROWS_AS(build_hex_prism_actor(0, 0.0, 1.0, 1.0, {ActorPose()}),
                  InvalidGeometryError);
  CHECK_THROWS_AS(build_hex_prism_actor(0, 1.0, -1.0, 1.0, {ActorPose()}),
                  InvalidGeometryError);
  CHECK_THROWS_AS(build_hex_prism_actor(0, 1.0, 1.0, 1.0, {}), Error);
  CHECK_THROWS(build_hex_prism_actor(0, 1.0, 1.0, -1.0, {ActorPose()}));
}

TEST_CASE("face weight overrides") {
  std::vector<double> w = {1, 2, 3, 4, 5, 6, 7};
  const Actor a = build_hex_prism_actor(0, 0.5, 1.8, 1.0, {ActorPose()}, w);
  for (std::size_t k = 0; k < 7; ++k) CHECK(a.faces()[k].weight == w[k]);
  CHECK_THROWS(build_hex_prism_actor(0, 0.5, 1.8, 1.0, {ActorPose()},
                                     std::vector<double>{1, 2}));
}

TEST_CASE("world_face transforms") {
  Face f;
  f.normal = {1, 0, 0};
  f.center = {1, 0, 0.5};
  f.area = 1.0;
  f.corners = {{1, -0.5, 0}, {1, 0.5, 0}, {1, 0.5, 1}, {1, -0.5, 1}};

  const Actor a0(0, 1.0, 1.0, {f}, {ActorPose(3, 4, 0.0)});
  CHECK(a0.world_face(0, 0).center.isApprox(Eigen::Vector3d(4, 4, 0.5)));

  const Actor half(0, 1.0, 1.0, {f}, {ActorPose(0, 0, kPi)});
  CHECK((half.world_face(0, 0).normal - Eigen::Vector3d(-1, 0, 0)).norm() < 1e-12);

  const Actor quarter(0, 1.0, 1.0, {f}, {ActorPose(0, 0, kPi / 2)});
  const Eigen::Vector3d offset = quarter.world_face(0, 0).center;
  CHECK((offset - Eigen::Vector3d(0, 1, 0.5)).norm() < 1e-12);

  CHECK_THROWS_AS(a0.world_face(0, 1), IndexError);
  CHECK_THROWS_AS(a0.world_face(3, 0), IndexError);
  CHECK_THROWS_AS(a0.pose(-1), IndexError);
}

TEST_CASE("rigid motion keeps unit normals and face distances") {
  std::vector<ActorPose> poses;
  for (int t = 0; t < 20; ++t) poses.emplace_back(0.3 * t, -0.2 * t, 0.41 * t);
  const Actor a = build_hex_prism_actor(0, 0.5, 1.8, 1.0, poses);
  for (int t = 0; t < 20; ++t) {
    CHECK(a.world_face(kTopCapIndex, t).normal.isApprox(Eigen::Vector3d::UnitZ()));
    for (std::size_t i = 0; i < 7; ++i) {
      CHECK(a.world_face(i, t).normal.norm() == Approx(1.0).epsilon(1e-12));
      for (std::size_t j = 0; j < 7; ++j) {
        const double d0 =
            (a.world_face(i, 0).center - a.world_face(j, 0).center).norm();
        const double dt =
            (a.world_face(i, t).center - a.world_face(j, t).center).norm();
        CHECK(std::abs(d0 - dt) < 1e-9);
      }
    }
  }
}

TEST_CASE("scene indexing") {
  const Actor a = build_hex_prism_actor(3, 0.5, 1.8, 1.0, {ActorPose(), ActorPose()});
  const Actor b = build_hex_prism_actor(5, 0.5, 1.8, 2.0,
                                        {ActorPose(2, 0, 0), ActorPose(3, 0, 0)});
  const Scene s({a, b});
  CHECK(s.horizon() == 2);
  CHECK(s.face_count() == 14);
  CHECK(s.face_ref(8).actor == 1);
  CHECK(s.face_ref(8).face == 1);
  CHECK(s.face(8).weight == 2.0);
  CHECK(s.world_face(7, 1).center.isApprox(b.world_face(0, 1).center));

  const std::vector<int> only = {5};
  const Scene r = s.restricted_to(only);
  CHECK(r.actors().size() == 1);
  CHECK(r.actors()[0].id() == 5);
  CHECK(r.horizon() == 2);

  CHECK_THROWS(Scene({a, a}));  // duplicate id
  const Actor short_a = build_hex_prism_actor(9, 0.5, 1.8, 1.0, {ActorPose()});
  CHECK_THROWS(Scene({a, short_a}));  // horizon mismatch
  CHECK_THROWS(Scene(std::vector<Actor>{}));  // no actors, no horizon
  CHECK(Scene(std::vector<Actor>{}, 4).horizon() == 4);
}

TEST_CASE("waypoint resampling") {
  const std::vector<Waypoint> w = {{2, 0.0, 0.0, 0.1}, {6, 4.0, -2.0, 2 * kPi - 0.1}};
  const auto poses = resample_waypoints(w, 9);
  REQUIRE(poses.size() == 9);
  CHECK(poses[0].position.isApprox(Eigen::Vector2d(0, 0)));  // held before
  CHECK(poses[4].position.isApprox(Eigen::Vector2d(2, -1)));
  CHECK(poses[8].position.isApprox(Eigen::Vector2d(4, -2)));  // held after
  // yaw takes the short way through 0
  CHECK(normalize_angle(poses[4].yaw) == Approx(0.0).epsilon(1e-12));
}

TEST_CASE("normalize_angle range") {
  CHECK(normalize_angle(-kPi / 2) == Approx(1.5 * kPi));
  CHECK(normalize_angle(5 * kPi) == Approx(kPi));
  CHECK(normalize_angle(0.0) == 0.0);
  const double x = normalize_angle(-1e-17);
  CHECK(x >= 0.0);
  CHECK(x < 2 * kPi);
}
