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

// The eight built-in fixtures. Coordinates are hand-authored to reproduce
// the topology of each behavior (clusters, crossings, splits, merges); they
// are approximations, not published data.

#include <cmath>
#include <functional>
#include <utility>

#include "viewplan/scenario.hpp"

namespace viewplan {

namespace {

constexpr int kHorizon = 80;
constexpr double kPathWeight = 1.0;

using Key = std::pair<int, Eigen::Vector2d>;

// Positions at every step from keyframes, linear in between.
std::vector<Eigen::Vector2d> keyframed(const std::vector<Key>& keys) {
  std::vector<Waypoint> wps;
  for (const auto& [step, p] : keys) wps.push_back({step, p.x(), p.y(), 0.0});
  std::vector<Eigen::Vector2d> out;
  for (const ActorPose& pose : resample_waypoints(wps, kHorizon)) {
    out.push_back(pose.position);
  }
  return out;
}

std::vector<Eigen::Vector2d> sampled(
    const std::function<Eigen::Vector2d(int)>& at) {
  std::vector<Eigen::Vector2d> out;
  for (int t = 0; t < kHorizon; ++t) out.push_back(at(t));
  return out;
}

// Actors face their direction of travel and keep their last heading while
// standing still.
std::vector<ActorPose> facing_motion(const std::vector<Eigen::Vector2d>& path,
                                     double initial_yaw) {
  std::vector<ActorPose> poses;
  double yaw = initial_yaw;
  for (std::size_t t = 0; t < path.size(); ++t) {
    const std::size_t next = std::min(t + 1, path.size() - 1);
    const std::size_t prev = next == t ? (t == 0 ? 0 : t - 1) : t;
    const Eigen::Vector2d v = path[next] - path[prev];
    if (v.norm() > 1e-6) yaw = std::atan2(v.y(), v.x());
    poses.emplace_back(path[t].x(), path[t].y(), yaw);
  }
  return poses;
}

std::vector<ActorPose> standing(double x, double y, double yaw) {
  return std::vector<ActorPose>(kHorizon, ActorPose(x, y, yaw));
}

Actor actor(int id, std::vector<ActorPose> poses, double weight = 1.0) {
  return build_hex_prism_actor(id, kDefaultActorRadius, kDefaultActorHeight,
                               weight, std::move(poses));
}

struct Bounds {
  int xmin, xmax, ymin, ymax;  // world meters, 1 m cells
};

Scenario make(std::string name, std::string description, int robots,
              std::uint64_t seed, Bounds grid, Bounds start,
              std::vector<Actor> actors) {
  Scenario s;
  s.name = std::move(name);
  s.description = std::move(description);
  s.problem.grid.origin = {grid.xmin, grid.ymin};
  s.problem.grid.resolution = 1.0;
  s.problem.grid.nx = grid.xmax - grid.xmin + 1;
  s.problem.grid.ny = grid.ymax - grid.ymin + 1;
  s.problem.path_weight = kPathWeight;
  s.problem.scene = Scene(std::move(actors), kHorizon);
  s.robot_count = robots;
  s.start_seed = seed;
  s.start_region = StartRegion{{start.xmin - grid.xmin, start.ymin - grid.ymin},
                               {start.xmax - grid.xmin, start.ymax - grid.ymin}};
  s.starts = random_starts(s.problem.grid, robots, seed, s.start_region);
  return s;
}

Scenario cluster() {
  const std::vector<std::array<double, 3>> spots = {
      {0.0, 0.0, 0.3},   {1.2, 0.3, 1.9}, {-1.0, 0.8, 4.0},
      {0.3, -1.2, 5.2},  {-0.7, -0.9, 2.7}, {0.9, 1.2, 0.9}};
  std::vector<Actor> actors;
  for (std::size_t i = 0; i < spots.size(); ++i) {
    actors.push_back(actor(static_cast<int>(i),
                           standing(spots[i][0], spots[i][1], spots[i][2])));
  }
  return make("cluster", "Six stationary actors in a tight cluster.", 4, 11,
              {-9, 9, -9, 9}, {-6, 6, -6, 6}, std::move(actors));
}

Scenario cross_mix() {
  // Three pairs start on a circle, walk through the middle and finish on the
  // opposite side. Actors 0 and 2 trade destinations at the crossing, so two
  // of the three groups end with swapped members.
  const double r = 8.0;
  const std::array<double, 3> start_angle = {kPi / 2.0, 7.0 * kPi / 6.0,
                                             11.0 * kPi / 6.0};
  auto on_circle = [&](double a, double rad) {
    return Eigen::Vector2d(rad * std::cos(a), rad * std::sin(a));
  };
  const std::array<int, 6> group = {0, 0, 1, 1, 2, 2};
  std::array<int, 6> dest_group = {1, 0, 0, 1, 2, 2};
  std::vector<Actor> actors;
  for (int i = 0; i < 6; ++i) {
    const double a0 = start_angle[static_cast<std::size_t>(group[static_cast<std::size_t>(i)])];
    const double a1 =
        start_angle[static_cast<std::size_t>(dest_group[static_cast<std::size_t>(i)])] + kPi;
    const double side = (i % 2 == 0) ? -0.45 : 0.45;
    const Eigen::Vector2d tangent0(-std::sin(a0), std::cos(a0));
    const Eigen::Vector2d tangent1(-std::sin(a1), std::cos(a1));
    const Eigen::Vector2d p0 = on_circle(a0, r) + side * tangent0;
    const Eigen::Vector2d p1 = on_circle(a1, r) + side * tangent1;
    // Spread the crossing point so actors do not overlap in the middle.
    const Eigen::Vector2d mid = on_circle(a0 + kPi / 3.0 * i, 1.2);
    auto path = keyframed({{8, p0}, {40, mid}, {72, p1}});
    actors.push_back(actor(i, facing_motion(path, a0 + kPi)));
  }
  return make("cross-mix",
              "Three pairs cross through the middle; two groups swap members.",
              4, 23, {-11, 11, -11, 11}, {-9, 9, -9, 9}, std::move(actors));
}

Scenario four_split() {
  const std::array<Eigen::Vector2d, 4> corner = {
      Eigen::Vector2d(1, 1), Eigen::Vector2d(-1, 1), Eigen::Vector2d(-1, -1),
      Eigen::Vector2d(1, -1)};
  std::vector<Actor> actors;
  for (int i = 0; i < 4; ++i) {
    const Eigen::Vector2d d = corner[static_cast<std::size_t>(i)];
    auto path = keyframed({{12, 0.6 * d}, {62, 6.5 * d}});
    actors.push_back(actor(i, facing_motion(path, std::atan2(d.y(), d.x()))));
  }
  return make("four-split", "A group of four splits toward four corners.", 4,
              37, {-10, 10, -10, 10}, {-5, 5, -5, 5}, std::move(actors));
}

Scenario priority_runners() {
  // Runner 0 leads the race and carries weight 10; the pack behind it
  // stretches out and bunches up again.
  std::vector<Actor> actors;
  auto leader = sampled([](int t) {
    return Eigen::Vector2d(3.0 + 0.36 * t, 0.6 * std::sin(0.05 * t));
  });
  actors.push_back(actor(0, facing_motion(leader, 0.0), 10.0));
  for (int i = 1; i < 7; ++i) {
    const double lane = -2.5 + (i - 1) * 1.0;
    const double phase = 0.9 * i;
    auto runner = sampled([=](int t) {
      const double stretch = 1.0 + 0.8 * std::sin(2.0 * kPi * t / 40.0 + phase);
      return Eigen::Vector2d(0.31 * t - stretch * (i % 3) * 0.9,
                             lane * (0.8 + 0.4 * std::sin(2.0 * kPi * t / 40.0)));
    });
    actors.push_back(actor(i, facing_motion(runner, 0.0)));
  }
  return make("priority-runners",
              "A race: the lead runner (weight 10) pulls ahead of a pack.", 5,
              41, {-6, 34, -8, 8}, {-4, 8, -6, 6}, std::move(actors));
}

Scenario priority_speaker() {
  // A stationary speaker (weight 5) faces a crowd that mills around in
  // front of it.
  std::vector<Actor> actors;
  actors.push_back(actor(0, standing(0.0, 6.0, 3.0 * kPi / 2.0), 5.0));
  for (int i = 1; i < 10; ++i) {
    const double cx = -5.0 + 2.5 * ((i - 1) % 5) + 1.25 * ((i - 1) / 5);
    const double cy = -3.0 + 2.5 * ((i - 1) / 5);
    const double rad = 0.8 + 0.15 * i;
    const double phase = 1.3 * i;
    const double dir = (i % 2 == 0) ? 1.0 : -1.0;
    auto path = sampled([=](int t) {
      const double a = phase + dir * 2.0 * kPi * t / 60.0;
      return Eigen::Vector2d(cx + rad * std::cos(a),
                             cy + rad * std::sin(a));
    });
    std::vector<ActorPose> poses;
    for (const auto& p : path) {
      // The crowd keeps facing the speaker.
      poses.emplace_back(p.x(), p.y(), std::atan2(6.0 - p.y(), -p.x()));
    }
    actors.push_back(actor(i, std::move(poses)));
  }
  return make("priority-speaker",
              "A stationary speaker (weight 5) addresses a moving crowd.", 5,
              53, {-10, 10, -8, 10}, {-8, 8, -6, 8}, std::move(actors));
}

Scenario split_and_join() {
  const std::array<Eigen::Vector2d, 4> home = {
      Eigen::Vector2d(-0.7, 0.7), Eigen::Vector2d(-0.7, -0.7),
      Eigen::Vector2d(0.7, 0.7), Eigen::Vector2d(0.7, -0.7)};
  std::vector<Actor> actors;
  for (int i = 0; i < 4; ++i) {
    const Eigen::Vector2d h = home[static_cast<std::size_t>(i)];
    const double side = i < 2 ? -1.0 : 1.0;
    const Eigen::Vector2d away = h + Eigen::Vector2d(side * 7.0, 0.0);
    auto path = keyframed({{10, h}, {34, away}, {46, away}, {70, h}});
    actors.push_back(actor(i, facing_motion(path, side > 0 ? 0.0 : kPi)));
  }
  return make("split-and-join",
              "Two pairs split apart, pause, and rejoin in the middle.", 4, 67,
              {-11, 11, -7, 7}, {-6, 6, -5, 5}, std::move(actors));
}

Scenario spreadout_group() {
  std::vector<Actor> actors;
  for (int i = 0; i < 4; ++i) {
    const double a = kPi / 4.0 + i * kPi / 2.0 + 0.2;
    const Eigen::Vector2d d(std::cos(a), std::sin(a));
    auto path = keyframed({{5, 0.8 * d}, {75, 7.0 * d}});
    actors.push_back(actor(i, facing_motion(path, a)));
  }
  return make("spreadout-group",
              "A tight group spreads out uniformly in four directions.", 4, 79,
              {-10, 10, -10, 10}, {-5, 5, -5, 5}, std::move(actors));
}

Scenario track_runners() {
  // Runners circle an oval track at varying paces so that the field spreads
  // and regroups periodically.
  std::vector<Actor> actors;
  const double ax = 12.0;
  const double ay = 7.0;
  for (int i = 0; i < 6; ++i) {
    const double s0 = -kPi / 2.0 - 0.06 * i;
    const double amp = 0.25 + 0.05 * i;
    const double phase = 1.1 * i;
    const double lane = 0.5 * (i % 3);
    auto path = sampled([=](int t) {
      const double s = s0 + 0.034 * t +
                       amp * std::sin(2.0 * kPi * t / 45.0 + phase) -
                       amp * std::sin(phase);
      return Eigen::Vector2d((ax + lane) * std::cos(s), (ay + lane) * std::sin(s));
    });
    actors.push_back(actor(i, facing_motion(path, 0.0)));
  }
  return make("track-runners",
              "Runners on an oval track spread out and regroup.", 5, 97,
              {-15, 15, -10, 10}, {-8, 8, -10, -3}, std::move(actors));
}

}  // namespace

std::vector<Scenario> builtin_scenarios() {
  return {cluster(),          cross_mix(),      four_split(),
          priority_runners(), priority_speaker(), split_and_join(),
          spreadout_group(),  track_runners()};
}

std::optional<Scenario> builtin_scenario(std::string_view name) {
  for (auto& s : builtin_scenarios()) {
    if (s.name == name) return std::move(s);
  }
  return std::nullopt;
}

}  // namespace viewplan
