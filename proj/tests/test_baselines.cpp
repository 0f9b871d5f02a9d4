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

#include <algorithm>
#include <set>

#include <doctest.h>

#include "viewplan/baselines.hpp"
#include "viewplan/errors.hpp"

using namespace viewplan;

namespace {

Problem with_actors(std::vector<Eigen::Vector2d> spots, int horizon = 3) {
  Problem p;
  std::vector<Actor> actors;
  for (std::size_t i = 0; i < spots.size(); ++i) {
    std::vector<ActorPose> poses(static_cast<std::size_t>(horizon),
                                 ActorPose(spots[i].x(), spots[i].y(), 0.0));
    actors.push_back(build_hex_prism_actor(static_cast<int>(i), 0.5, 1.8, 1.0, poses));
  }
  p.scene = Scene(std::move(actors), horizon);
  p.grid.origin = {-10.0, -10.0};
  p.grid.nx = p.grid.ny = 31;
  return p;
}

}  // namespace

TEST_CASE("formation around a single actor") {
  const Problem p = with_actors({{0.0, 0.0}});
  const SrppaObjective obj(p);
  const Solution s = formation_plan(obj, 4, {2.0});
  const std::vector<Eigen::Vector2d> expected = {{2, 0}, {0, 2}, {-2, 0}, {0, -2}};
  const std::vector<int> yaw = {4, 6, 0, 2};
  for (int r = 0; r < 4; ++r) {
    for (const auto& st : s.of(r).states) {
      CHECK(p.grid.position(st.cell).isApprox(expected[static_cast<std::size_t>(r)]));
      CHECK(st.yaw_index == yaw[static_cast<std::size_t>(r)]);
    }
    CHECK(s.of(r).actions.empty());
  }
}

TEST_CASE("formation centers on the actor centroid") {
  const Problem p = with_actors({{4.0, 4.0}, {6.0, 6.0}, {4.0, 6.0}, {6.0, 4.0}});
  const SrppaObjective obj(p);
  const Solution s = formation_plan(obj, 3, {1.0});
  const double radius = std::sqrt(2.0) + 1.0;
  for (int r = 0; r < 3; ++r) {
    const Eigen::Vector2d at = p.grid.position(s.of(r).states[0].cell);
    // within half a diagonal cell of the ideal circle
    CHECK(std::abs((at - Eigen::Vector2d(5, 5)).norm() - radius) <= std::sqrt(0.5) + 1e-9);
  }
}

TEST_CASE("formation radius follows the spread") {
  Problem p;
  std::vector<ActorPose> a, b;
  for (int t = 0; t < 8; ++t) {
    a.emplace_back(-0.5 * t, 0.0, 0.0);
    b.emplace_back(0.5 * t, 0.0, 0.0);
  }
  p.scene = Scene({build_hex_prism_actor(0, 0.5, 1.8, 1.0, a),
                   build_hex_prism_actor(1, 0.5, 1.8, 1.0, b)});
  p.grid.origin = {-12.0, -12.0};
  p.grid.nx = p.grid.ny = 25;
  const SrppaObjective obj(p);
  const Solution s = formation_plan(obj, 2);
  double last = 0.0;
  for (int t = 0; t < 8; ++t) {
    const double d = p.grid.position(s.of(1).states[static_cast<std::size_t>(t)].cell).norm();
    CHECK(d >= last - 1.0);  // snapping can cost up to one cell
    CHECK(std::abs(d - (0.5 * t + 2.0)) <= std::sqrt(0.5) + 1e-9);
    last = d;
  }
}

TEST_CASE("formation needs actors") {
  Problem p;
  p.scene = Scene(std::vector<Actor>{}, 3);
  p.grid.nx = p.grid.ny = 3;
  const SrppaObjective obj(p);
  CHECK_THROWS_AS(formation_plan(obj, 2), PreconditionError);
}

TEST_CASE("assignment map: more actors than robots") {
  const Problem p = with_actors({{-8, 0}, {-4, 0}, {0, 0}, {4, 0}, {8, 0}, {9, 9}});
  // robot r starts next to actor 3 - r
  const std::vector<RobotState> starts = {
      {{14, 10}, 0}, {{10, 10}, 0}, {{6, 10}, 0}, {{2, 10}, 0}};
  const AssignmentMap m = build_assignment_map(p, starts);
  REQUIRE(m.size() == 4);
  std::set<int> seen;
  for (int r = 0; r < 4; ++r) {
    REQUIRE(m[static_cast<std::size_t>(r)].size() == 1);
    CHECK(m[static_cast<std::size_t>(r)][0] == 3 - r);
    seen.insert(m[static_cast<std::size_t>(r)][0]);
  }
  CHECK(seen.count(4) == 0);
  CHECK(seen.count(5) == 0);
}

TEST_CASE("assignment map: fewer actors than robots") {
  const Problem p = with_actors({{0, 0}, {3, 0}, {6, 0}});
  const std::vector<RobotState> starts(5, RobotState{{10, 10}, 0});
  const AssignmentMap m = build_assignment_map(p, starts);
  const std::vector<int> expected = {0, 1, 2, 0, 1};
  for (std::size_t r = 0; r < 5; ++r) {
    REQUIRE(m[r].size() == 1);
    CHECK(m[r][0] == expected[r]);
  }
}

TEST_CASE("assignment map: equal counts give a matching") {
  const Problem p = with_actors({{-6, -6}, {6, -6}, {6, 6}, {-6, 6}});
  const std::vector<RobotState> starts = {
      {{16, 16}, 0}, {{4, 16}, 0}, {{4, 4}, 0}, {{16, 4}, 0}};
  const AssignmentMap m = build_assignment_map(p, starts);
  std::set<int> seen;
  for (const auto& ids : m) {
    REQUIRE(ids.size() == 1);
    seen.insert(ids[0]);
  }
  CHECK(seen.size() == 4);
  CHECK(m[0][0] == 2);  // nearest to (6, 6)
  CHECK(m[1][0] == 3);
  CHECK(m[2][0] == 0);
  CHECK(m[3][0] == 1);
}

TEST_CASE("assignment blocks with several actors") {
  const Problem p = with_actors({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
  const std::vector<RobotState> starts(2, RobotState{{10, 10}, 0});
  const AssignmentMap m = build_assignment_map(p, starts);
  std::vector<std::vector<int>> got = m;
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
}

TEST_CASE("assignment plans are optimal for their own actors") {
  const Problem p = with_actors({{-3, 0}, {3, 0}}, 4);
  const SrppaObjective obj(p);
  const std::vector<RobotState> starts = {{{7, 10}, 0}, {{13, 10}, 4}};
  const Solution s = assignment_plan(obj, starts);
  const AssignmentMap m = build_assignment_map(p, starts);
  for (std::size_t r = 0; r < 2; ++r) {
    Problem sub = p;
    sub.scene = p.scene.restricted_to(m[r]);
    const SrppaObjective restricted(sub);
    const PlanResult best = value_iteration(restricted, static_cast<int>(r), starts[r],
                                            restricted.empty_ledger());
    CHECK(s.of(static_cast<int>(r)) == best.assignment);
    CHECK(is_feasible(s.of(static_cast<int>(r)), p.grid));
  }
}
