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

#include "viewplan/scenario.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "viewplan/errors.hpp"

namespace viewplan {

using nlohmann::json;

std::vector<RobotState> random_starts(const GridSpec& grid, int count,
                                      std::uint64_t seed,
                                      std::optional<StartRegion> region) {
  const StartRegion box =
      region.value_or(StartRegion{{0, 0}, {grid.nx - 1, grid.ny - 1}});
  const auto w = static_cast<std::uint64_t>(box.max.x - box.min.x + 1);
  const auto h = static_cast<std::uint64_t>(box.max.y - box.min.y + 1);
  // mt19937_64 output is fixed by the standard; the modulo mapping keeps the
  // draw independent of the library's distribution implementation.
  std::mt19937_64 rng(seed);
  std::vector<RobotState> out;
  for (int r = 0; r < count; ++r) {
    RobotState s;
    s.cell.x = box.min.x + static_cast<int>(rng() % w);
    s.cell.y = box.min.y + static_cast<int>(rng() % h);
    s.yaw_index = static_cast<int>(rng() % kHeadingCount);
    out.push_back(s);
  }
  return out;
}

Scenario reseeded(Scenario scenario, std::uint64_t seed) {
  scenario.start_seed = seed;
  scenario.starts = random_starts(scenario.problem.grid, scenario.robot_count,
                                  seed, scenario.start_region);
  return scenario;
}

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw ScenarioValidationError(what);
}

Cell cell_from(const json& j) {
  if (!j.is_array() || j.size() != 2) invalid("cell must be [i, j]");
  return {j.at(0).get<int>(), j.at(1).get<int>()};
}

const std::set<std::string> kTopLevelKeys = {
    "schema_version", "name",   "description", "horizon", "grid",
    "camera",         "robots", "actors",      "path_weight"};

Actor parse_actor(const json& a, int horizon) {
  const int id = a.at("id").get<int>();
  const double radius = a.value("radius", kDefaultActorRadius);
  const double height = a.value("height", kDefaultActorHeight);
  const double weight = a.value("weight", 1.0);
  std::optional<std::vector<double>> face_weights;
  if (a.contains("face_weights")) {
    face_weights = a.at("face_weights").get<std::vector<double>>();
  }

  std::vector<ActorPose> poses;
  if (a.contains("poses") == a.contains("waypoints")) {
    invalid("actor " + std::to_string(id) +
            ": give exactly one of poses or waypoints");
  }
  if (a.contains("poses")) {
    for (const auto& p : a.at("poses")) {
      if (!p.is_array() || p.size() != 3) {
        invalid("actor " + std::to_string(id) + ": pose must be [x, y, yaw]");
      }
      poses.emplace_back(p.at(0).get<double>(), p.at(1).get<double>(),
                         p.at(2).get<double>());
    }
    if (static_cast<int>(poses.size()) != horizon) {
      invalid("actor " + std::to_string(id) + ": " +
              std::to_string(poses.size()) + " poses for horizon " +
              std::to_string(horizon));
    }
  } else {
    std::vector<Waypoint> wps;
    for (const auto& w : a.at("waypoints")) {
      wps.push_back({w.at("step").get<int>(), w.at("x").get<double>(),
                     w.at("y").get<double>(), w.value("yaw", 0.0)});
    }
    for (const auto& w : wps) {
      if (w.step < 0 || w.step >= horizon) {
        invalid("actor " + std::to_string(id) + ": waypoint step " +
                std::to_string(w.step) + " outside the horizon");
      }
    }
    try {
      poses = resample_waypoints(wps, horizon);
    } catch (const InvalidGeometryError& e) {
      invalid("actor " + std::to_string(id) + ": " + e.what());
    }
  }
  try {
    return build_hex_prism_actor(id, radius, height, weight, std::move(poses),
                                 std::move(face_weights));
  } catch (const InvalidGeometryError& e) {
    invalid(e.what());
  }
}

Scenario parse_checked(const json& doc) {
  if (!doc.is_object()) throw ScenarioParseError("scenario must be an object");
  if (!doc.contains("schema_version")) {
    throw SchemaVersionError("missing schema_version");
  }
  const int version = doc.at("schema_version").get<int>();
  if (version != kScenarioSchemaVersion) {
    throw SchemaVersionError("unsupported schema_version " +
                             std::to_string(version));
  }
  for (const auto& [key, _] : doc.items()) {
    if (!kTopLevelKeys.count(key)) invalid("unknown key '" + key + "'");
  }

  Scenario s;
  s.name = doc.at("name").get<std::string>();
  s.description = doc.value("description", std::string{});
  const int horizon = doc.at("horizon").get<int>();
  if (horizon <= 0) invalid("horizon must be positive");

  const json& g = doc.at("grid");
  const json& origin = g.at("origin");
  const json& size = g.at("size");
  if (origin.size() != 2 || size.size() != 2) {
    invalid("grid origin and size must have two entries");
  }
  s.problem.grid.origin = {origin.at(0).get<double>(), origin.at(1).get<double>()};
  s.problem.grid.resolution = g.at("resolution").get<double>();
  s.problem.grid.nx = size.at(0).get<int>();
  s.problem.grid.ny = size.at(1).get<int>();

  if (doc.contains("camera")) {
    const json& c = doc.at("camera");
    CameraParams cam;
    cam.fov = c.value("fov", cam.fov);
    cam.declination = c.value("declination", cam.declination);
    cam.altitude = c.value("altitude", cam.altitude);
    cam.pixel_density = c.value("pixel_density", cam.pixel_density);
    s.problem.camera = cam;
  }
  s.problem.path_weight = doc.value("path_weight", s.problem.path_weight);

  std::vector<Actor> actors;
  for (const auto& a : doc.at("actors")) actors.push_back(parse_actor(a, horizon));
  try {
    s.problem.scene = Scene(std::move(actors), horizon);
    s.problem.grid.validate();
    s.problem.camera.validate();
  } catch (const Error& e) {
    invalid(e.what());
  }
  if (!(s.problem.path_weight >= 0.0)) invalid("path_weight must be >= 0");

  const json& robots = doc.at("robots");
  s.robot_count = robots.at("count").get<int>();
  if (s.robot_count < 0) invalid("robot count must be non-negative");
  if (robots.contains("starts") == robots.contains("seed")) {
    invalid("robots need exactly one of starts or seed");
  }
  if (robots.contains("starts")) {
    for (const auto& st : robots.at("starts")) {
      RobotState r;
      r.cell = cell_from(st.at("cell"));
      r.yaw_index = st.value("yaw", 0);
      s.starts.push_back(r);
    }
    if (static_cast<int>(s.starts.size()) != s.robot_count) {
      invalid("robot count does not match the number of starts");
    }
  } else {
    s.start_seed = robots.at("seed").get<std::uint64_t>();
    if (robots.contains("start_region")) {
      const json& reg = robots.at("start_region");
      StartRegion region{cell_from(reg.at("min")), cell_from(reg.at("max"))};
      if (!s.problem.grid.contains(region.min) ||
          !s.problem.grid.contains(region.max) ||
          region.min.x > region.max.x || region.min.y > region.max.y) {
        invalid("start_region must be a non-empty box inside the grid");
      }
      s.start_region = region;
    }
    s.starts = random_starts(s.problem.grid, s.robot_count, *s.start_seed,
                             s.start_region);
  }
  for (const auto& st : s.starts) {
    if (!s.problem.grid.contains(st.cell)) invalid("robot start outside the grid");
    if (st.yaw_index < 0 || st.yaw_index >= kHeadingCount) {
      invalid("start yaw must be in 0..7");
    }
  }
  return s;
}

json cell_json(const Cell& c) { return json::array({c.x, c.y}); }

}  // namespace

Scenario parse_scenario(const json& doc) {
  try {
    return parse_checked(doc);
  } catch (const ScenarioError&) {
    throw;
  } catch (const json::exception& e) {
    throw ScenarioParseError(std::string("malformed scenario: ") + e.what());
  }
}

Scenario parse_scenario_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_scenario(doc);
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioParseError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str());
}

json scenario_to_json(const Scenario& s) {
  json doc;
  doc["schema_version"] = kScenarioSchemaVersion;
  doc["name"] = s.name;
  if (!s.description.empty()) doc["description"] = s.description;
  doc["horizon"] = s.problem.horizon();
  const GridSpec& g = s.problem.grid;
  doc["grid"] = {{"origin", {g.origin.x(), g.origin.y()}},
                 {"resolution", g.resolution},
                 {"size", {g.nx, g.ny}}};
  const CameraParams& c = s.problem.camera;
  doc["camera"] = {{"fov", c.fov},
                   {"declination", c.declination},
                   {"altitude", c.altitude},
                   {"pixel_density", c.pixel_density}};
  doc["path_weight"] = s.problem.path_weight;

  json robots;
  robots["count"] = s.robot_count;
  if (s.start_seed) {
    robots["seed"] = *s.start_seed;
    if (s.start_region) {
      robots["start_region"] = {{"min", cell_json(s.start_region->min)},
                                {"max", cell_json(s.start_region->max)}};
    }
  } else {
    json starts = json::array();
    for (const auto& st : s.starts) {
      starts.push_back({{"cell", cell_json(st.cell)}, {"yaw", st.yaw_index}});
    }
    robots["starts"] = starts;
  }
  doc["robots"] = robots;

  json actors = json::array();
  for (const Actor& a : s.problem.scene.actors()) {
    json aj;
    aj["id"] = a.id();
    aj["radius"] = a.radius();
    aj["height"] = a.height();
    const double w0 = a.faces().front().weight;
    aj["weight"] = w0;
    bool uniform = true;
    std::vector<double> weights;
    for (const Face& f : a.faces()) {
      weights.push_back(f.weight);
      uniform = uniform && f.weight == w0;
    }
    if (!uniform) aj["face_weights"] = weights;
    json poses = json::array();
    for (const ActorPose& p : a.poses()) {
      poses.push_back({p.position.x(), p.position.y(), p.yaw});
    }
    aj["poses"] = poses;
    actors.push_back(aj);
  }
  doc["actors"] = actors;
  return doc;
}

void save_scenario(const Scenario& scenario,
                   const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ScenarioParseError("cannot write " + path.string());
  out << scenario_to_json(scenario).dump(1) << '\n';
}

}  // namespace viewplan
