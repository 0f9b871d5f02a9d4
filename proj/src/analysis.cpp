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

#include "viewplan/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "viewplan/errors.hpp"

namespace viewplan {

SetFunction::SetFunction(int ground_size,
                         std::function<double(SubsetMask)> fn)
    : ground_size_(ground_size), fn_(std::move(fn)) {
  if (ground_size < 0 || ground_size > 32) {
    throw PreconditionError("ground set must have 0..32 elements");
  }
}

SetFunction tabulate(const SetFunction& f) {
  if (f.ground_size() > 24) {
    throw PreconditionError("ground set too large to tabulate");
  }
  auto table = std::make_shared<std::vector<double>>(std::size_t{1}
                                                     << f.ground_size());
  for (std::size_t s = 0; s < table->size(); ++s) {
    (*table)[s] = f(static_cast<SubsetMask>(s));
  }
  return SetFunction(f.ground_size(),
                     [table](SubsetMask s) { return (*table)[s]; });
}

namespace {

double derivative_rec(const SetFunction& f, SubsetMask x,
                      std::span<const SubsetMask> ys) {
  if (ys.empty()) return f(x);
  const auto head = ys.first(ys.size() - 1);
  return derivative_rec(f, x | ys.back(), head) - derivative_rec(f, x, head);
}

}  // namespace

double discrete_derivative(const SetFunction& f, SubsetMask x,
                           std::span<const SubsetMask> ys) {
  SubsetMask seen = x;
  for (SubsetMask y : ys) {
    if (seen & y) {
      throw PreconditionError("derivative arguments must be disjoint");
    }
    seen |= y;
  }
  if (seen & ~f.full_set()) {
    throw PreconditionError("set outside the ground set");
  }
  return derivative_rec(f, x, ys);
}

MonotonicityReport check_m_monotone(const SetFunction& f, int m,
                                    Direction direction,
                                    const CheckOptions& options) {
  if (m < 1) throw PreconditionError("order must be at least 1");
  MonotonicityReport report;
  report.order = m;
  report.direction = direction;
  const bool increasing = direction == Direction::kIncreasing;
  report.extreme = increasing ? std::numeric_limits<double>::infinity()
                              : -std::numeric_limits<double>::infinity();

  const int n = f.ground_size();
  const auto classes = static_cast<std::uint64_t>(m + 2);
  std::vector<SubsetMask> ys(static_cast<std::size_t>(m));

  // Element i goes to class 0 (unused), 1 (X) or 1 + k (Y_k).
  auto evaluate = [&](const std::vector<std::uint64_t>& cls) {
    SubsetMask x = 0;
    std::fill(ys.begin(), ys.end(), 0);
    for (int i = 0; i < n; ++i) {
      const auto c = cls[static_cast<std::size_t>(i)];
      if (c == 1) x |= SubsetMask{1} << i;
      if (c >= 2) ys[c - 2] |= SubsetMask{1} << i;
    }
    const double d = discrete_derivative(f, x, ys);
    ++report.checked;
    const bool worse = increasing ? d < report.extreme : d > report.extreme;
    if (worse) report.extreme = d;
    const bool violates =
        increasing ? d < -options.tolerance : d > options.tolerance;
    if (violates && (!report.witness || worse)) {
      report.passed = false;
      report.witness = Witness{x, ys, d};
    }
  };

  std::vector<std::uint64_t> cls(static_cast<std::size_t>(n), 0);
  if (options.exhaustive) {
    if (n > kMaxExhaustiveGround) {
      throw PreconditionError(
          fmt::format("exhaustive checks are capped at {} elements",
                      kMaxExhaustiveGround));
    }
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= classes;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      for (int i = 0; i < n; ++i) {
        cls[static_cast<std::size_t>(i)] = c % classes;
        c /= classes;
      }
      evaluate(cls);
    }
  } else {
    std::mt19937_64 rng(options.seed);
    for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
      for (auto& c : cls) c = rng() % classes;
      evaluate(cls);
    }
  }
  return report;
}

SetFunction compose(std::vector<double> weights,
                    std::function<double(double)> psi) {
  for (double w : weights) {
    if (!(w >= 0.0)) {
      throw PreconditionError("composition needs non-negative weights");
    }
  }
  const int n = static_cast<int>(weights.size());
  return SetFunction(n, [weights = std::move(weights),
                         psi = std::move(psi)](SubsetMask s) {
    double sum = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (s & (SubsetMask{1} << i)) sum += weights[i];
    }
    return psi(sum);
  });
}

SetFunction srppa_set_function(
    std::shared_ptr<const SrppaObjective> objective,
    std::vector<TrajectoryAssignment> ground) {
  const int n = static_cast<int>(ground.size());
  return SetFunction(n, [objective = std::move(objective),
                         ground = std::move(ground)](SubsetMask s) {
    std::vector<TrajectoryAssignment> chosen;
    for (std::size_t i = 0; i < ground.size(); ++i) {
      if (s & (SubsetMask{1} << i)) chosen.push_back(ground[i]);
    }
    return objective->set_value(chosen);
  });
}

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * std::generate_canonical<double, 53>(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

MicroInstance random_micro_instance(std::mt19937_64& rng,
                                    const MicroLimits& limits) {
  MicroInstance inst;
  Problem& p = inst.problem;
  p.grid.origin = Eigen::Vector2d::Zero();
  p.grid.resolution = 1.0;
  p.grid.nx = uniform_int(rng, 1, limits.max_grid);
  p.grid.ny = uniform_int(rng, 1, limits.max_grid);
  const int horizon = uniform_int(rng, 1, limits.max_horizon);

  p.camera.fov = uniform(rng, kPi / 3.0, kPi);
  p.camera.altitude = uniform(rng, 2.2, 4.0);
  const double alphas[] = {1.0, 100.0, 1e6};
  p.camera.pixel_density = alphas[rng() % 3];
  p.path_weight = uniform(rng, 0.0, 0.05) * std::sqrt(p.camera.pixel_density);

  std::vector<Actor> actors;
  const int n_actors = uniform_int(rng, 0, limits.max_actors);
  for (int a = 0; a < n_actors; ++a) {
    std::vector<ActorPose> poses;
    double x = uniform(rng, -1.0, p.grid.nx);
    double y = uniform(rng, -1.0, p.grid.ny);
    double yaw = uniform(rng, 0.0, 2.0 * kPi);
    for (int t = 0; t < horizon; ++t) {
      poses.emplace_back(x, y, yaw);
      x += uniform(rng, -0.5, 0.5);
      y += uniform(rng, -0.5, 0.5);
      yaw += uniform(rng, -0.5, 0.5);
    }
    actors.push_back(build_hex_prism_actor(a, uniform(rng, 0.3, 0.6),
                                           uniform(rng, 1.0, 2.0),
                                           uniform(rng, 0.5, 3.0),
                                           std::move(poses)));
  }
  p.scene = Scene(std::move(actors), horizon);

  const int robots = uniform_int(rng, 1, limits.max_robots);
  for (int r = 0; r < robots; ++r) {
    inst.starts.push_back({{uniform_int(rng, 0, p.grid.nx - 1),
                            uniform_int(rng, 0, p.grid.ny - 1)},
                           uniform_int(rng, 0, kHeadingCount - 1)});
  }
  return inst;
}

TrajectoryAssignment random_trajectory(std::mt19937_64& rng, int robot,
                                       const RobotState& start,
                                       const Problem& problem) {
  std::vector<Action> actions;
  RobotState s = start;
  for (int t = 0; t + 1 < problem.horizon(); ++t) {
    const auto options = valid_actions(s, problem.grid);
    const Action a = options[rng() % options.size()];
    actions.push_back(a);
    s = transition(s, a, problem.grid);
  }
  return realize(robot, start, actions, problem.grid);
}

bool PropertyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const PropertyCheck& c) { return c.passed; });
}

namespace {

struct Ground {
  std::shared_ptr<const SrppaObjective> objective;
  std::vector<TrajectoryAssignment> elements;
};

Ground random_ground(std::mt19937_64& rng, int size) {
  MicroInstance inst = random_micro_instance(rng);
  Ground g;
  g.objective = std::make_shared<const SrppaObjective>(inst.problem);
  const auto robots = static_cast<int>(inst.starts.size());
  for (int i = 0; i < size; ++i) {
    const int r = static_cast<int>(rng() % static_cast<std::uint64_t>(robots));
    const RobotState start{{uniform_int(rng, 0, inst.problem.grid.nx - 1),
                            uniform_int(rng, 0, inst.problem.grid.ny - 1)},
                           uniform_int(rng, 0, kHeadingCount - 1)};
    g.elements.push_back(random_trajectory(rng, r, start, inst.problem));
  }
  return g;
}

void record(PropertyCheck& check, const MonotonicityReport& r,
            const std::string& what) {
  ++check.cases;
  if (!r.passed && check.passed) {
    check.passed = false;
    check.detail = fmt::format("{} violated (derivative {:.3g})", what,
                               r.witness ? r.witness->value : r.extreme);
  }
}

}  // namespace

PropertyReport verify_properties(int trials, std::uint64_t seed) {
  PropertyReport report;
  std::mt19937_64 rng(seed);

  PropertyCheck basic{"objective normalized, monotone, submodular", true, 0, ""};
  for (int i = 0; i < trials; ++i) {
    Ground g = random_ground(rng, uniform_int(rng, 2, 6));
    const SetFunction f =
        tabulate(srppa_set_function(g.objective, g.elements));
    if (f(0) != 0.0 && basic.passed) {
      basic.passed = false;
      basic.detail = fmt::format("g(empty) = {}", f(0));
    }
    record(basic, check_m_monotone(f, 1, Direction::kIncreasing), "1-increasing");
    record(basic, check_m_monotone(f, 2, Direction::kDecreasing), "2-decreasing");
  }
  report.checks.push_back(basic);

  PropertyCheck higher{"objective 2-decreasing and 3-increasing (8 elements)",
                       true, 0, ""};
  const int higher_trials = std::max(1, trials / 20);
  for (int i = 0; i < higher_trials; ++i) {
    Ground g = random_ground(rng, 8);
    const SetFunction f =
        tabulate(srppa_set_function(g.objective, g.elements));
    record(higher, check_m_monotone(f, 2, Direction::kDecreasing), "2-decreasing");
    record(higher, check_m_monotone(f, 3, Direction::kIncreasing), "3-increasing");
  }
  report.checks.push_back(higher);

  struct Named {
    const char* name;
    std::function<double(double)> psi;
  };
  const std::vector<Named> alternating = {
      {"sqrt", [](double x) { return std::sqrt(x); }},
      {"1 - exp(-x)", [](double x) { return 1.0 - std::exp(-x); }},
      {"log(1 + x)", [](double x) { return std::log1p(x); }}};
  for (const auto& fn : alternating) {
    PropertyCheck c{fmt::format("composition with {} alternates", fn.name),
                    true, 0, ""};
    for (int i = 0; i < std::max(1, trials / 100); ++i) {
      std::vector<double> w;
      for (int k = 0; k < 8; ++k) w.push_back(uniform(rng, 0.0, 3.0));
      const SetFunction f = tabulate(compose(w, fn.psi));
      record(c, check_m_monotone(f, 1, Direction::kIncreasing), "1-increasing");
      record(c, check_m_monotone(f, 2, Direction::kDecreasing), "2-decreasing");
      record(c, check_m_monotone(f, 3, Direction::kIncreasing), "3-increasing");
    }
    report.checks.push_back(c);
  }

  // Shifted sigmoid: monotone and submodular on x >= 0, but its third
  // derivative is negative near 0, so 3-increasing must fail.
  {
    PropertyCheck c{"shifted sigmoid: submodular, not 3-increasing", true, 0, ""};
    std::vector<double> w;
    for (int k = 0; k < 6; ++k) w.push_back(uniform(rng, 0.05, 0.25));
    const SetFunction f = tabulate(
        compose(w, [](double x) { return 1.0 / (1.0 + std::exp(-x)) - 0.5; }));
    record(c, check_m_monotone(f, 1, Direction::kIncreasing), "1-increasing");
    record(c, check_m_monotone(f, 2, Direction::kDecreasing), "2-decreasing");
    const auto third = check_m_monotone(f, 3, Direction::kIncreasing);
    ++c.cases;
    if (third.passed) {
      c.passed = false;
      c.detail = "expected a 3-increasing violation, found none";
    }
    report.checks.push_back(c);
  }

  {
    PropertyCheck c{"supermodular control fails 2-decreasing", true, 1, ""};
    const SetFunction sq(6, [](SubsetMask s) {
      const double k = std::popcount(s);
      return k * k;
    });
    if (check_m_monotone(sq, 2, Direction::kDecreasing).passed) {
      c.passed = false;
      c.detail = "|X|^2 passed the submodularity check";
    }
    report.checks.push_back(c);
  }
  return report;
}

}  // namespace viewplan
