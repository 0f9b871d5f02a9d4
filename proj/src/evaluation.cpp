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

#include "viewplan/evaluation.hpp"

#include <cmath>

#include <fmt/format.h>

#include "viewplan/errors.hpp"

namespace viewplan {

double RewardSeries::srppa_total() const {
  double sum = 0.0;
  for (double v : srppa) sum += v;
  return sum;
}

double RewardSeries::image_total() const {
  double sum = 0.0;
  for (double v : image) sum += v;
  return sum;
}

std::vector<double> srppa_series(const Solution& solution,
                                 const SrppaObjective& objective) {
  return objective.view_series(solution.ledger());
}

double image_reward(std::span<const FaceImage> images, const Scene& scene) {
  std::vector<std::uint64_t> pixels(scene.face_count(), 0);
  for (const FaceImage& img : images) {
    const auto counts = img.pixel_counts(scene.face_count());
    for (std::size_t f = 0; f < counts.size(); ++f) pixels[f] += counts[f];
  }
  double total = 0.0;
  for (std::size_t f = 0; f < pixels.size(); ++f) {
    const double area = scene.face(f).area;
    total += area * std::sqrt(static_cast<double>(pixels[f]) / area);
  }
  return total;
}

std::vector<double> image_series(const Solution& solution,
                                 const Problem& problem,
                                 const ImageEvalOptions& options) {
  std::vector<double> series;
  series.reserve(static_cast<std::size_t>(problem.horizon()));
  for (int t = 0; t < problem.horizon(); ++t) {
    std::vector<RasterCamera> cameras;
    for (const auto& a : solution.assignments()) {
      cameras.push_back(RasterCamera::from_state(
          a.states[static_cast<std::size_t>(t)], problem.grid, problem.camera,
          options.width, options.height));
    }
    const auto images = rasterize(cameras, problem.scene, t);
    series.push_back(image_reward(images, problem.scene));
  }
  return series;
}

std::vector<SummaryRow> summarize(const std::string& scenario,
                                  std::span<const RewardSeries> series) {
  std::vector<SummaryRow> rows;
  for (const auto& s : series) {
    SummaryRow row{scenario, s.planner, s.srppa_total(), std::nullopt};
    if (!s.image.empty()) row.image_total = s.image_total();
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_timeseries_csv(std::ostream& out,
                          std::span<const RewardSeries> series) {
  out << "t,planner,srppa_reward,image_reward\n";
  for (const auto& s : series) {
    for (std::size_t t = 0; t < s.srppa.size(); ++t) {
      out << fmt::format("{},{},{:.17g},", t, s.planner, s.srppa[t]);
      if (t < s.image.size()) out << fmt::format("{:.17g}", s.image[t]);
      out << '\n';
    }
  }
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows) {
  out << "scenario,planner,srppa_total,image_total\n";
  for (const auto& r : rows) {
    out << fmt::format("{},{},{:.17g},", r.scenario, r.planner, r.srppa_total);
    if (r.image_total) out << fmt::format("{:.17g}", *r.image_total);
    out << '\n';
  }
}

double kendall_tau(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 2) {
    throw PreconditionError("kendall_tau needs two equally long lists");
  }
  double score = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const double da = a[i] - a[j];
      const double db = b[i] - b[j];
      const double s = da * db;
      score += s > 0.0 ? 1.0 : (s < 0.0 ? -1.0 : 0.0);
      ++pairs;
    }
  }
  return score / static_cast<double>(pairs);
}

}  // namespace viewplan
