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

// Scoring of executed team plans: the analytic objective as a time series,
// the rendered pixel-count reward, and CSV reporting.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "viewplan/objective.hpp"
#include "viewplan/raster.hpp"
#include "viewplan/solver.hpp"

namespace viewplan {

struct RewardSeries {
  std::string planner;
  std::vector<double> srppa;  // view reward per step, no path term
  std::vector<double> image;  // empty unless image evaluation ran

  double srppa_total() const;
  double image_total() const;
};

// Per-step view reward of the solution's trajectories.
std::vector<double> srppa_series(const Solution& solution,
                                 const SrppaObjective& objective);

// sum_f A_f sqrt(P_f / A_f), with P_f the pixel count of face f summed over
// all images. Priority weights and view centering play no part.
double image_reward(std::span<const FaceImage> images, const Scene& scene);

struct ImageEvalOptions {
  int width = 640;
  int height = 480;
};

// Renders every robot's camera at every step and scores the images.
std::vector<double> image_series(const Solution& solution,
                                 const Problem& problem,
                                 const ImageEvalOptions& options = {});

struct SummaryRow {
  std::string scenario;
  std::string planner;
  double srppa_total = 0.0;
  std::optional<double> image_total;
};

std::vector<SummaryRow> summarize(const std::string& scenario,
                                  std::span<const RewardSeries> series);

// Columns: t, planner, srppa_reward, image_reward. The image column is left
// empty when no image evaluation ran.
void write_timeseries_csv(std::ostream& out,
                          std::span<const RewardSeries> series);
// Columns: scenario, planner, srppa_total, image_total.
void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows);

// Kendall rank correlation (tau-a) between two equally long score lists.
double kendall_tau(std::span<const double> a, std::span<const double> b);

}  // namespace viewplan
