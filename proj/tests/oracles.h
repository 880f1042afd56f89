/*
 * Copyright 2026 The GridForge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GRIDFORGE_TESTS_ORACLES_H_
#define GRIDFORGE_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <vector>

#include "Eigen/Core"
#include "gridforge/image/grid_image.h"
#include "gridforge/mapping/occupancy_grid.h"
#include "gridforge/projection/laser_scan.h"

namespace gridforge {
namespace testing {

// True if the segment a-b passes through the interior of the unit square
// [col, col+1] x [row, row+1] (grid coordinates), by Liang-Barsky clipping.
inline bool SegmentCrossesCell(const Eigen::Vector2d& a,
                               const Eigen::Vector2d& b, int row, int col) {
  const Eigen::Vector2d d = b - a;
  double t0 = 0., t1 = 1.;
  const double p[4] = {-d.x(), d.x(), -d.y(), d.y()};
  const double q[4] = {a.x() - col, col + 1. - a.x(), a.y() - row,
                       row + 1. - a.y()};
  for (int i = 0; i < 4; ++i) {
    if (p[i] == 0.) {
      if (q[i] <= 0.) return false;
      continue;
    }
    const double t = q[i] / p[i];
    if (p[i] < 0.) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
  }
  return t0 < t1;
}

// Log-odds and explored flags after integrating `scan` at `pose`, computed
// by testing every cell against every beam.
struct OracleGrid {
  std::vector<float> log_odds;  // stored at grid precision
  std::vector<bool> explored;
};

inline OracleGrid BruteForceIntegrate(const mapping::OccupancyGrid& empty_grid,
                                      const projection::LaserScan2D& scan,
                                      const transform::Pose2D& pose) {
  const int w = empty_grid.width(), h = empty_grid.height();
  const mapping::MappingOptions& options = empty_grid.options();
  OracleGrid out{std::vector<float>(w * h, 0.f), std::vector<bool>(w * h)};
  for (int bin = 0; bin < scan.num_bins(); ++bin) {
    const double range = scan.ranges[bin];
    if (!std::isfinite(range) || range <= 0.) continue;
    const double angle = pose.yaw + scan.BeamAngle(bin);
    const Eigen::Vector2d start(pose.x, pose.y);
    const Eigen::Vector2d end =
        start + range * Eigen::Vector2d(std::cos(angle), std::sin(angle));
    const Eigen::Vector2d a = empty_grid.WorldToGrid(start);
    const Eigen::Vector2d b = empty_grid.WorldToGrid(end);
    const int end_row = static_cast<int>(std::floor(b.y()));
    const int end_col = static_cast<int>(std::floor(b.x()));
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) {
        const bool is_end = r == end_row && c == end_col;
        if (!is_end && !SegmentCrossesCell(a, b, r, c)) continue;
        float& l = out.log_odds[r * w + c];
        l = std::clamp<double>(l + (is_end ? options.log_odds_hit
                                   : options.log_odds_miss),
                       -options.log_odds_clamp, options.log_odds_clamp);
        out.explored[r * w + c] = true;
      }
    }
  }
  return out;
}

// A 32x32 grid at 0.05 m, a random pose inside it and 8 beams whose
// endpoints stay inside the grid.
struct RayScene {
  mapping::OccupancyGrid grid{32, 32, transform::Pose2D{}};
  transform::Pose2D pose;
  projection::LaserScan2D scan;
};

template <typename Rng>
RayScene MakeRayScene(Rng& rng) {
  std::uniform_real_distribution<double> unit(0., 1.);
  RayScene scene;
  scene.grid = mapping::OccupancyGrid(
      32, 32, transform::Pose2D{-0.8 + 0.2 * unit(rng), -0.3 * unit(rng), 0.});
  const transform::Pose2D& o = scene.grid.origin();
  const double side = 32 * 0.05;
  scene.pose = transform::Pose2D{o.x + side * (0.1 + 0.8 * unit(rng)),
                                 o.y + side * (0.1 + 0.8 * unit(rng)),
                                 -3. + 6. * unit(rng)};
  scene.scan.angle_min = -3.14159265358979323846;
  scene.scan.angle_max = 3.14159265358979323846;
  for (int bin = 0; bin < 8; ++bin) {
    const double angle = scene.pose.yaw + scene.scan.angle_min +
                         (bin + 0.5) * (scene.scan.angle_max -
                                        scene.scan.angle_min) / 8;
    const double dx = std::cos(angle), dy = std::sin(angle);
    double limit = 1e9;
    const double lo_x = o.x + 1e-6, hi_x = o.x + side - 1e-6;
    const double lo_y = o.y + 1e-6, hi_y = o.y + side - 1e-6;
    if (dx > 0) limit = std::min(limit, (hi_x - scene.pose.x) / dx);
    if (dx < 0) limit = std::min(limit, (lo_x - scene.pose.x) / dx);
    if (dy > 0) limit = std::min(limit, (hi_y - scene.pose.y) / dy);
    if (dy < 0) limit = std::min(limit, (lo_y - scene.pose.y) / dy);
    scene.scan.ranges.push_back(unit(rng) < 0.1
                                    ? projection::kNoReturn
                                    : limit * (0.02 + 0.97 * unit(rng)));
  }
  return scene;
}

// Number of mismatched cells between an integrated grid and the oracle.
inline int CountRayMismatches(const mapping::OccupancyGrid& grid,
                              const OracleGrid& oracle) {
  int mismatches = 0;
  for (int r = 0; r < grid.height(); ++r) {
    for (int c = 0; c < grid.width(); ++c) {
      const mapping::CellIndex cell{r, c};
      const std::size_t i = static_cast<std::size_t>(r) * grid.width() + c;
      if (grid.IsExplored(cell) != oracle.explored[i] ||
          grid.LogOdds(cell) != oracle.log_odds[i]) {
        ++mismatches;
      }
    }
  }
  return mismatches;
}

// Floater removal written out directly: a pixel keeps its value only if at
// least two of its up/down/left/right neighbors inside the image share it.
inline image::GridImage BruteForceFloaters(const image::GridImage& in) {
  image::GridImage out = in;
  for (int r = 0; r < in.height; ++r) {
    for (int c = 0; c < in.width; ++c) {
      const std::uint8_t v = in.pixels[r * in.width + c];
      if (v == image::kUnexplored) continue;
      int same = 0;
      if (r > 0 && in.pixels[(r - 1) * in.width + c] == v) same++;
      if (r + 1 < in.height && in.pixels[(r + 1) * in.width + c] == v) same++;
      if (c > 0 && in.pixels[r * in.width + c - 1] == v) same++;
      if (c + 1 < in.width && in.pixels[r * in.width + c + 1] == v) same++;
      if (same <= 1) out.pixels[r * in.width + c] = image::kUnexplored;
    }
  }
  return out;
}

template <typename Rng>
image::GridImage RandomTrinary(Rng& rng, int width, int height) {
  static constexpr std::uint8_t kCodes[3] = {image::kOccupied, image::kFree,
                                             image::kUnexplored};
  std::uniform_int_distribution<int> pick(0, 2);
  image::GridImage img(width, height);
  for (auto& p : img.pixels) p = kCodes[pick(rng)];
  return img;
}

}  // namespace testing
}  // namespace gridforge

#endif  // GRIDFORGE_TESTS_ORACLES_H_
