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

#include "gridforge/mapping/occupancy_grid.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gridforge/common/error.h"

namespace gridforge {
namespace mapping {
namespace {

int FloorToInt(double value) { return static_cast<int>(std::floor(value)); }

}  // namespace

double LogOddsToProbability(double log_odds) {
  return 1. / (1. + std::exp(-log_odds));
}

OccupancyGrid::OccupancyGrid(int width, int height,
                             const transform::Pose2D& origin,
                             const MappingOptions& options)
    : width_(width), height_(height), origin_(origin), options_(options) {
  if (width < 1 || height < 1) {
    throw ContractViolation("grid dimensions must be at least 1x1");
  }
  if (!(options.resolution > 0.)) {
    throw ContractViolation("grid resolution must be positive");
  }
  if (width > options.max_cells || height > options.max_cells) {
    throw CapacityError("grid exceeds " + std::to_string(options.max_cells) +
                        " cells per side");
  }
  log_odds_.assign(static_cast<std::size_t>(width) * height, 0.f);
  explored_.assign(log_odds_.size(), 0);
}

OccupancyGrid OccupancyGrid::CenteredAt(double x, double y, int width,
                                        int height,
                                        const MappingOptions& options) {
  return OccupancyGrid(width, height,
                       transform::Pose2D{x - 0.5 * width * options.resolution,
                                         y - 0.5 * height * options.resolution,
                                         0.},
                       options);
}

std::size_t OccupancyGrid::ExploredCount() const {
  return static_cast<std::size_t>(
      std::count(explored_.begin(), explored_.end(), 1));
}

Eigen::Vector2d OccupancyGrid::WorldToGrid(const Eigen::Vector2d& world) const {
  const double c = std::cos(origin_.yaw);
  const double s = std::sin(origin_.yaw);
  const Eigen::Vector2d d = world - Eigen::Vector2d(origin_.x, origin_.y);
  return Eigen::Vector2d(c * d.x() + s * d.y(), -s * d.x() + c * d.y()) /
         options_.resolution;
}

Eigen::Vector2d OccupancyGrid::GridToWorld(const Eigen::Vector2d& grid) const {
  const double c = std::cos(origin_.yaw);
  const double s = std::sin(origin_.yaw);
  const Eigen::Vector2d q = grid * options_.resolution;
  return Eigen::Vector2d(origin_.x + c * q.x() - s * q.y(),
                         origin_.y + s * q.x() + c * q.y());
}

CellIndex OccupancyGrid::WorldToCell(const Eigen::Vector2d& world) const {
  const Eigen::Vector2d g = WorldToGrid(world);
  return CellIndex{FloorToInt(g.y()), FloorToInt(g.x())};
}

Eigen::Vector2d OccupancyGrid::CellCenter(const CellIndex& cell) const {
  return GridToWorld(Eigen::Vector2d(cell.col + 0.5, cell.row + 0.5));
}

CellIndex OccupancyGrid::GrowToInclude(const CellIndex& cell) {
  int new_width = width_;
  int new_height = height_;
  int col_shift = 0;
  int row_shift = 0;
  while (cell.col + col_shift < 0) {
    col_shift += new_width;
    new_width *= 2;
  }
  while (cell.col + col_shift >= new_width) new_width *= 2;
  while (cell.row + row_shift < 0) {
    row_shift += new_height;
    new_height *= 2;
  }
  while (cell.row + row_shift >= new_height) new_height *= 2;
  if (new_width == width_ && new_height == height_) return CellIndex{0, 0};
  if (new_width > options_.max_cells || new_height > options_.max_cells) {
    throw CapacityError("growing the grid to " + std::to_string(new_width) +
                        "x" + std::to_string(new_height) + " exceeds " +
                        std::to_string(options_.max_cells) +
                        " cells per side");
  }

  std::vector<float> log_odds(static_cast<std::size_t>(new_width) * new_height,
                              0.f);
  std::vector<std::uint8_t> explored(log_odds.size(), 0);
  for (int r = 0; r < height_; ++r) {
    const std::size_t src = static_cast<std::size_t>(r) * width_;
    const std::size_t dst =
        static_cast<std::size_t>(r + row_shift) * new_width + col_shift;
    std::copy_n(log_odds_.begin() + src, width_, log_odds.begin() + dst);
    std::copy_n(explored_.begin() + src, width_, explored.begin() + dst);
  }
  const Eigen::Vector2d new_origin =
      GridToWorld(Eigen::Vector2d(-col_shift, -row_shift));
  origin_.x = new_origin.x();
  origin_.y = new_origin.y();
  width_ = new_width;
  height_ = new_height;
  log_odds_ = std::move(log_odds);
  explored_ = std::move(explored);
  return CellIndex{row_shift, col_shift};
}

std::vector<CellIndex> OccupancyGrid::TraceSegment(
    const Eigen::Vector2d& start, const Eigen::Vector2d& end) const {
  // Exact grid traversal (Amanatides & Woo): every cell the segment passes
  // through, in order.
  const Eigen::Vector2d a = WorldToGrid(start);
  const Eigen::Vector2d b = WorldToGrid(end);
  CellIndex cell{FloorToInt(a.y()), FloorToInt(a.x())};
  const CellIndex last{FloorToInt(b.y()), FloorToInt(b.x())};
  if (!Contains(cell) || !Contains(last)) {
    throw ContractViolation("traced segment leaves the grid");
  }
  const Eigen::Vector2d direction = b - a;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const int step_x = direction.x() > 0. ? 1 : -1;
  const int step_y = direction.y() > 0. ? 1 : -1;
  const double delta_x =
      direction.x() != 0. ? std::abs(1. / direction.x()) : kInf;
  const double delta_y =
      direction.y() != 0. ? std::abs(1. / direction.y()) : kInf;
  double t_max_x =
      direction.x() != 0.
          ? ((step_x > 0 ? cell.col + 1. : cell.col) - a.x()) / direction.x()
          : kInf;
  double t_max_y =
      direction.y() != 0.
          ? ((step_y > 0 ? cell.row + 1. : cell.row) - a.y()) / direction.y()
          : kInf;

  std::vector<CellIndex> cells;
  cells.reserve(std::abs(last.col - cell.col) + std::abs(last.row - cell.row) +
                1);
  cells.push_back(cell);
  const int max_steps =
      std::abs(last.col - cell.col) + std::abs(last.row - cell.row);
  for (int i = 0; i < max_steps && !(cell == last); ++i) {
    if (t_max_x < t_max_y) {
      cell.col += step_x;
      t_max_x += delta_x;
    } else {
      cell.row += step_y;
      t_max_y += delta_y;
    }
    cells.push_back(cell);
  }
  // Rounding can leave the walk one step short of the endpoint cell.
  if (!(cells.back() == last)) cells.push_back(last);
  return cells;
}

void OccupancyGrid::Update(const CellIndex& cell, double delta) {
  const std::size_t index = Index(cell);
  const double clamp = options_.log_odds_clamp;
  log_odds_[index] = static_cast<float>(
      std::clamp(static_cast<double>(log_odds_[index]) + delta, -clamp, clamp));
  explored_[index] = 1;
}

void OccupancyGrid::SetLogOdds(const CellIndex& cell, double log_odds) {
  const double clamp = options_.log_odds_clamp;
  log_odds_[Index(cell)] =
      static_cast<float>(std::clamp(log_odds, -clamp, clamp));
  explored_[Index(cell)] = 1;
}

std::vector<CellIndex> OccupancyGrid::IntegrateBeam(
    const transform::Pose2D& pose, double beam_angle, double range) {
  const Eigen::Vector2d start(pose.x, pose.y);
  const double angle = pose.yaw + beam_angle;
  const Eigen::Vector2d end =
      start + range * Eigen::Vector2d(std::cos(angle), std::sin(angle));
  GrowToInclude(WorldToCell(start));
  GrowToInclude(WorldToCell(end));
  std::vector<CellIndex> cells = TraceSegment(start, end);
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
    Update(cells[i], options_.log_odds_miss);
  }
  Update(cells.back(), options_.log_odds_hit);
  return cells;
}

void OccupancyGrid::IntegrateScan(const projection::LaserScan2D& scan,
                                  const transform::Pose2D& pose) {
  for (int bin = 0; bin < scan.num_bins(); ++bin) {
    const double range = scan.ranges[bin];
    if (!std::isfinite(range) || !(range > 0.)) continue;
    IntegrateBeam(pose, scan.BeamAngle(bin), range);
  }
}

image::GridImage SnapshotTrinary(const OccupancyGrid& grid) {
  image::GridImage image(grid.width(), grid.height(), image::kUnexplored);
  for (int r = 0; r < grid.height(); ++r) {
    for (int c = 0; c < grid.width(); ++c) {
      const CellIndex cell{r, c};
      if (!grid.IsExplored(cell)) continue;
      image.at(r, c) = static_cast<std::uint8_t>(
          std::lround(grid.Probability(cell) * 254.));
    }
  }
  return image;
}

}  // namespace mapping
}  // namespace gridforge
