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

#ifndef GRIDFORGE_MAPPING_OCCUPANCY_GRID_H_
#define GRIDFORGE_MAPPING_OCCUPANCY_GRID_H_

#include <cstdint>
#include <vector>

#include "Eigen/Core"
#include "gridforge/image/grid_image.h"
#include "gridforge/projection/laser_scan.h"
#include "gridforge/transform/rigid_transform.h"

namespace gridforge {
namespace mapping {

struct MappingOptions {
  double resolution = 0.05;
  // Log-odds added to the endpoint cell of a beam.
  double log_odds_hit = 1.5;
  // Log-odds added to every other cell the beam crosses.
  double log_odds_miss = -0.41;
  // Log-odds are clamped to [-log_odds_clamp, log_odds_clamp].
  double log_odds_clamp = 4.0;
  // Growth beyond this many cells per side raises CapacityError.
  int max_cells = 8192;
};

// Row indexes the grid's y axis, col its x axis.
struct CellIndex {
  int row = 0;
  int col = 0;
  bool operator==(const CellIndex&) const = default;
};

// Logistic function mapping log-odds to probability.
double LogOddsToProbability(double log_odds);

// Probabilistic occupancy grid M with H x W cells. Each cell is either
// unexplored or holds log-odds of being occupied. The origin is the world
// pose of the corner of cell (0, 0); cell (r, c) covers
// [c, c + 1) x [r, r + 1) * resolution in the origin frame.
class OccupancyGrid {
 public:
  OccupancyGrid(int width, int height, const transform::Pose2D& origin,
                const MappingOptions& options = {});

  // A grid of the given size whose center is at (x, y).
  static OccupancyGrid CenteredAt(double x, double y, int width, int height,
                                  const MappingOptions& options = {});

  int width() const { return width_; }
  int height() const { return height_; }
  double resolution() const { return options_.resolution; }
  const transform::Pose2D& origin() const { return origin_; }
  const MappingOptions& options() const { return options_; }

  bool Contains(const CellIndex& cell) const {
    return cell.row >= 0 && cell.row < height_ && cell.col >= 0 &&
           cell.col < width_;
  }
  bool IsExplored(const CellIndex& cell) const {
    return explored_[Index(cell)] != 0;
  }
  float LogOdds(const CellIndex& cell) const { return log_odds_[Index(cell)]; }
  // Occupancy probability of an explored cell.
  double Probability(const CellIndex& cell) const {
    return LogOddsToProbability(LogOdds(cell));
  }
  std::size_t ExploredCount() const;

  // World point to continuous cell coordinates (x = col, y = row).
  Eigen::Vector2d WorldToGrid(const Eigen::Vector2d& world) const;
  Eigen::Vector2d GridToWorld(const Eigen::Vector2d& grid) const;
  CellIndex WorldToCell(const Eigen::Vector2d& world) const;
  Eigen::Vector2d CellCenter(const CellIndex& cell) const;

  // Grows the grid until `cell` is inside, doubling the width and/or height
  // toward the side that needs room. Existing cells keep their values; when
  // growing toward negative indices the origin moves and every index shifts.
  // Returns the shift that was applied to existing indices. Throws
  // CapacityError if a side would exceed options.max_cells.
  CellIndex GrowToInclude(const CellIndex& cell);

  // Cells crossed by the segment between two world points, in traversal
  // order; the last element is the cell containing `end`. Both points must
  // lie inside the grid.
  std::vector<CellIndex> TraceSegment(const Eigen::Vector2d& start,
                                      const Eigen::Vector2d& end) const;

  // Updates the cells of one beam: log_odds_miss on every crossed cell
  // except the endpoint cell, log_odds_hit on the endpoint. Grows as needed.
  // Returns the touched cells (endpoint last), in post-growth indices.
  std::vector<CellIndex> IntegrateBeam(const transform::Pose2D& pose,
                                       double beam_angle, double range);

  // Integrates every finite beam of the scan from `pose`. Bins with
  // kNoReturn update nothing.
  void IntegrateScan(const projection::LaserScan2D& scan,
                     const transform::Pose2D& pose);

  // Sets a cell's log-odds directly (clamped) and marks it explored.
  void SetLogOdds(const CellIndex& cell, double log_odds);

 private:
  std::size_t Index(const CellIndex& cell) const {
    return static_cast<std::size_t>(cell.row) * width_ + cell.col;
  }
  void Update(const CellIndex& cell, double delta);

  int width_;
  int height_;
  transform::Pose2D origin_;
  MappingOptions options_;
  std::vector<float> log_odds_;
  std::vector<std::uint8_t> explored_;
};

// Raw exchange image: explored cells as round(p * 254), unexplored as 255.
image::GridImage SnapshotTrinary(const OccupancyGrid& grid);

}  // namespace mapping
}  // namespace gridforge

#endif  // GRIDFORGE_MAPPING_OCCUPANCY_GRID_H_
