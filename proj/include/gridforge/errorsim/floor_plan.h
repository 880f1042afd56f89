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

#ifndef GRIDFORGE_ERRORSIM_FLOOR_PLAN_H_
#define GRIDFORGE_ERRORSIM_FLOOR_PLAN_H_

#include <cstdint>
#include <vector>

#include "gridforge/image/grid_image.h"

namespace gridforge {
namespace errorsim {

// Axis-aligned cell rectangle [row, row + rows) x [col, col + cols).
struct CellRect {
  int row = 0;
  int col = 0;
  int rows = 0;
  int cols = 0;

  bool Contains(int r, int c) const {
    return r >= row && r < row + rows && c >= col && c < col + cols;
  }
};

// Binary wall/free raster plus the room layout it was built from. Row r,
// column c covers world [c, c + 1) x [r, r + 1) * resolution.
struct FloorPlan {
  int width = 0;
  int height = 0;
  double resolution = 0.05;
  std::vector<std::uint8_t> walls;  // 1 = wall
  std::vector<CellRect> rooms;      // free interiors
  std::vector<CellRect> doors;      // gaps cut through interior walls

  // Cells outside the raster are walls.
  bool IsWall(int row, int col) const {
    return row < 0 || row >= height || col < 0 || col >= width ||
           walls[static_cast<std::size_t>(row) * width + col] != 0;
  }
  bool IsDoor(int row, int col) const;
};

struct FloorPlanOptions {
  int size = 256;
  double resolution = 0.05;
  int min_rooms = 3;
  int max_rooms = 12;
  int wall_thickness = 2;
  // Door gap length in cells (0.8 to 1.2 m at 0.05 m).
  int min_door = 16;
  int max_door = 24;
  // Smallest room side in cells.
  int min_room_side = 36;
};

// Recursive rectangular subdivision: the interior is split along the longer
// side of a room until the target room count is reached, each new wall
// receiving one door. Splits avoid existing door gaps so every door stays
// fully open. Deterministic per seed; every free cell is reachable.
FloorPlan GenerateFloorPlan(std::uint64_t seed,
                            const FloorPlanOptions& options = {});

// External plan image: pixels below 128 are walls, the rest free. The image
// border is forced to wall. No room or door metadata.
FloorPlan FloorPlanFromImage(const image::GridImage& image, double resolution);

// Wall = occupied (0), everything else free (200).
image::GridImage RenderPlan(const FloorPlan& plan);

// Free cells 4-connected to (row, col), as a per-cell mask.
std::vector<std::uint8_t> ReachableFree(const FloorPlan& plan, int row,
                                        int col);

}  // namespace errorsim
}  // namespace gridforge

#endif  // GRIDFORGE_ERRORSIM_FLOOR_PLAN_H_
