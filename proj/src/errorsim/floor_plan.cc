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

#include "gridforge/errorsim/floor_plan.h"

#include <algorithm>
#include <random>
#include <tuple>

#include "gridforge/common/error.h"

namespace gridforge {
namespace errorsim {
namespace {

// Clearance kept between a new wall and any existing door gap.
constexpr int kDoorMargin = 3;
constexpr int kMaxAttempts = 64;

int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool Intersects(const CellRect& a, const CellRect& b) {
  return a.row < b.row + b.rows && b.row < a.row + a.rows &&
         a.col < b.col + b.cols && b.col < a.col + a.cols;
}

void Fill(FloorPlan& plan, const CellRect& rect, std::uint8_t value) {
  for (int r = rect.row; r < rect.row + rect.rows; ++r) {
    for (int c = rect.col; c < rect.col + rect.cols; ++c) {
      plan.walls[static_cast<std::size_t>(r) * plan.width + c] = value;
    }
  }
}

// Splits `room` with a wall perpendicular to the chosen axis. Returns false
// if no wall position keeps both halves large enough and clear of doors.
bool TrySplit(FloorPlan& plan, const FloorPlanOptions& options,
              const CellRect& room, bool vertical_wall, std::mt19937_64& rng,
              CellRect* first, CellRect* second) {
  const int t = options.wall_thickness;
  const int start = vertical_wall ? room.col : room.row;
  const int extent = vertical_wall ? room.cols : room.rows;
  std::vector<int> positions;
  for (int p = start + options.min_room_side;
       p + t + options.min_room_side <= start + extent; ++p) {
    const CellRect keep_out =
        vertical_wall
            ? CellRect{room.row - t, p - kDoorMargin, room.rows + 2 * t,
                       t + 2 * kDoorMargin}
            : CellRect{p - kDoorMargin, room.col - t, t + 2 * kDoorMargin,
                       room.cols + 2 * t};
    const bool blocked =
        std::any_of(plan.doors.begin(), plan.doors.end(),
                    [&](const CellRect& door) {
                      return Intersects(door, keep_out);
                    });
    if (!blocked) positions.push_back(p);
  }
  if (positions.empty()) return false;
  const int p =
      positions[UniformInt(rng, 0, static_cast<int>(positions.size()) - 1)];

  const int span = vertical_wall ? room.rows : room.cols;
  const int along = vertical_wall ? room.row : room.col;
  const int door_length = std::min(
      UniformInt(rng, options.min_door, options.max_door), span - 4);
  const int door_start = UniformInt(rng, along + 2, along + span - 2 - door_length);
  CellRect wall, door;
  if (vertical_wall) {
    wall = CellRect{room.row, p, room.rows, t};
    door = CellRect{door_start, p, door_length, t};
    *first = CellRect{room.row, room.col, room.rows, p - room.col};
    *second = CellRect{room.row, p + t, room.rows, room.col + room.cols - p - t};
  } else {
    wall = CellRect{p, room.col, t, room.cols};
    door = CellRect{p, door_start, t, door_length};
    *first = CellRect{room.row, room.col, p - room.row, room.cols};
    *second = CellRect{p + t, room.col, room.row + room.rows - p - t, room.cols};
  }
  Fill(plan, wall, 1);
  Fill(plan, door, 0);
  plan.doors.push_back(door);
  return true;
}

FloorPlan Subdivide(std::mt19937_64& rng, const FloorPlanOptions& options) {
  const int n = options.size;
  const int t = options.wall_thickness;
  FloorPlan plan;
  plan.width = n;
  plan.height = n;
  plan.resolution = options.resolution;
  plan.walls.assign(static_cast<std::size_t>(n) * n, 1);
  const CellRect interior{t, t, n - 2 * t, n - 2 * t};
  Fill(plan, interior, 0);

  const int target = UniformInt(rng, options.min_rooms, options.max_rooms);
  std::vector<CellRect> rooms = {interior};
  std::vector<CellRect> finished;
  while (static_cast<int>(rooms.size() + finished.size()) < target &&
         !rooms.empty()) {
    // Pick a room with probability proportional to its area.
    std::vector<double> areas;
    for (const CellRect& room : rooms) {
      areas.push_back(static_cast<double>(room.rows) * room.cols);
    }
    const std::size_t pick =
        std::discrete_distribution<std::size_t>(areas.begin(), areas.end())(rng);
    const CellRect room = rooms[pick];
    rooms.erase(rooms.begin() + static_cast<std::ptrdiff_t>(pick));
    const bool prefer_vertical =
        room.cols > room.rows ||
        (room.cols == room.rows && UniformInt(rng, 0, 1) == 1);
    CellRect a, b;
    if (TrySplit(plan, options, room, prefer_vertical, rng, &a, &b) ||
        TrySplit(plan, options, room, !prefer_vertical, rng, &a, &b)) {
      rooms.push_back(a);
      rooms.push_back(b);
    } else {
      finished.push_back(room);
    }
  }
  plan.rooms = finished;
  plan.rooms.insert(plan.rooms.end(), rooms.begin(), rooms.end());
  std::sort(plan.rooms.begin(), plan.rooms.end(),
            [](const CellRect& x, const CellRect& y) {
              return std::tie(x.row, x.col) < std::tie(y.row, y.col);
            });
  return plan;
}

}  // namespace

bool FloorPlan::IsDoor(int row, int col) const {
  return std::any_of(doors.begin(), doors.end(), [&](const CellRect& door) {
    return door.Contains(row, col);
  });
}

FloorPlan GenerateFloorPlan(std::uint64_t seed,
                            const FloorPlanOptions& options) {
  if (options.min_rooms < 1 || options.max_rooms < options.min_rooms) {
    throw ContractViolation("bad room count range");
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    FloorPlan plan = Subdivide(rng, options);
    if (static_cast<int>(plan.rooms.size()) < options.min_rooms) continue;
    const CellRect& first = plan.rooms.front();
    const std::vector<std::uint8_t> reachable =
        ReachableFree(plan, first.row, first.col);
    std::size_t free_cells = 0;
    std::size_t reached = 0;
    for (std::size_t i = 0; i < plan.walls.size(); ++i) {
      free_cells += plan.walls[i] == 0;
      reached += reachable[i];
    }
    if (reached == free_cells) return plan;
  }
  throw ContractViolation("could not generate a connected floor plan");
}

FloorPlan FloorPlanFromImage(const image::GridImage& image, double resolution) {
  if (image.width < 3 || image.height < 3) {
    throw ContractViolation("floor plan image must be at least 3x3");
  }
  if (!(resolution > 0.)) {
    throw ContractViolation("floor plan resolution must be positive");
  }
  FloorPlan plan;
  plan.width = image.width;
  plan.height = image.height;
  plan.resolution = resolution;
  plan.walls.resize(image.pixels.size());
  for (int r = 0; r < image.height; ++r) {
    for (int c = 0; c < image.width; ++c) {
      const bool border =
          r == 0 || c == 0 || r == image.height - 1 || c == image.width - 1;
      plan.walls[static_cast<std::size_t>(r) * image.width + c] =
          border || image.at(r, c) < 128;
    }
  }
  return plan;
}

image::GridImage RenderPlan(const FloorPlan& plan) {
  image::GridImage out(plan.width, plan.height, image::kFree);
  for (std::size_t i = 0; i < plan.walls.size(); ++i) {
    if (plan.walls[i]) out.pixels[i] = image::kOccupied;
  }
  return out;
}

std::vector<std::uint8_t> ReachableFree(const FloorPlan& plan, int row,
                                        int col) {
  std::vector<std::uint8_t> reached(plan.walls.size(), 0);
  if (plan.IsWall(row, col)) return reached;
  std::vector<std::pair<int, int>> stack = {{row, col}};
  reached[static_cast<std::size_t>(row) * plan.width + col] = 1;
  constexpr int kOffsets[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
  while (!stack.empty()) {
    const auto [r, c] = stack.back();
    stack.pop_back();
    for (const auto& offset : kOffsets) {
      const int nr = r + offset[0];
      const int nc = c + offset[1];
      if (plan.IsWall(nr, nc)) continue;
      std::uint8_t& seen = reached[static_cast<std::size_t>(nr) * plan.width + nc];
      if (seen) continue;
      seen = 1;
      stack.emplace_back(nr, nc);
    }
  }
  return reached;
}

}  // namespace errorsim
}  // namespace gridforge
