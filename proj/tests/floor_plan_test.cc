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

#include <deque>

#include "gridforge/errorsim/floor_plan.h"
#include "gtest/gtest.h"

namespace gridforge {
namespace errorsim {
namespace {

// Breadth-first flood fill over 4-connected non-wall cells.
std::vector<bool> FloodFill(const FloorPlan& plan, int row, int col) {
  std::vector<bool> seen(plan.walls.size(), false);
  std::deque<std::pair<int, int>> queue{{row, col}};
  seen[row * plan.width + col] = true;
  while (!queue.empty()) {
    const auto [r, c] = queue.front();
    queue.pop_front();
    const int next[4][2] = {{r - 1, c}, {r + 1, c}, {r, c - 1}, {r, c + 1}};
    for (const auto& n : next) {
      if (plan.IsWall(n[0], n[1]) || seen[n[0] * plan.width + n[1]]) continue;
      seen[n[0] * plan.width + n[1]] = true;
      queue.emplace_back(n[0], n[1]);
    }
  }
  return seen;
}

TEST(FloorPlanTest, Deterministic) {
  const FloorPlan a = GenerateFloorPlan(99);
  const FloorPlan b = GenerateFloorPlan(99);
  EXPECT_EQ(a.walls, b.walls);
  EXPECT_NE(a.walls, GenerateFloorPlan(100).walls);
}

TEST(FloorPlanTest, FreeSpaceConnected) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const FloorPlan plan = GenerateFloorPlan(seed);
    int start = -1, free_cells = 0;
    for (int i = 0; i < plan.width * plan.height; ++i) {
      if (!plan.walls[i]) {
        ++free_cells;
        if (start < 0) start = i;
      }
    }
    ASSERT_GE(start, 0);
    const std::vector<bool> seen =
        FloodFill(plan, start / plan.width, start % plan.width);
    int reached = 0;
    for (bool s : seen) reached += s;
    EXPECT_EQ(reached, free_cells) << "seed " << seed;
    const std::vector<std::uint8_t> reachable =
        ReachableFree(plan, start / plan.width, start % plan.width);
    for (int i = 0; i < plan.width * plan.height; ++i) {
      EXPECT_EQ(reachable[i] != 0, seen[i]);
    }
  }
}

TEST(FloorPlanTest, BorderIsWall) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const FloorPlan plan = GenerateFloorPlan(seed);
    for (int i = 0; i < plan.width; ++i) {
      EXPECT_TRUE(plan.walls[i]);
      EXPECT_TRUE(plan.walls[(plan.height - 1) * plan.width + i]);
    }
    for (int r = 0; r < plan.height; ++r) {
      EXPECT_TRUE(plan.walls[r * plan.width]);
      EXPECT_TRUE(plan.walls[r * plan.width + plan.width - 1]);
    }
  }
}

TEST(FloorPlanTest, RoomCountWithinOptions) {
  const FloorPlanOptions options;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const FloorPlan plan = GenerateFloorPlan(seed, options);
    EXPECT_GE(static_cast<int>(plan.rooms.size()), options.min_rooms);
    EXPECT_LE(static_cast<int>(plan.rooms.size()), options.max_rooms);
  }
}

TEST(FloorPlanTest, ImageRoundTrip) {
  const FloorPlan plan = GenerateFloorPlan(5);
  const FloorPlan back = FloorPlanFromImage(RenderPlan(plan), plan.resolution);
  EXPECT_EQ(back.walls, plan.walls);
  EXPECT_EQ(back.width, plan.width);
}

}  // namespace
}  // namespace errorsim
}  // namespace gridforge
