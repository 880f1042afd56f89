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

#include <cmath>
#include <random>

#include "gridforge/common/error.h"
#include "gridforge/mapping/occupancy_grid.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace gridforge {
namespace mapping {
namespace {

double Sigmoid(double x) { return 1. / (1. + std::exp(-x)); }

TEST(IntegrateBeamTest, OneMetreBeam) {
  OccupancyGrid grid(64, 64, transform::Pose2D{});
  const auto cells =
      grid.IntegrateBeam(transform::Pose2D{0.025, 0.025, 0.}, 0., 1.0);
  ASSERT_EQ(cells.size(), 21u);
  for (int i = 0; i < 20; ++i) {
    EXPECT_EQ(cells[i], (CellIndex{0, i}));
    EXPECT_LT(grid.Probability(cells[i]), 0.5);
    EXPECT_NEAR(grid.Probability(cells[i]), Sigmoid(-0.41), 1e-7);
  }
  EXPECT_EQ(cells.back(), (CellIndex{0, 20}));
  EXPECT_NEAR(grid.Probability(cells.back()), Sigmoid(1.5), 1e-7);
  EXPECT_NEAR(grid.Probability(cells.back()), 0.8176, 1e-4);
  EXPECT_EQ(grid.ExploredCount(), 21u);
}

TEST(IntegrateBeamTest, ClampAfterFiveHits) {
  OccupancyGrid grid(64, 64, transform::Pose2D{});
  std::vector<CellIndex> cells;
  for (int i = 0; i < 5; ++i) {
    cells = grid.IntegrateBeam(transform::Pose2D{0.025, 0.025, 0.}, 0., 1.0);
  }
  EXPECT_NEAR(grid.Probability(cells.back()), Sigmoid(4.), 1e-7);
  EXPECT_NEAR(grid.Probability(cells.back()), 0.982, 1e-3);
  EXPECT_NEAR(grid.LogOdds(cells.front()), -2.05, 1e-6);
}

TEST(IntegrateScanTest, MatchesBruteForceOracle) {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    testing::RayScene scene = testing::MakeRayScene(rng);
    const testing::OracleGrid oracle =
        testing::BruteForceIntegrate(scene.grid, scene.scan, scene.pose);
    scene.grid.IntegrateScan(scene.scan, scene.pose);
    ASSERT_EQ(scene.grid.width(), 32);
    EXPECT_EQ(testing::CountRayMismatches(scene.grid, oracle), 0) << trial;
  }
}

TEST(IntegrateScanTest, SkipsMissingReturns) {
  OccupancyGrid grid(32, 32, transform::Pose2D{});
  projection::LaserScan2D scan;
  scan.angle_min = -1;
  scan.angle_max = 1;
  scan.ranges = {projection::kNoReturn, 0., std::nan("")};
  grid.IntegrateScan(scan, transform::Pose2D{0.8, 0.8, 0.});
  EXPECT_EQ(grid.ExploredCount(), 0u);
}

TEST(GrowToIncludeTest, ShiftsOldContent) {
  OccupancyGrid grid(10, 10, transform::Pose2D{});
  grid.SetLogOdds({3, 4}, 2.);
  const Eigen::Vector2d before = grid.CellCenter({3, 4});
  const CellIndex shift = grid.GrowToInclude({-1, 5});
  EXPECT_EQ(shift, (CellIndex{10, 0}));
  EXPECT_EQ(grid.width(), 10);
  EXPECT_EQ(grid.height(), 20);
  EXPECT_FLOAT_EQ(grid.LogOdds({13, 4}), 2.f);
  EXPECT_TRUE(grid.IsExplored({13, 4}));
  EXPECT_EQ(grid.ExploredCount(), 1u);
  EXPECT_LT((grid.CellCenter({13, 4}) - before).norm(), 1e-12);
}

TEST(GrowToIncludeTest, BeamOutsideGrows) {
  OccupancyGrid grid(16, 16, transform::Pose2D{});
  grid.IntegrateBeam(transform::Pose2D{0.4, 0.4, 0.}, 0., 3.0);
  EXPECT_GE(grid.width() * grid.resolution(), 3.4);
  EXPECT_EQ(grid.height(), 16);
  EXPECT_NEAR(grid.Probability(grid.WorldToCell({3.4, 0.4})), Sigmoid(1.5),
              1e-7);
}

TEST(GrowToIncludeTest, CapacityError) {
  MappingOptions options;
  options.max_cells = 64;
  OccupancyGrid grid(32, 32, transform::Pose2D{}, options);
  EXPECT_NO_THROW(grid.GrowToInclude({0, 63}));
  EXPECT_THROW(grid.GrowToInclude({0, 64}), CapacityError);
  EXPECT_THROW(OccupancyGrid(65, 1, transform::Pose2D{}, options),
               CapacityError);
}

TEST(SnapshotTrinaryTest, Codes) {
  MappingOptions options;
  options.log_odds_clamp = 100.;
  OccupancyGrid grid(4, 1, transform::Pose2D{}, options);
  grid.SetLogOdds({0, 0}, 50.);
  grid.SetLogOdds({0, 1}, -50.);
  grid.SetLogOdds({0, 2}, 0.);
  const image::GridImage image = SnapshotTrinary(grid);
  EXPECT_EQ(image.at(0, 0), 254);
  EXPECT_EQ(image.at(0, 1), 0);
  EXPECT_EQ(image.at(0, 2), 127);
  EXPECT_EQ(image.at(0, 3), 255);
}

}  // namespace
}  // namespace mapping
}  // namespace gridforge
