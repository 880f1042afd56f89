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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gridforge/pointcloud/point_cloud.h"
#include "gridforge/projection/laser_scan.h"
#include "gtest/gtest.h"

namespace gridforge {
namespace projection {
namespace {

pointcloud::PointCloud3D CloudOf(
    std::initializer_list<Eigen::Vector3d> positions) {
  pointcloud::PointCloud3D cloud;
  for (const auto& p : positions) cloud.points.push_back({p, 0.});
  return cloud;
}

TEST(ProjectTo2DTest, AxisAlignedPoint) {
  const ProjectionOptions options{360, -0.5, 1.5};
  const LaserScan2D scan = ProjectTo2D(CloudOf({{1, 0, 0.1}}), options);
  ASSERT_EQ(scan.num_bins(), 360);
  const int bin = AzimuthBin(0., 360);
  EXPECT_DOUBLE_EQ(scan.ranges[bin], 1.0);
  int finite = 0;
  for (double r : scan.ranges) finite += std::isfinite(r);
  EXPECT_EQ(finite, 1);
}

TEST(ProjectTo2DTest, QuarterTurn) {
  const ProjectionOptions options{360, -0.5, 1.5};
  const LaserScan2D scan = ProjectTo2D(CloudOf({{0, 2, 0}}), options);
  EXPECT_DOUBLE_EQ(scan.ranges[AzimuthBin(std::numbers::pi / 2, 360)], 2.0);
}

TEST(ProjectTo2DTest, NearestInBinWins) {
  const ProjectionOptions options{360, -0.5, 1.5};
  const LaserScan2D scan =
      ProjectTo2D(CloudOf({{5, 0.001, 0}, {3, 0, 0}}), options);
  ASSERT_EQ(AzimuthBin(0., 360), AzimuthBin(std::atan2(0.001, 5.), 360));
  EXPECT_DOUBLE_EQ(scan.ranges[AzimuthBin(0., 360)], 3.0);
}

TEST(ProjectTo2DTest, BandExcludesPoints) {
  const LaserScan2D scan = ProjectTo2D(CloudOf({{1, 0, 0.05}, {1, 0, 2.5}}));
  for (double r : scan.ranges) EXPECT_EQ(r, kNoReturn);
}

TEST(ProjectTo2DTest, BeamAngleInsideOwnBin) {
  const LaserScan2D scan = ProjectTo2D(CloudOf({}));
  for (int bin = 0; bin < scan.num_bins(); ++bin) {
    EXPECT_EQ(AzimuthBin(scan.BeamAngle(bin), scan.num_bins()), bin);
  }
}

TEST(ProjectTo2DTest, MatchesPerBinMinimum) {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> u(-10., 10.);
  std::uniform_real_distribution<double> z(-1., 3.);
  pointcloud::PointCloud3D cloud;
  for (int i = 0; i < 20000; ++i) {
    cloud.points.push_back({{u(rng), u(rng), z(rng)}, 0.});
  }
  const ProjectionOptions options{180, 0.1, 2.0};
  const LaserScan2D scan = ProjectTo2D(cloud, options);
  std::vector<double> expected(180, kNoReturn);
  for (const auto& p : cloud.points) {
    const Eigen::Vector3d& v = p.position;
    if (v.z() < options.z_min || v.z() > options.z_max) continue;
    // Bins partition [-pi, pi) into equal sectors.
    double azimuth = std::atan2(v.y(), v.x());
    int bin = static_cast<int>(
        std::floor((azimuth + std::numbers::pi) / (2 * std::numbers::pi) * 180));
    bin = std::clamp(bin, 0, 179);
    expected[bin] = std::min(expected[bin], std::hypot(v.x(), v.y()));
  }
  for (int bin = 0; bin < 180; ++bin) {
    EXPECT_EQ(scan.ranges[bin], expected[bin]) << "bin " << bin;
  }
}

}  // namespace
}  // namespace projection
}  // namespace gridforge
