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

#include "gridforge/odometry/gicp.h"
#include "gridforge/odometry/submap.h"
#include "gridforge/pointcloud/filters.h"
#include "gtest/gtest.h"
#include "test_clouds.h"

namespace gridforge {
namespace odometry {
namespace {

using transform::SE3Transform;

pointcloud::PointCloud3D ToCloud(const std::vector<Eigen::Vector3d>& points) {
  pointcloud::PointCloud3D cloud;
  for (const auto& p : points) cloud.points.push_back({p, 0.});
  return cloud;
}

TEST(SubmapTest, FirstPoseIsKeyframe) {
  Submap submap;
  EXPECT_TRUE(submap.empty());
  EXPECT_TRUE(submap.MaybeAddKeyframe(SE3Transform::Identity(),
                                      ToCloud(testing::MakeSurfaceCloud(300, 1))));
  EXPECT_EQ(submap.keyframes().size(), 1u);
}

TEST(SubmapTest, Thresholds) {
  const pointcloud::PointCloud3D cloud =
      ToCloud(testing::MakeSurfaceCloud(600, 2));
  Submap submap;
  submap.MaybeAddKeyframe(SE3Transform::Identity(), cloud);
  EXPECT_FALSE(submap.MaybeAddKeyframe(
      SE3Transform::FromTranslation({0.1, 0, 0}), cloud));
  EXPECT_TRUE(submap.MaybeAddKeyframe(
      SE3Transform::FromYaw(0.6, {0.1, 0, 0}), cloud));
  EXPECT_TRUE(submap.MaybeAddKeyframe(
      SE3Transform::FromTranslation({1.5, 0, 0}), cloud));
  EXPECT_EQ(submap.keyframes().size(), 3u);
}

TEST(SubmapTest, TargetIsDownsampledUnion) {
  const pointcloud::PointCloud3D cloud =
      ToCloud(testing::MakeSurfaceCloud(2000, 3));
  Submap submap;
  submap.MaybeAddKeyframe(SE3Transform::Identity(), cloud);
  const std::size_t first = submap.target().size();
  const SE3Transform moved = SE3Transform::FromTranslation({1.5, 0.3, 0});
  submap.MaybeAddKeyframe(moved, cloud);
  pointcloud::PointCloud3D merged;
  for (const auto& p : cloud.points) merged.points.push_back(p);
  for (const auto& p : cloud.points) merged.points.push_back({moved * p.position, 0.});
  const std::size_t expected =
      pointcloud::VoxelDownsample(merged, submap.options().voxel_resolution)
          .size();
  EXPECT_EQ(submap.target().size(), expected);
  EXPECT_GT(submap.target().size(), first);
  EXPECT_LT(submap.target().size(), 2 * cloud.size());
}

TEST(SubmapTest, KeepsNearestKeyframes) {
  SubmapOptions options;
  options.submap_keyframes = 2;
  Submap submap(options);
  const pointcloud::PointCloud3D cloud =
      ToCloud(testing::MakeSurfaceCloud(300, 4));
  for (int i = 0; i < 4; ++i) {
    submap.MaybeAddKeyframe(SE3Transform::FromTranslation({2. * i, 0, 0}),
                            cloud);
  }
  EXPECT_EQ(submap.active_keyframes(), (std::vector<int>{2, 3}));
  submap.UpdateFor(SE3Transform::Identity());
  EXPECT_EQ(submap.active_keyframes(), (std::vector<int>{0, 1}));
}

TEST(SubmapRegistrationTest, SingleKeyframeIdentity) {
  const std::vector<Eigen::Vector3d> points = testing::MakeSurfaceCloud(1500, 5);
  Submap submap;
  submap.MaybeAddKeyframe(SE3Transform::Identity(), ToCloud(points));
  const auto source = CovarianceCloud::FromPoints(
      pointcloud::Positions(pointcloud::VoxelDownsample(ToCloud(points))), 10);
  const RegistrationResult result =
      Register(source, submap.target(), SE3Transform::Identity());
  EXPECT_LT(result.transform.translation().norm(), 1e-3);
}

TEST(SubmapRegistrationTest, DisplacedSourceRecovered) {
  // Dense sampling so the voxel centroids of all keyframes agree.
  const std::vector<Eigen::Vector3d> world = testing::MakeSurfaceCloud(60000, 6);
  Submap submap;
  for (int i = 0; i < 3; ++i) {
    const SE3Transform pose = SE3Transform::FromTranslation({1.2 * i, 0, 0});
    std::vector<Eigen::Vector3d> local;
    for (const auto& p : world) local.push_back(pose.inverse() * p);
    submap.MaybeAddKeyframe(pose, ToCloud(local));
  }
  ASSERT_EQ(submap.keyframes().size(), 3u);
  const SE3Transform truth = SE3Transform::FromTranslation({1.4, 0.2, 0});
  std::vector<Eigen::Vector3d> local;
  for (const auto& p : world) {
    local.push_back(truth.inverse() * p);
  }
  const auto source = CovarianceCloud::FromPoints(
      pointcloud::Positions(pointcloud::VoxelDownsample(ToCloud(local), 0.1)),
      10);
  const RegistrationResult result = Register(
      source, submap.target(), SE3Transform::FromTranslation({1.2, 0, 0}));
  EXPECT_LT((result.transform.translation() - truth.translation()).norm(),
            1e-3);
  EXPECT_LT(result.transform.RotationAngle(), 1e-2);
}

TEST(SubmapRegistrationTest, AliasedCorridorHasNoGuarantee) {
  // Planes z=0, y=-1 and y=1 only: motion along x is unobservable. Only the
  // constrained directions are checked; x is whatever the solver drifts to.
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> u(0., 1.);
  std::vector<Eigen::Vector3d> points;
  for (int i = 0; i < 3000; ++i) {
    const double x = -10 + 20 * u(rng);
    switch (i % 3) {
      case 0: points.emplace_back(x, -1 + 2 * u(rng), 0.); break;
      case 1: points.emplace_back(x, -1., 2 * u(rng)); break;
      default: points.emplace_back(x, 1., 2 * u(rng)); break;
    }
  }
  const auto source = CovarianceCloud::FromPoints(points, 10);
  const RegistrationTarget target(points, 10);
  const RegistrationResult result = Register(
      source, target, SE3Transform::FromTranslation({2.5, 0, 0}));
  EXPECT_TRUE(result.transform.IsValid(1e-6));
  EXPECT_TRUE(std::isfinite(result.transform.translation().x()));
  EXPECT_LT(std::abs(result.transform.translation().y()), 1e-2);
  EXPECT_LT(std::abs(result.transform.translation().z()), 1e-2);
  EXPECT_LT(result.transform.RotationAngle(), 1e-2);
}

}  // namespace
}  // namespace odometry
}  // namespace gridforge
