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

#include "gridforge/odometry/submap.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gridforge/pointcloud/filters.h"

namespace gridforge {
namespace odometry {

bool Submap::MaybeAddKeyframe(const transform::SE3Transform& pose,
                              const pointcloud::PointCloud3D& cloud) {
  bool add = keyframes_.empty();
  if (!add) {
    std::size_t nearest = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < keyframes_.size(); ++i) {
      const double distance =
          (keyframes_[i].pose.translation() - pose.translation()).norm();
      if (distance < best) {
        best = distance;
        nearest = i;
      }
    }
    const double yaw_difference = std::abs(transform::NormalizeAngle(
        transform::Se3ToPose2D(pose).yaw -
        transform::Se3ToPose2D(keyframes_[nearest].pose).yaw));
    add = best >= options_.keyframe_distance ||
          yaw_difference >= options_.keyframe_yaw;
  }
  if (add) {
    Keyframe keyframe{pose, {}};
    keyframe.world_points.reserve(cloud.size());
    for (const auto& point : cloud.points) {
      keyframe.world_points.push_back(pose * point.position);
    }
    keyframes_.push_back(std::move(keyframe));
    active_.clear();  // Forces a rebuild.
  }
  UpdateFor(pose);
  return add;
}

void Submap::UpdateFor(const transform::SE3Transform& pose) {
  if (keyframes_.empty()) return;
  std::vector<int> order(keyframes_.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> distance(keyframes_.size());
  for (std::size_t i = 0; i < keyframes_.size(); ++i) {
    distance[i] =
        (keyframes_[i].pose.translation() - pose.translation()).norm();
  }
  const std::size_t count = std::min<std::size_t>(
      keyframes_.size(), static_cast<std::size_t>(options_.submap_keyframes));
  std::partial_sort(order.begin(), order.begin() + count, order.end(),
                    [&](int a, int b) {
                      return distance[a] != distance[b] ? distance[a] < distance[b]
                                                        : a < b;
                    });
  order.resize(count);
  std::sort(order.begin(), order.end());
  if (order == active_ && target_ != nullptr) return;
  active_ = std::move(order);
  Rebuild();
}

void Submap::Rebuild() {
  pointcloud::PointCloud3D merged;
  for (int index : active_) {
    for (const Eigen::Vector3d& p : keyframes_[index].world_points) {
      merged.points.push_back(pointcloud::Point3{p, 0.});
    }
  }
  const pointcloud::PointCloud3D downsampled =
      pointcloud::VoxelDownsample(merged, options_.voxel_resolution);
  target_ = std::make_shared<const RegistrationTarget>(
      pointcloud::Positions(downsampled), options_.covariance_neighbors);
}

}  // namespace odometry
}  // namespace gridforge
