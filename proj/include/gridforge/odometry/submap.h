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

#ifndef GRIDFORGE_ODOMETRY_SUBMAP_H_
#define GRIDFORGE_ODOMETRY_SUBMAP_H_

#include <memory>
#include <numbers>
#include <vector>

#include "gridforge/odometry/gicp.h"
#include "gridforge/pointcloud/point_cloud.h"
#include "gridforge/transform/rigid_transform.h"

namespace gridforge {
namespace odometry {

struct SubmapOptions {
  double keyframe_distance = 1.0;
  double keyframe_yaw = 30. * std::numbers::pi / 180.;
  int submap_keyframes = 10;
  double voxel_resolution = 0.25;
  int covariance_neighbors = kDefaultCovarianceNeighbors;
};

struct Keyframe {
  transform::SE3Transform pose;
  // Keyframe cloud already transformed into the world frame.
  std::vector<Eigen::Vector3d> world_points;
};

// Local map S_k: the union of the keyframes nearest to the current pose,
// voxel-downsampled, with cached covariances and search tree.
class Submap {
 public:
  explicit Submap(const SubmapOptions& options = {}) : options_(options) {}

  bool empty() const { return keyframes_.empty(); }
  const std::vector<Keyframe>& keyframes() const { return keyframes_; }
  const std::vector<int>& active_keyframes() const { return active_; }
  const SubmapOptions& options() const { return options_; }

  // The current registration target. Requires !empty().
  const RegistrationTarget& target() const { return *target_; }
  std::shared_ptr<const RegistrationTarget> shared_target() const {
    return target_;
  }

  // Adds `cloud` (sensor frame) as a keyframe at `pose` if the pose is at
  // least keyframe_distance from the nearest keyframe or differs from it by
  // at least keyframe_yaw; the first pose always becomes a keyframe. Then
  // re-selects the submap around `pose`. Returns true if a keyframe was added.
  bool MaybeAddKeyframe(const transform::SE3Transform& pose,
                        const pointcloud::PointCloud3D& cloud);

  // Re-selects the submap_keyframes nearest keyframes to `pose`; rebuilds
  // the target only if the selection changed.
  void UpdateFor(const transform::SE3Transform& pose);

 private:
  void Rebuild();

  SubmapOptions options_;
  std::vector<Keyframe> keyframes_;
  std::vector<int> active_;
  std::shared_ptr<const RegistrationTarget> target_;
};

}  // namespace odometry
}  // namespace gridforge

#endif  // GRIDFORGE_ODOMETRY_SUBMAP_H_
