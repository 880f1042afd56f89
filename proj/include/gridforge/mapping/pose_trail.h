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

#ifndef GRIDFORGE_MAPPING_POSE_TRAIL_H_
#define GRIDFORGE_MAPPING_POSE_TRAIL_H_

#include <filesystem>
#include <string>
#include <vector>

#include "gridforge/transform/rigid_transform.h"

namespace gridforge {
namespace mapping {

struct TimedPose {
  double timestamp = 0.;
  transform::Pose2D pose;
};

// Ordered odometry poses, one per processed frame. No graph optimization.
class PoseTrail {
 public:
  // Throws ContractViolation unless timestamp exceeds the last one.
  void Append(double timestamp, const transform::Pose2D& pose);

  const std::vector<TimedPose>& poses() const { return poses_; }
  std::size_t size() const { return poses_.size(); }
  bool empty() const { return poses_.empty(); }

  // One "timestamp x y yaw" line per pose.
  std::string Format() const;
  void Write(const std::filesystem::path& path) const;

  bool operator==(const PoseTrail&) const;

 private:
  std::vector<TimedPose> poses_;
};

}  // namespace mapping
}  // namespace gridforge

#endif  // GRIDFORGE_MAPPING_POSE_TRAIL_H_
