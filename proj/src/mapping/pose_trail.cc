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

#include "gridforge/mapping/pose_trail.h"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "gridforge/common/error.h"

namespace gridforge {
namespace mapping {

void PoseTrail::Append(double timestamp, const transform::Pose2D& pose) {
  if (!poses_.empty() && !(timestamp > poses_.back().timestamp)) {
    throw ContractViolation("pose trail timestamps must increase");
  }
  poses_.push_back(TimedPose{timestamp, pose});
}

std::string PoseTrail::Format() const {
  std::ostringstream out;
  out << std::setprecision(9);
  for (const TimedPose& p : poses_) {
    out << p.timestamp << ' ' << p.pose.x << ' ' << p.pose.y << ' '
        << p.pose.yaw << '\n';
  }
  return out.str();
}

void PoseTrail::Write(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << Format();
  if (!out) throw IoError("failed writing " + path.string());
}

bool PoseTrail::operator==(const PoseTrail& other) const {
  if (poses_.size() != other.poses_.size()) return false;
  for (std::size_t i = 0; i < poses_.size(); ++i) {
    if (poses_[i].timestamp != other.poses_[i].timestamp ||
        !(poses_[i].pose == other.poses_[i].pose)) {
      return false;
    }
  }
  return true;
}

}  // namespace mapping
}  // namespace gridforge
