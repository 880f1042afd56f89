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

#include "gridforge/projection/laser_scan.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gridforge/common/error.h"

namespace gridforge {
namespace projection {

int AzimuthBin(double azimuth, int num_bins) {
  constexpr double kPi = std::numbers::pi;
  const double width = 2. * kPi / num_bins;
  int bin = static_cast<int>(std::floor((azimuth + kPi) / width));
  // atan2 may return -pi, which is the same direction as pi.
  bin %= num_bins;
  if (bin < 0) bin += num_bins;
  return bin;
}

LaserScan2D ProjectTo2D(const pointcloud::PointCloud3D& cloud,
                        const ProjectionOptions& options) {
  if (options.num_bins < 1) {
    throw ContractViolation("projection needs at least one bin");
  }
  if (!(options.z_min < options.z_max)) {
    throw ContractViolation("projection z band is empty");
  }
  LaserScan2D scan;
  scan.angle_min = -std::numbers::pi;
  scan.angle_max = std::numbers::pi;
  scan.timestamp = cloud.timestamp;
  scan.ranges.assign(options.num_bins, kNoReturn);
  for (const auto& point : cloud.points) {
    const Eigen::Vector3d& p = point.position;
    if (p.z() < options.z_min || p.z() > options.z_max) continue;
    const double range = std::hypot(p.x(), p.y());
    if (!(range > 0.)) continue;
    const int bin = AzimuthBin(std::atan2(p.y(), p.x()), options.num_bins);
    scan.ranges[bin] = std::min(scan.ranges[bin], range);
  }
  return scan;
}

}  // namespace projection
}  // namespace gridforge
