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

#ifndef GRIDFORGE_PROJECTION_LASER_SCAN_H_
#define GRIDFORGE_PROJECTION_LASER_SCAN_H_

#include <limits>
#include <vector>

#include "gridforge/pointcloud/point_cloud.h"

namespace gridforge {
namespace projection {

// Range value of a bin that received no return.
constexpr double kNoReturn = std::numeric_limits<double>::infinity();

// Planar range scan. Bin i covers azimuths
// [angle_min + i * width, angle_min + (i + 1) * width) with
// width = (angle_max - angle_min) / num_bins; the beam of a bin points along
// its center angle.
struct LaserScan2D {
  double angle_min = 0.;
  double angle_max = 0.;
  double timestamp = 0.;
  std::vector<double> ranges;

  int num_bins() const { return static_cast<int>(ranges.size()); }
  double bin_width() const { return (angle_max - angle_min) / num_bins(); }
  double BeamAngle(int bin) const {
    return angle_min + (bin + 0.5) * bin_width();
  }
};

struct ProjectionOptions {
  int num_bins = 720;
  double z_min = 0.1;
  double z_max = 2.0;
};

// Bin index for an azimuth in (-pi, pi] with bins spanning (-pi, pi].
int AzimuthBin(double azimuth, int num_bins);

// Flattens a cloud into a 360 degree scan: points with z outside
// [z_min, z_max] are dropped, the rest go to the bin of their azimuth
// atan2(y, x) with planar range sqrt(x^2 + y^2). Multiple points in a bin keep
// the minimum range; empty bins hold kNoReturn.
LaserScan2D ProjectTo2D(const pointcloud::PointCloud3D& cloud,
                        const ProjectionOptions& options = {});

}  // namespace projection
}  // namespace gridforge

#endif  // GRIDFORGE_PROJECTION_LASER_SCAN_H_
