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

#ifndef GRIDFORGE_SYNTHETIC_SCENE_H_
#define GRIDFORGE_SYNTHETIC_SCENE_H_

#include <cstdint>
#include <filesystem>
#include <vector>

#include "Eigen/Core"
#include "gridforge/pointcloud/point_cloud.h"
#include "gridforge/transform/rigid_transform.h"

namespace gridforge {
namespace synthetic {

// Axis-aligned solid box in world coordinates.
struct Box {
  Eigen::Vector3d min;
  Eigen::Vector3d max;
};

// Static indoor scene: solid boxes between a floor plane and a ceiling
// plane. Walls and pillars are boxes.
struct Scene {
  std::vector<Box> boxes;
  double floor_z = 0.;
  double ceiling_z = 3.0;

  // Distance along a unit ray to the first surface, or +inf.
  double Raycast(const Eigen::Vector3d& origin,
                 const Eigen::Vector3d& direction) const;
};

// Rectangular room [0, width] x [0, depth] with 0.2 m walls and a few
// pillars placed deterministically from `seed`.
Scene MakeRoom(double width, double depth, std::uint64_t seed = 7);

// Straight corridor along +x from x = -2 to x = length, inner width `width`,
// with irregular wall-mounted boxes so that motion along it is observable.
Scene MakeCorridor(double length, double width, std::uint64_t seed = 11);

// Rotating multi-beam LiDAR, 16 rings by default.
struct LidarOptions {
  int rings = 16;
  double min_elevation = -15. * 3.14159265358979323846 / 180.;
  double max_elevation = 15. * 3.14159265358979323846 / 180.;
  int azimuth_steps = 1875;
  double max_range = 30.;
  // Gaussian range noise, meters.
  double range_noise = 0.;
};

// Scan in the sensor frame from `sensor_pose` (sensor to world). Misses are
// dropped. Intensity is 1 / (1 + range).
pointcloud::PointCloud3D SimulateScan(const Scene& scene,
                                      const transform::SE3Transform& sensor_pose,
                                      const LidarOptions& options,
                                      double timestamp,
                                      std::uint64_t noise_seed = 0);

// Sensor height above the floor used by the trajectory helpers.
constexpr double kSensorHeight = 0.6;

// Poses of `frames` frames on a circle of `radius` around (cx, cy), facing
// along the direction of travel, one full loop.
std::vector<transform::SE3Transform> LoopTrajectory(double cx, double cy,
                                                    double radius, int frames);

// Poses along +x starting at (x0, y0) with constant `step`.
std::vector<transform::SE3Transform> LineTrajectory(double x0, double y0,
                                                    double step, int frames);

// Simulates one frame per pose at 10 Hz and writes them into `directory`
// as frame_000000.txt, ...
void WriteSequence(const Scene& scene,
                   const std::vector<transform::SE3Transform>& poses,
                   const LidarOptions& options,
                   const std::filesystem::path& directory,
                   std::uint64_t noise_seed = 0);

}  // namespace synthetic
}  // namespace gridforge

#endif  // GRIDFORGE_SYNTHETIC_SCENE_H_
