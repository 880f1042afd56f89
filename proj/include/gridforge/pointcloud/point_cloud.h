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

#ifndef GRIDFORGE_POINTCLOUD_POINT_CLOUD_H_
#define GRIDFORGE_POINTCLOUD_POINT_CLOUD_H_

#include <filesystem>
#include <string>
#include <vector>

#include "Eigen/Core"

namespace gridforge {
namespace pointcloud {

// A single LiDAR return, coordinates in meters in the sensor frame.
struct Point3 {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  double intensity = 0.;
};

struct PointCloud3D {
  double timestamp = 0.;
  std::vector<Point3> points;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

std::vector<Eigen::Vector3d> Positions(const PointCloud3D& cloud);

// Parses the ASCII format
//
//   FIELDS x y z intensity
//   POINTS <n>
//   <x> <y> <z> <intensity>     (n lines)
//
// An optional "TIMESTAMP <seconds>" header line may precede the data; blank
// lines and lines starting with '#' are ignored. Throws ParseError naming the
// offending line, IoError when the file cannot be opened.
PointCloud3D LoadPointCloud(const std::filesystem::path& path);
PointCloud3D ParsePointCloud(const std::string& text);

// Writes a cloud in the format read by LoadPointCloud, including the
// TIMESTAMP line.
void WritePointCloud(const PointCloud3D& cloud,
                     const std::filesystem::path& path);
std::string FormatPointCloud(const PointCloud3D& cloud);

// Files in `directory`, sorted lexicographically, one per frame. Frames
// without a TIMESTAMP header get index * default_period. Throws ParseError if
// timestamps do not strictly increase.
std::vector<std::filesystem::path> ListSequence(
    const std::filesystem::path& directory);
std::vector<PointCloud3D> LoadSequence(const std::filesystem::path& directory,
                                       double default_period = 0.1);

}  // namespace pointcloud
}  // namespace gridforge

#endif  // GRIDFORGE_POINTCLOUD_POINT_CLOUD_H_
