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

#include "gridforge/pointcloud/filters.h"

#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "gridforge/common/error.h"

namespace gridforge {
namespace pointcloud {
namespace {

struct VoxelKey {
  std::int64_t x, y, z;
  bool operator==(const VoxelKey&) const = default;
};

struct VoxelKeyHash {
  std::size_t operator()(const VoxelKey& key) const {
    // Large primes, as in the classic spatial hashing scheme.
    return static_cast<std::size_t>(key.x * 73856093) ^
           static_cast<std::size_t>(key.y * 19349663) ^
           static_cast<std::size_t>(key.z * 83492791);
  }
};

struct Accumulator {
  Eigen::Vector3d sum = Eigen::Vector3d::Zero();
  double intensity_sum = 0.;
  int count = 0;
};

}  // namespace

PointCloud3D BoxFilter(const PointCloud3D& cloud, double half_extent) {
  if (!(half_extent > 0.)) {
    throw ContractViolation("box filter half extent must be positive");
  }
  PointCloud3D filtered;
  filtered.timestamp = cloud.timestamp;
  filtered.points.reserve(cloud.size());
  for (const Point3& point : cloud.points) {
    if (point.position.cwiseAbs().maxCoeff() > half_extent) {
      filtered.points.push_back(point);
    }
  }
  return filtered;
}

PointCloud3D VoxelDownsample(const PointCloud3D& cloud, double resolution) {
  if (!(resolution > 0.)) {
    throw ContractViolation("voxel resolution must be positive");
  }
  std::unordered_map<VoxelKey, std::size_t, VoxelKeyHash> index;
  index.reserve(cloud.size());
  std::vector<Accumulator> voxels;
  const double inverse = 1. / resolution;
  for (const Point3& point : cloud.points) {
    const VoxelKey key{
        static_cast<std::int64_t>(std::floor(point.position.x() * inverse)),
        static_cast<std::int64_t>(std::floor(point.position.y() * inverse)),
        static_cast<std::int64_t>(std::floor(point.position.z() * inverse))};
    const auto [it, inserted] = index.try_emplace(key, voxels.size());
    if (inserted) voxels.emplace_back();
    Accumulator& voxel = voxels[it->second];
    voxel.sum += point.position;
    voxel.intensity_sum += point.intensity;
    ++voxel.count;
  }
  PointCloud3D downsampled;
  downsampled.timestamp = cloud.timestamp;
  downsampled.points.reserve(voxels.size());
  for (const Accumulator& voxel : voxels) {
    downsampled.points.push_back(
        Point3{voxel.sum / voxel.count, voxel.intensity_sum / voxel.count});
  }
  return downsampled;
}

}  // namespace pointcloud
}  // namespace gridforge
