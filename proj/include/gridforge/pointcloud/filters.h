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

#ifndef GRIDFORGE_POINTCLOUD_FILTERS_H_
#define GRIDFORGE_POINTCLOUD_FILTERS_H_

#include "gridforge/pointcloud/point_cloud.h"

namespace gridforge {
namespace pointcloud {

constexpr double kDefaultBoxHalfExtent = 0.5;
constexpr double kDefaultVoxelResolution = 0.25;

// Drops every point inside the axis-aligned cube of the given half extent
// centered at the sensor origin, i.e. keeps max(|x|,|y|,|z|) > half_extent.
// Removes returns from the robot body. Order is preserved.
PointCloud3D BoxFilter(const PointCloud3D& cloud,
                       double half_extent = kDefaultBoxHalfExtent);

// Replaces the points of every occupied voxel (cubes of side `resolution`
// aligned to the origin) by their centroid with averaged intensity. Output
// follows the order in which voxels are first seen.
PointCloud3D VoxelDownsample(const PointCloud3D& cloud,
                             double resolution = kDefaultVoxelResolution);

}  // namespace pointcloud
}  // namespace gridforge

#endif  // GRIDFORGE_POINTCLOUD_FILTERS_H_
