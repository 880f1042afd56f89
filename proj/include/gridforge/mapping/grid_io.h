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

#ifndef GRIDFORGE_MAPPING_GRID_IO_H_
#define GRIDFORGE_MAPPING_GRID_IO_H_

#include <filesystem>
#include <string>

#include "gridforge/mapping/occupancy_grid.h"

namespace gridforge {
namespace mapping {

// Sidecar facts describing an exported grid raster.
struct GridMetadata {
  std::string image;
  double resolution = 0.;
  transform::Pose2D origin;
  int width = 0;
  int height = 0;
};

GridMetadata MetadataFor(const OccupancyGrid& grid, const std::string& image);

// "key: value" lines: image, resolution, origin_x, origin_y, origin_yaw,
// width, height.
std::string FormatMetadata(const GridMetadata& metadata);
GridMetadata ParseMetadata(const std::string& text);
GridMetadata ReadMetadata(const std::filesystem::path& path);

// Writes SnapshotTrinary(grid) as <stem>.pgm and metadata as <stem>.yaml,
// where `stem` is the path without extension.
void WriteGridMap(const OccupancyGrid& grid, const std::filesystem::path& stem);

}  // namespace mapping
}  // namespace gridforge

#endif  // GRIDFORGE_MAPPING_GRID_IO_H_
