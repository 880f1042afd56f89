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

#ifndef GRIDFORGE_SESSION_SESSION_CONFIG_H_
#define GRIDFORGE_SESSION_SESSION_CONFIG_H_

#include <filesystem>
#include <string>

#include "gridforge/cleaner/morphological.h"
#include "gridforge/mapping/occupancy_grid.h"
#include "gridforge/odometry/gicp.h"
#include "gridforge/odometry/submap.h"
#include "gridforge/projection/laser_scan.h"

namespace gridforge {
namespace session {

enum class CleanerSelection { kNone, kMorphological, kNeural };

struct SessionConfig {
  double box_half_extent = 0.5;
  double voxel_resolution = 0.25;
  projection::ProjectionOptions projection;
  odometry::GicpOptions gicp;
  odometry::SubmapOptions submap;
  mapping::MappingOptions mapping;
  // Side of the initial grid in cells, centered on the first pose.
  int initial_grid_cells = 256;

  CleanerSelection cleaner = CleanerSelection::kMorphological;
  std::filesystem::path model_path;
  cleaner::MorphologyParams morphology;
  // Clean every N processed frames; 0 disables periodic cleaning.
  int clean_every = 10;

  // This many consecutive registration failures end the run.
  int max_consecutive_failures = 5;
};

// Throws ContractViolation for out-of-range values.
void ValidateSessionConfig(const SessionConfig& config);

// Line-oriented "key: value" text; blank lines and '#' comments ignored.
// Keys: box_half_extent, voxel_resolution, projection_bins, z_min, z_max,
// max_correspondence_distance, max_iterations, convergence_epsilon,
// min_correspondences, covariance_neighbors, keyframe_distance,
// keyframe_yaw_deg, submap_keyframes, resolution, log_odds_hit,
// log_odds_miss, log_odds_clamp, max_cells, initial_grid_cells,
// cleaner (none | morph | model), model_path, min_area, clean_every,
// max_consecutive_failures. Unknown keys and bad values throw ParseError.
SessionConfig ParseSessionConfig(const std::string& text,
                                 SessionConfig base = {});
SessionConfig LoadSessionConfig(const std::filesystem::path& path,
                                SessionConfig base = {});
std::string FormatSessionConfig(const SessionConfig& config);

}  // namespace session
}  // namespace gridforge

#endif  // GRIDFORGE_SESSION_SESSION_CONFIG_H_
