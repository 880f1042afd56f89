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

#ifndef GRIDFORGE_SESSION_SLAM_SESSION_H_
#define GRIDFORGE_SESSION_SLAM_SESSION_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gridforge/cleaner/cleaner.h"
#include "gridforge/mapping/occupancy_grid.h"
#include "gridforge/mapping/pose_trail.h"
#include "gridforge/odometry/gicp.h"
#include "gridforge/odometry/submap.h"
#include "gridforge/pointcloud/point_cloud.h"
#include "gridforge/session/async_cleaner.h"
#include "gridforge/session/session_config.h"
#include "gridforge/transform/rigid_transform.h"

namespace gridforge {
namespace session {

struct FrameReport {
  int index = 0;
  double timestamp = 0.;
  transform::SE3Transform world_pose;
  transform::Pose2D pose;
  bool registration_failed = false;
  bool keyframe_added = false;
  bool clean_scheduled = false;
  std::string warning;
};

// Builds the cleaner selected by the config; nullopt for kNone. Loading a
// model may throw IoError or ModelFormatError.
std::optional<cleaner::CleanerKind> MakeCleaner(const SessionConfig& config);

// The full per-frame pipeline: box filter, voxel filter, scan-to-scan GICP
// against the previous filtered frame, scan-to-submap GICP warm-started at
// the composed pose, keyframe bookkeeping, projection of the box-filtered
// cloud and integration at the planar pose. Frames are processed strictly in
// order by one caller; cleaning runs on snapshots on a worker thread.
class SlamSession {
 public:
  explicit SlamSession(
      const SessionConfig& config,
      std::optional<cleaner::CleanerKind> cleaner = std::nullopt);

  // Registration failures fall back to constant velocity; the frame is still
  // integrated and the report carries a warning. Throws ContractViolation if
  // the timestamp does not exceed the previous one.
  FrameReport ProcessFrame(const pointcloud::PointCloud3D& cloud);

  // Cleans the current grid synchronously and caches the result.
  CleanedMap RequestClean();

  // Newest finished clean, asynchronous or synchronous.
  std::optional<CleanedMap> LatestClean() const;

  // Waits for the worker, then cleans the final grid synchronously unless the
  // latest clean already covers it. nullopt without a cleaner or frames.
  std::optional<CleanedMap> Finalize();

  bool has_cleaner() const { return cleaner_.has_value(); }
  // True once max_consecutive_failures registrations failed in a row.
  bool collapsed() const;
  int frame_count() const { return frame_count_; }
  int consecutive_failures() const { return consecutive_failures_; }
  const transform::SE3Transform& world_pose() const { return world_pose_; }
  // Requires at least one processed frame.
  const mapping::OccupancyGrid& grid() const;
  const mapping::PoseTrail& trail() const { return trail_; }
  const odometry::Submap& submap() const { return submap_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  // Sequence numbers handed to the asynchronous cleaner, in order.
  const std::vector<int>& scheduled_cleans() const { return scheduled_cleans_; }
  const SessionConfig& config() const { return config_; }

 private:
  image::GridImage TrinarySnapshot() const;

  const SessionConfig config_;
  std::optional<cleaner::CleanerKind> cleaner_;
  std::unique_ptr<AsyncCleaner> async_cleaner_;

  odometry::Submap submap_;
  std::optional<mapping::OccupancyGrid> grid_;
  mapping::PoseTrail trail_;
  std::shared_ptr<const odometry::RegistrationTarget> previous_target_;
  transform::SE3Transform world_pose_;
  transform::SE3Transform previous_world_pose_;
  int frame_count_ = 0;
  int consecutive_failures_ = 0;
  double last_timestamp_ = 0.;
  std::vector<std::string> warnings_;
  std::vector<int> scheduled_cleans_;
  std::optional<CleanedMap> sync_clean_;
};

}  // namespace session
}  // namespace gridforge

#endif  // GRIDFORGE_SESSION_SLAM_SESSION_H_
