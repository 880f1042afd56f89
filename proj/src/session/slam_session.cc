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

#include "gridforge/session/slam_session.h"

#include "gridforge/common/error.h"
#include "gridforge/mapfilter/map_filter.h"
#include "gridforge/pointcloud/filters.h"
#include "gridforge/projection/laser_scan.h"

namespace gridforge {
namespace session {

using transform::SE3Transform;

std::optional<cleaner::CleanerKind> MakeCleaner(const SessionConfig& config) {
  switch (config.cleaner) {
    case CleanerSelection::kMorphological:
      return cleaner::MorphologicalCleaner{config.morphology};
    case CleanerSelection::kNeural:
      return cleaner::LoadNeuralCleaner(config.model_path);
    default:
      return std::nullopt;
  }
}

SlamSession::SlamSession(const SessionConfig& config,
                         std::optional<cleaner::CleanerKind> cleaner)
    : config_(config), cleaner_(std::move(cleaner)), submap_(config.submap) {
  ValidateSessionConfig(config_);
  if (cleaner_) async_cleaner_ = std::make_unique<AsyncCleaner>(*cleaner_);
}

FrameReport SlamSession::ProcessFrame(const pointcloud::PointCloud3D& cloud) {
  if (frame_count_ > 0 && !(cloud.timestamp > last_timestamp_)) {
    throw ContractViolation("frame timestamp " +
                            std::to_string(cloud.timestamp) +
                            " does not exceed the previous frame's");
  }
  FrameReport report;
  report.index = frame_count_;
  report.timestamp = cloud.timestamp;

  const pointcloud::PointCloud3D boxed =
      pointcloud::BoxFilter(cloud, config_.box_half_extent);
  const pointcloud::PointCloud3D filtered =
      pointcloud::VoxelDownsample(boxed, config_.voxel_resolution);

  std::optional<odometry::CovarianceCloud> source;
  try {
    source = odometry::CovarianceCloud::FromPoints(
        pointcloud::Positions(filtered), config_.gicp.covariance_neighbors);
  } catch (const DegenerateInputError& e) {
    report.warning = e.what();
  }

  SE3Transform world = SE3Transform::Identity();
  if (frame_count_ > 0) {
    bool registered = false;
    if (source && previous_target_ && !submap_.empty()) {
      try {
        const odometry::RegistrationResult relative = odometry::Register(
            *source, *previous_target_, SE3Transform::Identity(), config_.gicp);
        const SE3Transform guess = world_pose_ * relative.transform;
        world = odometry::Register(*source, submap_.target(), guess,
                                   config_.gicp)
                    .transform;
        registered = true;
      } catch (const RegistrationError& e) {
        report.warning = e.what();
      }
    }
    if (registered) {
      consecutive_failures_ = 0;
    } else {
      // Constant velocity: repeat the last relative motion.
      world = world_pose_ * (previous_world_pose_.inverse() * world_pose_);
      report.registration_failed = true;
      ++consecutive_failures_;
      if (report.warning.empty()) report.warning = "no usable points";
      report.warning = "frame " + std::to_string(frame_count_) +
                       ": registration failed (" + report.warning +
                       "), using constant velocity";
      warnings_.push_back(report.warning);
    }
  }
  previous_world_pose_ = frame_count_ > 0 ? world_pose_ : world;
  world_pose_ = world;

  if (source) {
    previous_target_ = std::make_shared<const odometry::RegistrationTarget>(
        source->points, source->covariances);
  }
  if (!report.registration_failed && source) {
    try {
      report.keyframe_added = submap_.MaybeAddKeyframe(world, filtered);
    } catch (const DegenerateInputError& e) {
      warnings_.push_back("frame " + std::to_string(frame_count_) +
                          ": submap not updated (" + e.what() + ")");
    }
  } else if (!submap_.empty()) {
    submap_.UpdateFor(world);
  }

  report.world_pose = world;
  report.pose = transform::Se3ToPose2D(world);
  if (!grid_) {
    grid_ = mapping::OccupancyGrid::CenteredAt(
        report.pose.x, report.pose.y, config_.initial_grid_cells,
        config_.initial_grid_cells, config_.mapping);
  }
  projection::LaserScan2D scan =
      projection::ProjectTo2D(boxed, config_.projection);
  scan.timestamp = cloud.timestamp;
  grid_->IntegrateScan(scan, report.pose);
  trail_.Append(cloud.timestamp, report.pose);
  last_timestamp_ = cloud.timestamp;
  ++frame_count_;

  if (async_cleaner_ && config_.clean_every > 0 &&
      frame_count_ % config_.clean_every == 0) {
    async_cleaner_->Submit(TrinarySnapshot(), frame_count_);
    scheduled_cleans_.push_back(frame_count_);
    report.clean_scheduled = true;
  }
  return report;
}

image::GridImage SlamSession::TrinarySnapshot() const {
  return mapfilter::ConfidenceFilter(mapping::SnapshotTrinary(grid()));
}

const mapping::OccupancyGrid& SlamSession::grid() const {
  if (!grid_) throw ContractViolation("no frame has been processed");
  return *grid_;
}

CleanedMap SlamSession::RequestClean() {
  if (!cleaner_) throw ContractViolation("session has no cleaner");
  sync_clean_ = CleanedMap{cleaner::CleanTrinary(TrinarySnapshot(), *cleaner_),
                           frame_count_};
  return *sync_clean_;
}

std::optional<CleanedMap> SlamSession::LatestClean() const {
  std::optional<CleanedMap> async;
  if (async_cleaner_) async = async_cleaner_->Latest();
  if (!async) return sync_clean_;
  if (!sync_clean_) return async;
  return sync_clean_->sequence >= async->sequence ? sync_clean_ : async;
}

std::optional<CleanedMap> SlamSession::Finalize() {
  if (!cleaner_ || frame_count_ == 0) return std::nullopt;
  async_cleaner_->WaitIdle();
  if (const std::string error = async_cleaner_->last_error(); !error.empty()) {
    warnings_.push_back("background clean failed: " + error);
  }
  std::optional<CleanedMap> latest = LatestClean();
  if (latest && latest->sequence == frame_count_) return latest;
  return RequestClean();
}

bool SlamSession::collapsed() const {
  return consecutive_failures_ >= config_.max_consecutive_failures;
}

}  // namespace session
}  // namespace gridforge
