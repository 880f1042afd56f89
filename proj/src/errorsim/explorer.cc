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

#include "gridforge/errorsim/explorer.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <random>
#include <vector>

#include "gridforge/common/error.h"
#include "gridforge/mapfilter/map_filter.h"
#include "gridforge/mapping/occupancy_grid.h"

namespace gridforge {
namespace errorsim {
namespace {

using mapping::CellIndex;
using mapping::OccupancyGrid;
using transform::Pose2D;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;
// Beam endpoints are pushed this far past the wall face so that they land
// inside the wall cell.
constexpr double kEndpointInset = 1e-3;

std::uint64_t SplitMix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct RayHit {
  double range = kInf;            // first wall face
  double continued_range = kInf;  // next wall face past that wall
  bool through_door = false;
};

class PlanRaycaster {
 public:
  explicit PlanRaycaster(const FloorPlan& plan) : plan_(plan) {
    door_mask_.assign(plan.walls.size(), 0);
    for (const CellRect& door : plan.doors) {
      for (int r = door.row; r < door.row + door.rows; ++r) {
        for (int c = door.col; c < door.col + door.cols; ++c) {
          door_mask_[static_cast<std::size_t>(r) * plan.width + c] = 1;
        }
      }
    }
  }

  RayHit Cast(double x, double y, double angle, double max_range) const {
    const double res = plan_.resolution;
    const double gx = x / res;
    const double gy = y / res;
    const double dx = std::cos(angle);
    const double dy = std::sin(angle);
    int col = static_cast<int>(std::floor(gx));
    int row = static_cast<int>(std::floor(gy));
    const int step_x = dx > 0. ? 1 : -1;
    const int step_y = dy > 0. ? 1 : -1;
    // Distances are in cells along the ray.
    const double delta_x = dx != 0. ? std::abs(1. / dx) : kInf;
    const double delta_y = dy != 0. ? std::abs(1. / dy) : kInf;
    double t_x = dx != 0. ? ((step_x > 0 ? col + 1. : col) - gx) / dx : kInf;
    double t_y = dy != 0. ? ((step_y > 0 ? row + 1. : row) - gy) / dy : kInf;
    const double limit = max_range / res;

    RayHit hit;
    int walls_crossed = 0;
    bool in_wall = false;
    while (true) {
      double t;
      if (t_x < t_y) {
        t = t_x;
        col += step_x;
        t_x += delta_x;
      } else {
        t = t_y;
        row += step_y;
        t_y += delta_y;
      }
      if (t > limit) break;
      if (row < 0 || row >= plan_.height || col < 0 || col >= plan_.width) {
        break;
      }
      const bool wall = plan_.IsWall(row, col);
      if (wall && !in_wall) {
        if (walls_crossed == 0) {
          hit.range = t * res;
        } else {
          hit.continued_range = t * res;
          break;
        }
        ++walls_crossed;
      }
      in_wall = wall;
      if (walls_crossed == 0 &&
          door_mask_[static_cast<std::size_t>(row) * plan_.width + col]) {
        hit.through_door = true;
      }
    }
    return hit;
  }

 private:
  const FloorPlan& plan_;
  std::vector<std::uint8_t> door_mask_;
};

// Cells whose disk of radius `radius` contains no wall.
std::vector<std::uint8_t> ConfigurationSpace(const FloorPlan& plan,
                                             int radius) {
  std::vector<std::uint8_t> open(plan.walls.size(), 1);
  for (int r = 0; r < plan.height; ++r) {
    for (int c = 0; c < plan.width; ++c) {
      if (!plan.IsWall(r, c)) continue;
      for (int dr = -radius; dr <= radius; ++dr) {
        for (int dc = -radius; dc <= radius; ++dc) {
          if (dr * dr + dc * dc > radius * radius) continue;
          const int nr = r + dr;
          const int nc = c + dc;
          if (nr < 0 || nr >= plan.height || nc < 0 || nc >= plan.width) {
            continue;
          }
          open[static_cast<std::size_t>(nr) * plan.width + nc] = 0;
        }
      }
    }
  }
  return open;
}

// Raw probability codes of `grid` over the plan raster.
image::GridImage CropToPlan(const OccupancyGrid& grid, const FloorPlan& plan) {
  image::GridImage out(plan.width, plan.height, image::kUnexplored);
  for (int r = 0; r < plan.height; ++r) {
    for (int c = 0; c < plan.width; ++c) {
      const CellIndex cell = grid.WorldToCell(
          Eigen::Vector2d((c + 0.5) * plan.resolution,
                          (r + 0.5) * plan.resolution));
      if (!grid.Contains(cell) || !grid.IsExplored(cell)) continue;
      out.at(r, c) =
          static_cast<std::uint8_t>(std::lround(grid.Probability(cell) * 254.));
    }
  }
  return out;
}

bool ConfidentlyFree(const OccupancyGrid& grid, const CellIndex& cell) {
  if (!grid.IsExplored(cell)) return false;
  const long code = std::lround(grid.Probability(cell) * 254.);
  return code <= mapfilter::kMidpointCode - mapfilter::kConfidenceMargin;
}

class Explorer {
 public:
  Explorer(const FloorPlan& plan, const ErrorConfig& config,
           const SensorOptions& sensor, const AgentOptions& agent)
      : plan_(plan),
        config_(config),
        sensor_(sensor),
        agent_(agent),
        raycaster_(plan),
        clean_(plan.width, plan.height, Pose2D{0., 0., 0.},
               OptionsFor(plan.resolution)),
        erroneous_(plan.width, plan.height, Pose2D{0., 0., 0.},
                   OptionsFor(plan.resolution)),
        main_rng_(SplitMix(config.rng_seed)),
        accident_rng_(SplitMix(config.rng_seed ^ 0xa5a5a5a5a5a5a5a5ULL)),
        noise_rng_(SplitMix(config.rng_seed ^ 0x5a5a5a5a5a5a5a5aULL)) {}

  SamplePair Run() {
    open_ = ConfigurationSpace(plan_, agent_.robot_radius);
    if (!PlaceAgent()) {
      throw DegenerateInputError("floor plan has no room for the agent");
    }
    counted_.assign(plan_.walls.size(), 0);
    blacklist_.assign(plan_.walls.size(), 0);
    quota_ = static_cast<std::size_t>(
        std::ceil(config_.completion_fraction * reachable_count_ - 1e-9));
    DrawDriftSigns();

    bool trapped = false;
    for (int turn = 0; turn < 4 && !Done(); ++turn) {
      Scan(true_pose_.yaw + (turn == 0 ? 0. : 0.5 * kPi));
    }
    while (!Done()) {
      std::vector<int> path;
      if (!PlanToFrontier(&path)) {
        trapped = true;
        break;
      }
      DrawDriftSigns();
      if (path.size() <= 1) {
        Arrive(path.empty() ? RobotIndex() : path.front());
      } else {
        Walk(path);
      }
    }

    SamplePair pair;
    pair.seed = config_.rng_seed;
    pair.config = config_;
    pair.path_length = path_length_;
    pair.achieved_completion =
        reachable_count_ ? static_cast<double>(observed_) / reachable_count_
                         : 1.;
    pair.trapped = trapped && observed_ < quota_;
    pair.clean = mapfilter::ConfidenceFilter(CropToPlan(clean_, plan_));
    pair.erroneous =
        ApplyNoise(mapfilter::ConfidenceFilter(CropToPlan(erroneous_, plan_)));
    return pair;
  }

 private:
  static mapping::MappingOptions OptionsFor(double resolution) {
    mapping::MappingOptions options;
    options.resolution = resolution;
    return options;
  }

  std::size_t Index(int row, int col) const {
    return static_cast<std::size_t>(row) * plan_.width + col;
  }
  int RobotIndex() const {
    return static_cast<int>(Index(
        static_cast<int>(std::floor(true_pose_.y / plan_.resolution)),
        static_cast<int>(std::floor(true_pose_.x / plan_.resolution))));
  }
  bool Done() const {
    return observed_ >= quota_ || scans_ >= agent_.max_scans;
  }

  bool PlaceAgent() {
    std::vector<int> candidates;
    for (int i = 0; i < static_cast<int>(open_.size()); ++i) {
      if (open_[i]) candidates.push_back(i);
    }
    if (candidates.empty()) return false;
    const int start = candidates[std::uniform_int_distribution<std::size_t>(
        0, candidates.size() - 1)(main_rng_)];
    const int row = start / plan_.width;
    const int col = start % plan_.width;
    const double yaw =
        std::uniform_real_distribution<double>(-kPi, kPi)(main_rng_);
    true_pose_ = Pose2D{(col + 0.5) * plan_.resolution,
                        (row + 0.5) * plan_.resolution, yaw};
    drift_pose_ = true_pose_;
    reachable_ = ReachableFree(plan_, row, col);
    reachable_count_ = 0;
    for (std::uint8_t r : reachable_) reachable_count_ += r;
    return true;
  }

  // One fan of beams around `yaw` from the current position.
  void Scan(double yaw) {
    true_pose_.yaw = transform::NormalizeAngle(yaw);
    drift_pose_.yaw = transform::NormalizeAngle(yaw + heading_error_);
    ++scans_;
    const int n = sensor_.num_beams;
    const double spacing = n > 1 ? sensor_.field_of_view / (n - 1) : 0.;
    for (int i = 0; i < n && observed_ < quota_; ++i) {
      const double beam = -0.5 * sensor_.field_of_view + i * spacing;
      const RayHit hit = raycaster_.Cast(true_pose_.x, true_pose_.y,
                                         true_pose_.yaw + beam,
                                         sensor_.max_range);
      // Drawn for every door-crossing beam so the stream does not depend on
      // the configured probability.
      bool accident = false;
      if (hit.through_door) {
        accident = std::uniform_real_distribution<double>(0., 1.)(
                       accident_rng_) < config_.accidental_ray_prob &&
                   std::isfinite(hit.continued_range);
      }
      if (!std::isfinite(hit.range)) continue;
      for (const CellIndex& cell :
           clean_.IntegrateBeam(true_pose_, beam, hit.range + kEndpointInset)) {
        CountIfObserved(cell);
      }
      const double err_range = accident ? hit.continued_range : hit.range;
      erroneous_.IntegrateBeam(drift_pose_, beam, err_range + kEndpointInset);
    }
  }

  void CountIfObserved(const CellIndex& cell) {
    const std::size_t index = Index(cell.row, cell.col);
    if (counted_[index] || !reachable_[index]) return;
    if (!ConfidentlyFree(clean_, cell)) return;
    counted_[index] = 1;
    ++observed_;
  }

  bool Navigable(int index) const {
    const CellIndex cell{index / plan_.width, index % plan_.width};
    return open_[index] && clean_.IsExplored(cell) && clean_.LogOdds(cell) < 0.f;
  }

  bool IsFrontier(int index) const {
    if (blacklist_[index] || !Navigable(index)) return false;
    const int row = index / plan_.width;
    const int col = index % plan_.width;
    constexpr int kOffsets[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
    for (const auto& offset : kOffsets) {
      const CellIndex neighbor{row + offset[0], col + offset[1]};
      if (clean_.Contains(neighbor) && !clean_.IsExplored(neighbor) &&
          !plan_.IsWall(neighbor.row, neighbor.col)) {
        return true;
      }
    }
    return false;
  }

  // Breadth-first search over navigable cells to the nearest frontier.
  // `path` runs from the robot cell to the frontier, inclusive.
  bool PlanToFrontier(std::vector<int>* path) {
    const int start = RobotIndex();
    std::vector<int> parent(plan_.walls.size(), -2);
    std::deque<int> queue = {start};
    parent[start] = -1;
    constexpr int kOffsets[8][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1},
                                    {-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
    while (!queue.empty()) {
      const int index = queue.front();
      queue.pop_front();
      if (IsFrontier(index)) {
        path->clear();
        for (int at = index; at != -1; at = parent[at]) path->push_back(at);
        std::reverse(path->begin(), path->end());
        return true;
      }
      const int row = index / plan_.width;
      const int col = index % plan_.width;
      for (const auto& offset : kOffsets) {
        const int nr = row + offset[0];
        const int nc = col + offset[1];
        if (nr < 0 || nr >= plan_.height || nc < 0 || nc >= plan_.width) {
          continue;
        }
        const int next = static_cast<int>(Index(nr, nc));
        if (parent[next] != -2 || !Navigable(next)) continue;
        parent[next] = index;
        queue.push_back(next);
      }
    }
    return false;
  }

  // Advances up to one step along `path` and scans facing the motion.
  void Walk(const std::vector<int>& path) {
    const double res = plan_.resolution;
    double travelled = 0.;
    std::size_t i = 0;
    while (i + 1 < path.size() && travelled < agent_.step) {
      const int a = path[i];
      const int b = path[i + 1];
      travelled += res * std::hypot(a / plan_.width - b / plan_.width,
                                    a % plan_.width - b % plan_.width);
      ++i;
    }
    const int target = path[i];
    const Eigen::Vector2d from(true_pose_.x, true_pose_.y);
    const Eigen::Vector2d to((target % plan_.width + 0.5) * res,
                             (target / plan_.width + 0.5) * res);
    MoveTo(to);
    const Eigen::Vector2d motion = to - from;
    Scan(motion.norm() > 0. ? std::atan2(motion.y(), motion.x())
                            : true_pose_.yaw);
    if (i + 1 == path.size() && IsFrontier(target)) Arrive(target);
  }

  // Turns in place at a reached frontier; blacklists it if it survives.
  void Arrive(int frontier) {
    for (int turn = 1; turn < 4 && !Done(); ++turn) {
      Scan(true_pose_.yaw + 0.5 * kPi);
    }
    if (IsFrontier(frontier)) blacklist_[frontier] = 1;
  }

  // Drift direction is redrawn for every leg toward a new frontier.
  void DrawDriftSigns() {
    linear_sign_ = std::uniform_int_distribution<int>(0, 1)(main_rng_) ? 1 : -1;
    angular_sign_ = std::uniform_int_distribution<int>(0, 1)(main_rng_) ? 1 : -1;
  }

  void MoveTo(const Eigen::Vector2d& to) {
    const Eigen::Vector2d delta = to - Eigen::Vector2d(true_pose_.x, true_pose_.y);
    const double distance = delta.norm();
    const double c = std::cos(heading_error_);
    const double s = std::sin(heading_error_);
    const double scale = 1. + linear_sign_ * config_.linear_drift;
    drift_pose_.x += scale * (c * delta.x() - s * delta.y());
    drift_pose_.y += scale * (s * delta.x() + c * delta.y());
    heading_error_ += angular_sign_ * config_.angular_drift * distance;
    true_pose_.x = to.x();
    true_pose_.y = to.y();
    path_length_ += distance;
  }

  image::GridImage ApplyNoise(image::GridImage image) {
    std::uniform_real_distribution<double> uniform(0., 1.);
    for (std::uint8_t& pixel : image.pixels) {
      if (pixel == image::kUnexplored) continue;
      if (uniform(noise_rng_) < config_.noise_flip_prob) {
        pixel = pixel == image::kOccupied ? image::kFree : image::kOccupied;
      }
    }
    return image;
  }

  const FloorPlan& plan_;
  const ErrorConfig config_;
  const SensorOptions sensor_;
  const AgentOptions agent_;
  const PlanRaycaster raycaster_;
  OccupancyGrid clean_;
  OccupancyGrid erroneous_;
  std::mt19937_64 main_rng_;
  std::mt19937_64 accident_rng_;
  std::mt19937_64 noise_rng_;

  std::vector<std::uint8_t> open_;
  std::vector<std::uint8_t> reachable_;
  std::vector<std::uint8_t> counted_;
  std::vector<std::uint8_t> blacklist_;
  std::size_t reachable_count_ = 0;
  std::size_t observed_ = 0;
  std::size_t quota_ = 0;
  int scans_ = 0;
  Pose2D true_pose_;
  Pose2D drift_pose_;
  double heading_error_ = 0.;
  int linear_sign_ = 1;
  int angular_sign_ = 1;
  double path_length_ = 0.;
};

}  // namespace

void ValidateErrorConfig(const ErrorConfig& config) {
  auto probability = [](double p, const char* name) {
    if (!(p >= 0. && p <= 1.)) {
      throw ContractViolation(std::string(name) + " must lie in [0, 1]");
    }
  };
  probability(config.noise_flip_prob, "noise_flip_prob");
  probability(config.accidental_ray_prob, "accidental_ray_prob");
  if (!(config.completion_fraction > 0. && config.completion_fraction <= 1.)) {
    throw ContractViolation("completion_fraction must lie in (0, 1]");
  }
  if (!(config.linear_drift >= 0.) || !(config.angular_drift >= 0.)) {
    throw ContractViolation("drift rates must be non-negative");
  }
}

SamplePair ExploreAndMap(const FloorPlan& plan, const ErrorConfig& config,
                         const SensorOptions& sensor,
                         const AgentOptions& agent) {
  ValidateErrorConfig(config);
  return Explorer(plan, config, sensor, agent).Run();
}

}  // namespace errorsim
}  // namespace gridforge
