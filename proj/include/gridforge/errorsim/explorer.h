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

#ifndef GRIDFORGE_ERRORSIM_EXPLORER_H_
#define GRIDFORGE_ERRORSIM_EXPLORER_H_

#include <cstdint>

#include "gridforge/errorsim/floor_plan.h"
#include "gridforge/image/grid_image.h"

namespace gridforge {
namespace errorsim {

// Injected SLAM errors. Drift rates are per meter traveled.
struct ErrorConfig {
  double noise_flip_prob = 0.02;
  double linear_drift = 0.01;             // m/m
  double angular_drift = 0.5 * 3.14159265358979323846 / 180.;  // rad/m
  double completion_fraction = 0.8;
  double accidental_ray_prob = 0.1;
  std::uint64_t rng_seed = 0;
};

// Throws ContractViolation for probabilities outside [0, 1], completion
// outside (0, 1] or negative drift.
void ValidateErrorConfig(const ErrorConfig& config);

struct SensorOptions {
  int num_beams = 181;
  double field_of_view = 3.14159265358979323846;  // radians
  double max_range = 8.0;                          // meters
};

struct AgentOptions {
  // Distance between consecutive scans while walking, meters.
  double step = 0.25;
  // Clearance from walls, cells.
  int robot_radius = 4;
  // Hard cap on scans, a guard against pathological plans.
  int max_scans = 20000;
};

struct SamplePair {
  image::GridImage erroneous;
  image::GridImage clean;
  std::uint64_t seed = 0;
  ErrorConfig config;
  // Fraction of reachable free cells confidently observed as free.
  double achieved_completion = 0.;
  double path_length = 0.;
  // True when no reachable frontier was left before the quota was met.
  bool trapped = false;
};

// Frontier exploration of the plan. The agent repeatedly walks toward the
// nearest reachable frontier, scanning every `step` meters with a fan of
// beams cast from its true pose. The clean map integrates the true returns
// at the true pose. The erroneous map integrates the same beams at a pose
// that drifts with distance traveled, lets door-crossing beams continue
// through the wall they hit with probability accidental_ray_prob, and after
// confidence filtering flips each occupied/free pixel with
// noise_flip_prob. Exploration stops, mid-scan if needed, once
// completion_fraction of the reachable free cells are confidently free in
// the clean map. Both images are trinary and cover the plan extent.
SamplePair ExploreAndMap(const FloorPlan& plan, const ErrorConfig& config,
                         const SensorOptions& sensor = {},
                         const AgentOptions& agent = {});

}  // namespace errorsim
}  // namespace gridforge

#endif  // GRIDFORGE_ERRORSIM_EXPLORER_H_
