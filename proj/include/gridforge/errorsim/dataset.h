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

#ifndef GRIDFORGE_ERRORSIM_DATASET_H_
#define GRIDFORGE_ERRORSIM_DATASET_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gridforge/errorsim/explorer.h"
#include "gridforge/errorsim/floor_plan.h"

namespace gridforge {
namespace errorsim {

struct Range {
  double min = 0.;
  double max = 0.;

  double Lerp(double t) const { return min + (max - min) * t; }
};

struct DatasetOptions {
  int count = 10;
  std::uint64_t master_seed = 1;
  // Completion is stratified across [min, max]; error magnitudes share one
  // independently stratified severity in [0, 1] mapped onto their ranges.
  Range completion{0.3, 1.0};
  Range noise_flip_prob{0.0, 0.04};
  Range linear_drift{0.0, 0.02};
  Range angular_drift{0.0, 1.0 * 3.14159265358979323846 / 180.};
  Range accidental_ray_prob{0.0, 0.2};
  bool augment = false;
  // When set, every sample explores this plan instead of a generated one.
  std::optional<FloorPlan> plan;
  FloorPlanOptions plan_options;
};

struct ManifestEntry {
  std::string id;
  std::uint64_t seed = 0;
  ErrorConfig config;
  double achieved_completion = 0.;
  std::string variant = "original";
};

// Per-sample seed derived from the master seed.
std::uint64_t SampleSeed(std::uint64_t master_seed, int index);

// Error configuration of sample `index` of `count`.
ErrorConfig SampleConfig(const DatasetOptions& options, int index);

// One manifest line:
// "<id> seed=<n> completion=<f> noise=<f> linear_drift=<f>
//  angular_drift=<f> accidental=<f> achieved=<f> variant=<name>".
std::string FormatManifestEntry(const ManifestEntry& entry);
ManifestEntry ParseManifestEntry(const std::string& line);
std::vector<ManifestEntry> ReadManifest(const std::filesystem::path& path);

// Generates the samples (in parallel, each deterministic), writes
// <id>_err.png and <id>_clean.png per pair into out_dir and manifest.txt
// with one line per pair. Ids are six-digit, sequential. Returns the
// manifest entries. I/O failures are reported with the sample id.
std::vector<ManifestEntry> GenerateDataset(const DatasetOptions& options,
                                           const std::filesystem::path& out_dir);

}  // namespace errorsim
}  // namespace gridforge

#endif  // GRIDFORGE_ERRORSIM_DATASET_H_
