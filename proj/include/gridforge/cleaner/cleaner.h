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

#ifndef GRIDFORGE_CLEANER_CLEANER_H_
#define GRIDFORGE_CLEANER_CLEANER_H_

#include <filesystem>
#include <memory>
#include <variant>

#include "gridforge/cleaner/generator_model.h"
#include "gridforge/cleaner/morphological.h"
#include "gridforge/image/grid_image.h"
#include "gridforge/mapping/occupancy_grid.h"

namespace gridforge {
namespace cleaner {

struct NeuralCleaner {
  std::shared_ptr<const GeneratorModel> model;
};

struct MorphologicalCleaner {
  MorphologyParams params;
};

using CleanerKind = std::variant<NeuralCleaner, MorphologicalCleaner>;

// Loads and validates a model file into a shareable neural cleaner.
NeuralCleaner LoadNeuralCleaner(const std::filesystem::path& model_path);

// Runs one cleaner on the 256 x 256 raster.
mapfilter::ModelRaster ApplyCleaner(const CleanerKind& cleaner,
                                    const mapfilter::ModelRaster& input);

// Floater removal, resize, cleaner, restore. Input must be trinary; the
// output has the input's dimensions.
image::GridImage CleanTrinary(const image::GridImage& trinary,
                              const CleanerKind& cleaner);

constexpr int kMaxImageSide = 8192;

// Cleans an image read from disk. Trinary images are used as is; anything
// else is treated as raw probability codes and confidence-filtered first.
// Throws CapacityError above kMaxImageSide per side.
image::GridImage CleanImage(const image::GridImage& image,
                            const CleanerKind& cleaner);

// Full chain on a live grid: snapshot, confidence filter, CleanTrinary.
image::GridImage CleanMap(const mapping::OccupancyGrid& grid,
                          const CleanerKind& cleaner);

}  // namespace cleaner
}  // namespace gridforge

#endif  // GRIDFORGE_CLEANER_CLEANER_H_
