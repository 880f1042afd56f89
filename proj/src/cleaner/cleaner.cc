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

#include "gridforge/cleaner/cleaner.h"

#include "gridforge/cleaner/forward.h"
#include "gridforge/common/error.h"
#include "gridforge/mapfilter/map_filter.h"

namespace gridforge {
namespace cleaner {

NeuralCleaner LoadNeuralCleaner(const std::filesystem::path& model_path) {
  return NeuralCleaner{
      std::make_shared<const GeneratorModel>(LoadGenerator(model_path))};
}

mapfilter::ModelRaster ApplyCleaner(const CleanerKind& cleaner,
                                    const mapfilter::ModelRaster& input) {
  if (const auto* neural = std::get_if<NeuralCleaner>(&cleaner)) {
    if (neural->model == nullptr) {
      throw ContractViolation("neural cleaner has no model");
    }
    return Forward(*neural->model, input);
  }
  return MorphologicalClean(input, std::get<MorphologicalCleaner>(cleaner).params);
}

image::GridImage CleanTrinary(const image::GridImage& trinary,
                              const CleanerKind& cleaner) {
  if (!image::IsTrinary(trinary)) {
    throw ContractViolation("CleanTrinary needs a trinary image");
  }
  mapfilter::OriginalDims dims;
  const mapfilter::ModelRaster input =
      mapfilter::ResizeForModel(mapfilter::RemoveFloaters(trinary), &dims);
  return mapfilter::RestoreFromModel(ApplyCleaner(cleaner, input), dims);
}

image::GridImage CleanImage(const image::GridImage& image,
                            const CleanerKind& cleaner) {
  if (image.width > kMaxImageSide || image.height > kMaxImageSide) {
    throw CapacityError("image " + std::to_string(image.width) + "x" +
                        std::to_string(image.height) + " exceeds " +
                        std::to_string(kMaxImageSide) + " per side");
  }
  if (image::IsTrinary(image)) return CleanTrinary(image, cleaner);
  return CleanTrinary(mapfilter::ConfidenceFilter(image), cleaner);
}

image::GridImage CleanMap(const mapping::OccupancyGrid& grid,
                          const CleanerKind& cleaner) {
  return CleanTrinary(mapfilter::ConfidenceFilter(mapping::SnapshotTrinary(grid)),
                      cleaner);
}

}  // namespace cleaner
}  // namespace gridforge
