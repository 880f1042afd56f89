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

#ifndef GRIDFORGE_MAPFILTER_MAP_FILTER_H_
#define GRIDFORGE_MAPFILTER_MAP_FILTER_H_

#include <vector>

#include "gridforge/image/grid_image.h"

namespace gridforge {
namespace mapfilter {

// Side length of the square raster the cleaner operates on.
constexpr int kModelSize = 256;

// Real-valued encodings of the trinary codes inside the generator's tanh
// range.
constexpr float kOccupiedValue = -1.0f;
constexpr float kFreeValue = 0.6f;
constexpr float kUnexploredValue = 1.0f;

// Raw probability code of p = 0.5, and the half-width of the band around it
// treated as too uncertain to keep (p within 0.15 of 0.5).
constexpr int kMidpointCode = 127;
constexpr int kConfidenceMargin = 38;

// kModelSize x kModelSize real raster, row-major.
struct ModelRaster {
  std::vector<float> values =
      std::vector<float>(kModelSize * kModelSize, kUnexploredValue);

  float& at(int row, int col) { return values[row * kModelSize + col]; }
  float at(int row, int col) const { return values[row * kModelSize + col]; }
};

struct OriginalDims {
  int height = 0;
  int width = 0;
};

// Raw probability codes to trinary: codes within kConfidenceMargin of the
// midpoint become unexplored, codes above the band occupied (0), codes below
// it free (200). 255 stays unexplored.
image::GridImage ConfidenceFilter(const image::GridImage& raw);

// Floater removal. A non-unexplored pixel with fewer than two same-valued
// 4-neighbors becomes unexplored; counts are taken on the input image (one
// synchronous pass), pixels outside the image count as different.
image::GridImage RemoveFloaters(const image::GridImage& trinary);

float CodeToModelValue(std::uint8_t code);
// Nearest of {occupied, free, unexplored} values, as a trinary code.
std::uint8_t ModelValueToCode(float value);

// Nearest-neighbor resample of a trinary image to the model raster.
ModelRaster ResizeForModel(const image::GridImage& trinary,
                           OriginalDims* dims);

// Inverse of ResizeForModel: nearest-neighbor resample back to `dims` and
// snap every value to the nearest class. Throws ContractViolation for values
// outside [-1, 1] by more than 1e-3.
image::GridImage RestoreFromModel(const ModelRaster& raster,
                                  const OriginalDims& dims);

}  // namespace mapfilter
}  // namespace gridforge

#endif  // GRIDFORGE_MAPFILTER_MAP_FILTER_H_
