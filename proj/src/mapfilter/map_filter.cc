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

#include "gridforge/mapfilter/map_filter.h"

#include <cmath>
#include <cstdlib>

#include "gridforge/common/error.h"

namespace gridforge {
namespace mapfilter {

using image::GridImage;
using image::kFree;
using image::kOccupied;
using image::kUnexplored;

GridImage ConfidenceFilter(const GridImage& raw) {
  GridImage out = raw;
  for (std::uint8_t& pixel : out.pixels) {
    if (pixel == kUnexplored) continue;
    const int code = pixel;
    if (std::abs(code - kMidpointCode) < kConfidenceMargin) {
      pixel = kUnexplored;
    } else if (code > kMidpointCode) {
      pixel = kOccupied;
    } else {
      pixel = kFree;
    }
  }
  return out;
}

GridImage RemoveFloaters(const GridImage& trinary) {
  GridImage out = trinary;
  constexpr int kOffsets[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
  for (int r = 0; r < trinary.height; ++r) {
    for (int c = 0; c < trinary.width; ++c) {
      const std::uint8_t value = trinary.at(r, c);
      if (value == kUnexplored) continue;
      int same = 0;
      for (const auto& offset : kOffsets) {
        const int nr = r + offset[0];
        const int nc = c + offset[1];
        if (trinary.Contains(nr, nc) && trinary.at(nr, nc) == value) ++same;
      }
      if (same < 2) out.at(r, c) = kUnexplored;
    }
  }
  return out;
}

float CodeToModelValue(std::uint8_t code) {
  switch (code) {
    case kOccupied:
      return kOccupiedValue;
    case kFree:
      return kFreeValue;
    case kUnexplored:
      return kUnexploredValue;
    default:
      throw ContractViolation("pixel code " + std::to_string(code) +
                              " is not trinary");
  }
}

std::uint8_t ModelValueToCode(float value) {
  // Decision boundaries are the midpoints between neighboring class values.
  constexpr float kOccupiedFree = 0.5f * (kOccupiedValue + kFreeValue);
  constexpr float kFreeUnexplored = 0.5f * (kFreeValue + kUnexploredValue);
  if (value < kOccupiedFree) return kOccupied;
  if (value <= kFreeUnexplored) return kFree;
  return kUnexplored;
}

ModelRaster ResizeForModel(const GridImage& trinary, OriginalDims* dims) {
  ModelRaster raster;
  for (int r = 0; r < kModelSize; ++r) {
    const int src_r = static_cast<int>(
        static_cast<long long>(r) * trinary.height / kModelSize);
    for (int c = 0; c < kModelSize; ++c) {
      const int src_c = static_cast<int>(
          static_cast<long long>(c) * trinary.width / kModelSize);
      raster.at(r, c) = CodeToModelValue(trinary.at(src_r, src_c));
    }
  }
  if (dims != nullptr) *dims = OriginalDims{trinary.height, trinary.width};
  return raster;
}

GridImage RestoreFromModel(const ModelRaster& raster,
                           const OriginalDims& dims) {
  constexpr float kTolerance = 1e-3f;
  for (float value : raster.values) {
    if (!(value >= -1.f - kTolerance && value <= 1.f + kTolerance)) {
      throw ContractViolation("model output value " + std::to_string(value) +
                              " outside [-1, 1]");
    }
  }
  GridImage out(dims.width, dims.height);
  for (int r = 0; r < dims.height; ++r) {
    const int src_r =
        static_cast<int>(static_cast<long long>(r) * kModelSize / dims.height);
    for (int c = 0; c < dims.width; ++c) {
      const int src_c =
          static_cast<int>(static_cast<long long>(c) * kModelSize / dims.width);
      out.at(r, c) = ModelValueToCode(raster.at(src_r, src_c));
    }
  }
  return out;
}

}  // namespace mapfilter
}  // namespace gridforge
