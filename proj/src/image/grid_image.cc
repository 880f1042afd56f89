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

#include "gridforge/image/grid_image.h"

#include <algorithm>

#include "gridforge/common/error.h"

namespace gridforge {
namespace image {

GridImage::GridImage(int width, int height, std::uint8_t fill)
    : width(width), height(height) {
  if (width < 1 || height < 1) {
    throw ContractViolation("image dimensions must be at least 1x1");
  }
  pixels.assign(static_cast<std::size_t>(width) * height, fill);
}

bool IsTrinary(const GridImage& image) {
  return std::all_of(image.pixels.begin(), image.pixels.end(),
                     [](std::uint8_t v) {
                       return v == kOccupied || v == kFree || v == kUnexplored;
                     });
}

std::size_t CountCode(const GridImage& image, std::uint8_t code) {
  return static_cast<std::size_t>(
      std::count(image.pixels.begin(), image.pixels.end(), code));
}

}  // namespace image
}  // namespace gridforge
