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

#ifndef GRIDFORGE_ERRORSIM_AUGMENT_H_
#define GRIDFORGE_ERRORSIM_AUGMENT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "gridforge/errorsim/explorer.h"
#include "gridforge/errorsim/floor_plan.h"
#include "gridforge/image/grid_image.h"

namespace gridforge {
namespace errorsim {

// Counter-clockwise rotation by quarter_turns * 90 degrees (any integer).
image::GridImage Rotate90(const image::GridImage& image, int quarter_turns);

// Rotation by `angle` radians about the image center, same dimensions,
// nearest-neighbor sampling; pixels mapping outside the source are
// unexplored.
image::GridImage RotateImage(const image::GridImage& image, double angle);

image::GridImage CropImage(const image::GridImage& image, const CellRect& rect);

struct AugmentedPair {
  SamplePair pair;
  std::string variant;  // original, rot90, rot180, rot270, rot<deg>, crop
};

// Original, the three exact quarter rotations, one arbitrary rotation and
// one crop covering at least 60% of the area; every transform is applied
// identically to both images of the pair.
std::vector<AugmentedPair> Augment(const SamplePair& pair, std::uint64_t seed);

}  // namespace errorsim
}  // namespace gridforge

#endif  // GRIDFORGE_ERRORSIM_AUGMENT_H_
