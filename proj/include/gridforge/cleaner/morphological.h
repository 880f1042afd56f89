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

#ifndef GRIDFORGE_CLEANER_MORPHOLOGICAL_H_
#define GRIDFORGE_CLEANER_MORPHOLOGICAL_H_

#include "gridforge/image/grid_image.h"
#include "gridforge/mapfilter/map_filter.h"

namespace gridforge {
namespace cleaner {

struct MorphologyParams {
  // 8-connected components smaller than this many pixels are removed.
  int min_area = 4;
  // 3x3 closing of the occupied class after component removal.
  bool close_occupied = true;
};

// Deterministic baseline cleaner on a trinary image. For each class in turn
// (occupied, free, unexplored), 8-connected components below min_area are
// repainted with the most frequent class among their bordering pixels
// (ties: free, unexplored, occupied). Then the occupied set is closed with a
// 3x3 square; pixels outside the image count as occupied during erosion so
// walls touching the border do not shrink.
image::GridImage MorphologicalClean(const image::GridImage& trinary,
                                    const MorphologyParams& params = {});

// Same on the model raster: values are snapped to classes first.
mapfilter::ModelRaster MorphologicalClean(const mapfilter::ModelRaster& raster,
                                          const MorphologyParams& params = {});

}  // namespace cleaner
}  // namespace gridforge

#endif  // GRIDFORGE_CLEANER_MORPHOLOGICAL_H_
