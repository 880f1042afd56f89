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

#ifndef GRIDFORGE_CLEANER_FORWARD_H_
#define GRIDFORGE_CLEANER_FORWARD_H_

#include <vector>

#include "gridforge/cleaner/generator_model.h"
#include "gridforge/mapfilter/map_filter.h"

namespace gridforge {
namespace cleaner {

constexpr float kInstanceNormEpsilon = 1e-5f;

// Dense C x H x W activation, row-major within each channel.
struct Tensor {
  int channels = 0;
  int height = 0;
  int width = 0;
  std::vector<float> data;

  Tensor() = default;
  Tensor(int channels, int height, int width, float fill = 0.f)
      : channels(channels),
        height(height),
        width(width),
        data(static_cast<std::size_t>(channels) * height * width, fill) {}

  float& at(int c, int y, int x) {
    return data[(static_cast<std::size_t>(c) * height + y) * width + x];
  }
  const float& at(int c, int y, int x) const {
    return data[(static_cast<std::size_t>(c) * height + y) * width + x];
  }
};

// Runs the layer list on an input of any spatial size. Weights are assumed
// validated; a channel mismatch throws ContractViolation. Deterministic:
// the same model and input always give bit-identical output.
Tensor RunGenerator(const GeneratorModel& model, Tensor input);

// Generator inference on the 256 x 256 model raster.
mapfilter::ModelRaster Forward(const GeneratorModel& model,
                               const mapfilter::ModelRaster& input);

}  // namespace cleaner
}  // namespace gridforge

#endif  // GRIDFORGE_CLEANER_FORWARD_H_
