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

#include "gridforge/errorsim/augment.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "gridforge/common/error.h"

namespace gridforge {
namespace errorsim {

image::GridImage Rotate90(const image::GridImage& image, int quarter_turns) {
  const int turns = ((quarter_turns % 4) + 4) % 4;
  image::GridImage out = image;
  for (int t = 0; t < turns; ++t) {
    const image::GridImage in = out;
    out = image::GridImage(in.height, in.width);
    for (int r = 0; r < in.height; ++r) {
      for (int c = 0; c < in.width; ++c) {
        out.at(in.width - 1 - c, r) = in.at(r, c);
      }
    }
  }
  return out;
}

image::GridImage RotateImage(const image::GridImage& image, double angle) {
  image::GridImage out(image.width, image.height, image::kUnexplored);
  const double cr = 0.5 * (image.height - 1);
  const double cc = 0.5 * (image.width - 1);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  for (int r = 0; r < out.height; ++r) {
    for (int col = 0; col < out.width; ++col) {
      // Inverse map: rotate the output position back by -angle.
      const double x = col - cc;
      const double y = r - cr;
      const int src_c = static_cast<int>(std::lround(cc + c * x - s * y));
      const int src_r = static_cast<int>(std::lround(cr + s * x + c * y));
      if (image.Contains(src_r, src_c)) out.at(r, col) = image.at(src_r, src_c);
    }
  }
  return out;
}

image::GridImage CropImage(const image::GridImage& image, const CellRect& rect) {
  if (rect.rows < 1 || rect.cols < 1 || rect.row < 0 || rect.col < 0 ||
      rect.row + rect.rows > image.height || rect.col + rect.cols > image.width) {
    throw ContractViolation("crop rectangle outside the image");
  }
  image::GridImage out(rect.cols, rect.rows);
  for (int r = 0; r < rect.rows; ++r) {
    for (int c = 0; c < rect.cols; ++c) {
      out.at(r, c) = image.at(rect.row + r, rect.col + c);
    }
  }
  return out;
}

std::vector<AugmentedPair> Augment(const SamplePair& pair, std::uint64_t seed) {
  if (pair.erroneous.width != pair.clean.width ||
      pair.erroneous.height != pair.clean.height) {
    throw DimensionMismatchError("pair images differ in size");
  }
  std::mt19937_64 rng(seed);
  std::vector<AugmentedPair> out;
  auto emit = [&](const std::string& variant, auto&& transform) {
    AugmentedPair augmented{pair, variant};
    augmented.pair.erroneous = transform(pair.erroneous);
    augmented.pair.clean = transform(pair.clean);
    out.push_back(std::move(augmented));
  };
  emit("original", [](const image::GridImage& img) { return img; });
  for (int turns = 1; turns <= 3; ++turns) {
    emit("rot" + std::to_string(90 * turns),
         [turns](const image::GridImage& img) { return Rotate90(img, turns); });
  }
  // Arbitrary angle away from the exact quarter turns.
  const int quarter = std::uniform_int_distribution<int>(0, 3)(rng);
  const double degrees =
      90. * quarter + std::uniform_real_distribution<double>(5., 85.)(rng);
  const double angle = degrees * 3.14159265358979323846 / 180.;
  emit("rot" + std::to_string(static_cast<int>(std::lround(degrees))),
       [angle](const image::GridImage& img) { return RotateImage(img, angle); });

  const int w = pair.clean.width;
  const int h = pair.clean.height;
  std::uniform_real_distribution<double> unit(0., 1.);
  const double fw = 0.6 + 0.4 * unit(rng);
  const double fh = 0.6 / fw + (1. - 0.6 / fw) * unit(rng);
  CellRect rect;
  rect.cols = std::clamp(static_cast<int>(std::ceil(fw * w)), 1, w);
  rect.rows = std::clamp(static_cast<int>(std::ceil(fh * h)), 1, h);
  rect.col = std::uniform_int_distribution<int>(0, w - rect.cols)(rng);
  rect.row = std::uniform_int_distribution<int>(0, h - rect.rows)(rng);
  emit("crop", [rect](const image::GridImage& img) {
    return CropImage(img, rect);
  });
  return out;
}

}  // namespace errorsim
}  // namespace gridforge
