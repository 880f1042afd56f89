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

#include "gridforge/cleaner/morphological.h"

#include <algorithm>
#include <array>
#include <vector>

namespace gridforge {
namespace cleaner {
namespace {

using image::GridImage;
using image::kFree;
using image::kOccupied;
using image::kUnexplored;

// Order in which classes are processed, which is also the tie order for
// repainting (reversed: free wins ties).
constexpr std::array<std::uint8_t, 3> kClasses = {kOccupied, kFree,
                                                  kUnexplored};

int ClassIndex(std::uint8_t code) {
  return code == kOccupied ? 0 : code == kFree ? 1 : 2;
}

void RemoveSmallComponents(GridImage& img, std::uint8_t code, int min_area) {
  const int w = img.width;
  const int h = img.height;
  std::vector<int> label(static_cast<std::size_t>(w) * h, -1);
  std::vector<int> component;
  std::vector<int> stack;
  int next_label = 0;
  for (int start = 0; start < w * h; ++start) {
    if (img.pixels[start] != code || label[start] >= 0) continue;
    component.clear();
    stack.assign(1, start);
    label[start] = next_label;
    std::array<int, 3> border_votes = {0, 0, 0};
    std::vector<int> border;
    while (!stack.empty()) {
      const int index = stack.back();
      stack.pop_back();
      component.push_back(index);
      const int r = index / w;
      const int c = index % w;
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          if (dr == 0 && dc == 0) continue;
          const int nr = r + dr;
          const int nc = c + dc;
          if (!img.Contains(nr, nc)) continue;
          const int neighbor = nr * w + nc;
          if (img.pixels[neighbor] == code) {
            if (label[neighbor] < 0) {
              label[neighbor] = next_label;
              stack.push_back(neighbor);
            }
          } else {
            border.push_back(neighbor);
          }
        }
      }
    }
    ++next_label;
    if (static_cast<int>(component.size()) >= min_area) continue;
    // Each bordering pixel votes once.
    std::sort(border.begin(), border.end());
    border.erase(std::unique(border.begin(), border.end()), border.end());
    for (int index : border) ++border_votes[ClassIndex(img.pixels[index])];
    if (border.empty()) continue;
    int best = 1;
    for (int candidate : {2, 0}) {
      if (border_votes[candidate] > border_votes[best]) best = candidate;
    }
    for (int index : component) img.pixels[index] = kClasses[best];
  }
}

void CloseOccupied(GridImage& img) {
  const int w = img.width;
  const int h = img.height;
  // Dilation over a one-pixel frame around the image; outside is background.
  const int pw = w + 2;
  std::vector<std::uint8_t> dilated(static_cast<std::size_t>(pw) * (h + 2), 0);
  for (int r = -1; r <= h; ++r) {
    for (int c = -1; c <= w; ++c) {
      bool hit = false;
      for (int dr = -1; dr <= 1 && !hit; ++dr) {
        for (int dc = -1; dc <= 1 && !hit; ++dc) {
          hit = img.Contains(r + dr, c + dc) &&
                img.at(r + dr, c + dc) == kOccupied;
        }
      }
      dilated[(r + 1) * pw + c + 1] = hit;
    }
  }
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (img.at(r, c) == kOccupied) continue;
      bool all = true;
      for (int dr = 0; dr <= 2 && all; ++dr) {
        for (int dc = 0; dc <= 2 && all; ++dc) {
          all = dilated[(r + dr) * pw + c + dc];
        }
      }
      if (all) img.at(r, c) = kOccupied;
    }
  }
}

}  // namespace

GridImage MorphologicalClean(const GridImage& trinary,
                             const MorphologyParams& params) {
  GridImage out = trinary;
  if (out.pixels.empty()) return out;
  for (std::uint8_t code : kClasses) {
    RemoveSmallComponents(out, code, params.min_area);
  }
  if (params.close_occupied) CloseOccupied(out);
  return out;
}

mapfilter::ModelRaster MorphologicalClean(const mapfilter::ModelRaster& raster,
                                          const MorphologyParams& params) {
  GridImage codes(mapfilter::kModelSize, mapfilter::kModelSize);
  for (std::size_t i = 0; i < raster.values.size(); ++i) {
    codes.pixels[i] = mapfilter::ModelValueToCode(raster.values[i]);
  }
  const GridImage cleaned = MorphologicalClean(codes, params);
  mapfilter::ModelRaster out;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] = mapfilter::CodeToModelValue(cleaned.pixels[i]);
  }
  return out;
}

}  // namespace cleaner
}  // namespace gridforge
