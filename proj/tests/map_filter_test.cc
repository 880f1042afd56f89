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

#include <cmath>
#include <random>

#include "gridforge/common/error.h"
#include "gridforge/mapfilter/map_filter.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace gridforge {
namespace mapfilter {
namespace {

using image::GridImage;
using image::kFree;
using image::kOccupied;
using image::kUnexplored;

TEST(ConfidenceFilterTest, Codes) {
  GridImage raw(6, 1);
  raw.pixels = {254, 127, 20, 255, 165, 164};
  const GridImage out = ConfidenceFilter(raw);
  EXPECT_EQ(out.pixels,
            (std::vector<std::uint8_t>{kOccupied, kUnexplored, kFree,
                                       kUnexplored, kOccupied, kUnexplored}));
  GridImage low(2, 1);
  low.pixels = {89, 90};
  EXPECT_EQ(ConfidenceFilter(low).pixels,
            (std::vector<std::uint8_t>{kFree, kUnexplored}));
}

TEST(RemoveFloatersTest, IsolatedAndLine) {
  GridImage img(7, 5);
  img.at(0, 0) = kOccupied;  // isolated
  for (int c = 1; c < 6; ++c) img.at(2, c) = kOccupied;
  const GridImage out = RemoveFloaters(img);
  EXPECT_EQ(out.at(0, 0), kUnexplored);
  EXPECT_EQ(out.at(2, 1), kUnexplored);  // endpoint: one neighbor
  EXPECT_EQ(out.at(2, 5), kUnexplored);
  for (int c = 2; c < 5; ++c) EXPECT_EQ(out.at(2, c), kOccupied);
}

TEST(RemoveFloatersTest, MatchesNeighborCountOracle) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const GridImage img = testing::RandomTrinary(rng, 16, 16);
    const GridImage out = RemoveFloaters(img);
    EXPECT_EQ(out, testing::BruteForceFloaters(img));
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
      if (img.pixels[i] == kUnexplored) {
        EXPECT_EQ(out.pixels[i], kUnexplored);
      }
    }
  }
}

TEST(ModelValueTest, Mapping) {
  EXPECT_EQ(CodeToModelValue(kOccupied), -1.f);
  EXPECT_EQ(CodeToModelValue(kFree), 0.6f);
  EXPECT_EQ(CodeToModelValue(kUnexplored), 1.f);
  EXPECT_THROW(CodeToModelValue(127), ContractViolation);
  EXPECT_EQ(ModelValueToCode(-0.97f), kOccupied);
  EXPECT_EQ(ModelValueToCode(0.81f), kUnexplored);
  EXPECT_EQ(ModelValueToCode(0.6f), kFree);
  EXPECT_EQ(ModelValueToCode(0.f), kFree);
}

TEST(ResizeForModelTest, IdentityAt256) {
  std::mt19937 rng(3);
  const GridImage img = testing::RandomTrinary(rng, 256, 256);
  OriginalDims dims;
  const ModelRaster raster = ResizeForModel(img, &dims);
  EXPECT_EQ(dims.height, 256);
  EXPECT_EQ(dims.width, 256);
  for (int r = 0; r < 256; ++r) {
    for (int c = 0; c < 256; ++c) {
      EXPECT_EQ(raster.at(r, c), CodeToModelValue(img.at(r, c)));
    }
  }
}

TEST(ResizeForModelTest, UniformDownsample) {
  const ModelRaster raster = ResizeForModel(GridImage(512, 512), nullptr);
  for (float v : raster.values) EXPECT_EQ(v, 1.f);
}

TEST(ResizeForModelTest, CheckerboardQuadrants) {
  GridImage img(2, 2);
  img.pixels = {kOccupied, kFree, kFree, kOccupied};
  const ModelRaster raster = ResizeForModel(img, nullptr);
  for (int r = 0; r < 256; ++r) {
    for (int c = 0; c < 256; ++c) {
      const bool diagonal = (r < 128) == (c < 128);
      EXPECT_EQ(raster.at(r, c), diagonal ? -1.f : 0.6f);
    }
  }
}

TEST(RestoreFromModelTest, RoundTripOnDivisors) {
  std::mt19937 rng(5);
  for (int h : {1, 2, 4, 8, 16, 32, 64, 128, 256}) {
    for (int w : {1, 4, 32, 256}) {
      const GridImage img = testing::RandomTrinary(rng, w, h);
      OriginalDims dims;
      const ModelRaster raster = ResizeForModel(img, &dims);
      EXPECT_EQ(RestoreFromModel(raster, dims), img) << h << "x" << w;
    }
  }
}

TEST(RestoreFromModelTest, OutOfRange) {
  ModelRaster raster;
  raster.at(3, 3) = 1.0009f;
  EXPECT_NO_THROW(RestoreFromModel(raster, {256, 256}));
  raster.at(3, 3) = -1.01f;
  EXPECT_THROW(RestoreFromModel(raster, {256, 256}), ContractViolation);
  raster.at(3, 3) = std::nanf("");
  EXPECT_THROW(RestoreFromModel(raster, {256, 256}), ContractViolation);
}

TEST(RestoreFromModelTest, ArbitraryDims) {
  const GridImage out = RestoreFromModel(ModelRaster{}, {300, 500});
  EXPECT_EQ(out.height, 300);
  EXPECT_EQ(out.width, 500);
}

}  // namespace
}  // namespace mapfilter
}  // namespace gridforge
