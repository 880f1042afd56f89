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

#include <cstdlib>
#include <random>
#include <set>

#include "gridforge/cleaner/cleaner.h"
#include "gridforge/cleaner/morphological.h"
#include "gridforge/common/error.h"
#include "gtest/gtest.h"

namespace gridforge {
namespace cleaner {
namespace {

using image::GridImage;
using image::kFree;
using image::kOccupied;
using image::kUnexplored;

GridImage FreeField(int w, int h) { return GridImage(w, h, kFree); }

TEST(MorphologicalCleanTest, SmallBlobRemoved) {
  GridImage img = FreeField(20, 20);
  img.at(5, 5) = kOccupied;
  img.at(5, 6) = kOccupied;
  const GridImage out = MorphologicalClean(img);
  EXPECT_EQ(out, FreeField(20, 20));
}

TEST(MorphologicalCleanTest, WallKeptAndGapBridged) {
  GridImage img = FreeField(120, 20);
  for (int c = 10; c < 110; ++c) img.at(10, c) = kOccupied;
  img.at(10, 60) = kFree;
  const GridImage out = MorphologicalClean(img);
  for (int c = 10; c < 110; ++c) EXPECT_EQ(out.at(10, c), kOccupied) << c;
  EXPECT_EQ(image::CountCode(out, kOccupied), 100u);
}

TEST(MorphologicalCleanTest, EmptyImage) {
  EXPECT_EQ(MorphologicalClean(GridImage()), GridImage());
}

TEST(MorphologicalCleanTest, AllUnexploredStaysUnexplored) {
  const GridImage out = CleanTrinary(GridImage(300, 200), MorphologicalCleaner{});
  EXPECT_EQ(out, GridImage(300, 200));
}

TEST(MorphologicalCleanTest, CleanMapsAreStable) {
  // Rooms with 2-px walls: nothing below min_area and no gaps to close.
  GridImage img(256, 256, kUnexplored);
  for (int r = 20; r < 220; ++r)
    for (int c = 30; c < 230; ++c) img.at(r, c) = kFree;
  for (int r = 18; r < 222; ++r)
    for (int c : {28, 29, 230, 231, 128, 129}) img.at(r, c) = kOccupied;
  for (int c = 28; c < 232; ++c)
    for (int r : {18, 19, 220, 221}) img.at(r, c) = kOccupied;
  EXPECT_EQ(MorphologicalClean(img), img);
  EXPECT_EQ(CleanTrinary(img, MorphologicalCleaner{}), img);
}

TEST(MorphologicalCleanTest, RemovesSpecks) {
  GridImage room(256, 256, kUnexplored);
  for (int r = 20; r < 236; ++r)
    for (int c = 20; c < 236; ++c) room.at(r, c) = kFree;
  std::set<int> walls;
  for (int i = 18; i < 238; ++i) {
    for (int t : {18, 19, 236, 237}) {
      room.at(t, i) = room.at(i, t) = kOccupied;
      walls.insert(t * 256 + i);
      walls.insert(i * 256 + t);
    }
  }
  std::mt19937 rng(50);
  std::uniform_int_distribution<int> pos(24, 231);
  GridImage noisy = room;
  std::set<int> specks;
  while (specks.size() < 50) {
    const int r = pos(rng), c = pos(rng);
    bool clear = true;
    for (int s : specks) {
      if (std::abs(s / 256 - r) < 4 && std::abs(s % 256 - c) < 4) clear = false;
    }
    if (!clear) continue;
    specks.insert(r * 256 + c);
    noisy.at(r, c) = kOccupied;
    if (specks.size() % 3 == 0) noisy.at(r, c + 1) = kOccupied;  // 2-px specks
  }
  const GridImage out = CleanTrinary(noisy, MorphologicalCleaner{});
  int removed = 0;
  for (int s : specks) removed += out.pixels[s] != kOccupied;
  EXPECT_GE(removed, 45);
  for (int w : walls) EXPECT_EQ(out.pixels[w], kOccupied);
}

TEST(CleanImageTest, RejectsOversizedImage) {
  EXPECT_THROW(CleanImage(GridImage(kMaxImageSide + 1, 1), MorphologicalCleaner{}),
               CapacityError);
}

TEST(CleanImageTest, PreservesDimensions) {
  GridImage img = FreeField(500, 300);
  const GridImage out = CleanImage(img, MorphologicalCleaner{});
  EXPECT_EQ(out.width, 500);
  EXPECT_EQ(out.height, 300);
}

TEST(CleanTrinaryTest, RejectsNonTrinary) {
  GridImage img = FreeField(10, 10);
  img.at(0, 0) = 17;
  EXPECT_THROW(CleanTrinary(img, MorphologicalCleaner{}), ContractViolation);
}

}  // namespace
}  // namespace cleaner
}  // namespace gridforge
