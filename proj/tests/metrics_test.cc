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
#include <fstream>
#include <map>
#include <random>

#include "gridforge/common/error.h"
#include "gridforge/eval/metrics.h"
#include "gridforge/eval/report.h"
#include "gtest/gtest.h"

namespace gridforge {
namespace eval {
namespace {

using image::GridImage;
using image::kFree;
using image::kOccupied;

const std::string kFixtures = GRIDFORGE_FIXTURE_DIR;

GridImage Square(int w, int h, int row, int col, int side, std::uint8_t code) {
  GridImage img(w, h, kFree);
  for (int r = row; r < row + side; ++r)
    for (int c = col; c < col + side; ++c) img.at(r, c) = code;
  return img;
}

TEST(IouTest, Identity) {
  const GridImage img = Square(20, 20, 2, 2, 5, kOccupied);
  EXPECT_EQ(Iou(img, img, kOccupied), 1.);
}

TEST(IouTest, Disjoint) {
  EXPECT_EQ(Iou(Square(20, 20, 0, 0, 4, kOccupied),
                Square(20, 20, 10, 10, 4, kOccupied), kOccupied),
            0.);
}

TEST(IouTest, HalfOverlap) {
  const GridImage a = Square(20, 20, 4, 4, 6, kOccupied);
  const GridImage b = Square(20, 20, 4, 7, 6, kOccupied);
  EXPECT_DOUBLE_EQ(Iou(a, b, kOccupied), 1. / 3.);
  EXPECT_DOUBLE_EQ(Iou(b, a, kOccupied), 1. / 3.);
}

TEST(IouTest, EmptyUnionIsOne) {
  EXPECT_EQ(Iou(GridImage(5, 5), GridImage(5, 5), kOccupied), 1.);
}

TEST(IouTest, SizeMismatch) {
  EXPECT_THROW(Iou(GridImage(5, 5), GridImage(5, 6), kOccupied),
               DimensionMismatchError);
}

TEST(SsimTest, SelfSimilarity) {
  std::mt19937 rng(1);
  GridImage img(30, 30);
  for (auto& p : img.pixels) p = rng() % 256;
  EXPECT_NEAR(Ssim(img, img), 1., 1e-12);
}

TEST(SsimTest, ConstantImages) {
  const double c1 = std::pow(0.01 * 255, 2);
  const double expected = (2. * 100 * 200 + c1) / (100. * 100 + 200. * 200 + c1);
  EXPECT_NEAR(Ssim(GridImage(20, 20, 100), GridImage(20, 20, 200)), expected,
              1e-12);
  EXPECT_LT(expected, 1.);
}

TEST(SsimTest, TooSmall) {
  EXPECT_THROW(Ssim(GridImage(10, 30), GridImage(10, 30)),
               DimensionMismatchError);
}

TEST(SsimTest, MatchesReferenceImplementation) {
  std::ifstream in(kFixtures + "/ssim/expected.txt");
  ASSERT_TRUE(in);
  std::map<std::string, double> expected;
  std::string name;
  double value;
  while (in >> name >> value) expected[name] = value;
  ASSERT_EQ(expected.size(), 2u);
  for (const auto& [fixture, reference] : expected) {
    const GridImage a = image::ReadImage(kFixtures + "/ssim/" + fixture + "_a.png");
    const GridImage b = image::ReadImage(kFixtures + "/ssim/" + fixture + "_b.png");
    EXPECT_NEAR(Ssim(a, b), reference, 1e-6) << fixture;
  }
}

TEST(EvaluatePairTest, IdenticalImages) {
  const GridImage img = Square(30, 30, 3, 3, 10, kOccupied);
  const EvalReport report = EvaluatePair(img, img, "x");
  EXPECT_EQ(report.sample_id, "x");
  EXPECT_EQ(report.iou_occupied, 1.);
  EXPECT_EQ(report.iou_free, 1.);
  EXPECT_NEAR(report.ssim, 1., 1e-12);
  EXPECT_EQ(report.pixel_accuracy, 1.);
}

TEST(ReportTest, MeanRow) {
  std::vector<EvalReport> reports{{"a", 0.5, 1.0, 0.2, 0.9},
                                  {"b", 0.25, 0.5, 0.4, 0.7}};
  const EvalReport mean = MeanReport(reports);
  EXPECT_DOUBLE_EQ(mean.iou_occupied, 0.375);
  EXPECT_DOUBLE_EQ(mean.iou_free, 0.75);
  EXPECT_DOUBLE_EQ(mean.ssim, 0.3);
  EXPECT_DOUBLE_EQ(mean.pixel_accuracy, 0.8);
  EXPECT_EQ(FormatReports(reports, ReportFormat::kCsv),
            "id,iou_occupied,iou_free,ssim,pixel_accuracy\n"
            "a,0.500000,1.000000,0.200000,0.900000\n"
            "b,0.250000,0.500000,0.400000,0.700000\n"
            "mean,0.375000,0.750000,0.300000,0.800000\n");
  EXPECT_THROW(MeanReport({}), ContractViolation);
}

}  // namespace
}  // namespace eval
}  // namespace gridforge
