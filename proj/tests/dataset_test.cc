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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gridforge/common/error.h"
#include "gridforge/errorsim/dataset.h"
#include "gtest/gtest.h"

namespace gridforge {
namespace errorsim {
namespace {

namespace fs = std::filesystem;

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

class DatasetTest : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() /
            ("gridforge_dataset_" +
             std::string(::testing::UnitTest::GetInstance()
                             ->current_test_info()
                             ->name()));
    fs::remove_all(root_);
  }
  void TearDown() override { fs::remove_all(root_); }
  fs::path root_;
};

TEST_F(DatasetTest, CountsAndManifest) {
  DatasetOptions options;
  options.count = 10;
  options.master_seed = 3;
  const auto entries = GenerateDataset(options, root_ / "a");
  ASSERT_EQ(entries.size(), 10u);
  int pngs = 0;
  for (const auto& entry : fs::directory_iterator(root_ / "a")) {
    pngs += entry.path().extension() == ".png";
  }
  EXPECT_EQ(pngs, 20);
  const auto manifest = ReadManifest(root_ / "a" / "manifest.txt");
  ASSERT_EQ(manifest.size(), 10u);
  for (std::size_t i = 0; i < manifest.size(); ++i) {
    EXPECT_EQ(manifest[i].id, entries[i].id);
    EXPECT_EQ(manifest[i].seed, entries[i].seed);
    EXPECT_TRUE(fs::exists(root_ / "a" / (manifest[i].id + "_err.png")));
    EXPECT_TRUE(fs::exists(root_ / "a" / (manifest[i].id + "_clean.png")));
  }
}

TEST_F(DatasetTest, ByteIdentical) {
  DatasetOptions options;
  options.count = 4;
  options.master_seed = 8;
  GenerateDataset(options, root_ / "a");
  GenerateDataset(options, root_ / "b");
  for (const auto& entry : fs::directory_iterator(root_ / "a")) {
    EXPECT_EQ(Slurp(entry.path()),
              Slurp(root_ / "b" / entry.path().filename()))
        << entry.path().filename();
  }
}

TEST_F(DatasetTest, AugmentSixfold) {
  DatasetOptions options;
  options.count = 2;
  options.augment = true;
  const auto entries = GenerateDataset(options, root_ / "a");
  ASSERT_EQ(entries.size(), 12u);
  EXPECT_EQ(entries[0].variant, "original");
  EXPECT_EQ(entries[5].variant, "crop");
  EXPECT_EQ(entries[6].seed, entries[11].seed);
}

TEST(SampleConfigTest, SweepSpansCompletionRange) {
  DatasetOptions options;
  options.count = 40;
  std::vector<double> completions;
  for (int i = 0; i < options.count; ++i) {
    const ErrorConfig config = SampleConfig(options, i);
    completions.push_back(config.completion_fraction);
    EXPECT_GE(config.noise_flip_prob, options.noise_flip_prob.min);
    EXPECT_LE(config.noise_flip_prob, options.noise_flip_prob.max);
  }
  // One sample per stratum of the completion range.
  for (int i = 0; i < options.count; ++i) {
    const double lo = options.completion.Lerp(static_cast<double>(i) / 40);
    const double hi = options.completion.Lerp(static_cast<double>(i + 1) / 40);
    EXPECT_GE(completions[i], lo);
    EXPECT_LE(completions[i], hi);
  }
  EXPECT_NE(SampleSeed(1, 0), SampleSeed(1, 1));
  EXPECT_NE(SampleSeed(1, 0), SampleSeed(2, 0));
}

TEST(ManifestTest, RoundTrip) {
  ManifestEntry entry;
  entry.id = "000042";
  entry.seed = 1234567890123ULL;
  entry.config.noise_flip_prob = 0.015;
  entry.config.completion_fraction = 0.75;
  entry.achieved_completion = 0.7421;
  entry.variant = "rot90";
  const ManifestEntry parsed = ParseManifestEntry(FormatManifestEntry(entry));
  EXPECT_EQ(parsed.id, entry.id);
  EXPECT_EQ(parsed.seed, entry.seed);
  EXPECT_DOUBLE_EQ(parsed.config.noise_flip_prob, 0.015);
  EXPECT_DOUBLE_EQ(parsed.config.completion_fraction, 0.75);
  EXPECT_EQ(parsed.variant, "rot90");
  EXPECT_THROW(ParseManifestEntry("000001 seed=abc"), ParseError);
}

}  // namespace
}  // namespace errorsim
}  // namespace gridforge
