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

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gmock/gmock.h"
#include "gridforge/eval/report.h"
#include "gridforge/image/grid_image.h"
#include "gtest/gtest.h"

namespace gridforge {
namespace {

namespace fs = std::filesystem;
using ::testing::HasSubstr;

const std::string kBinary = GRIDFORGE_BINARY;
const std::string kSynth = GRIDFORGE_SYNTH_BINARY;

struct Result {
  int code = -1;
  std::string output;  // stdout and stderr
};

Result RunCommand(const std::string& args) {
  Result result;
  FILE* pipe = popen((args + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    root_ = new fs::path(fs::temp_directory_path() / "gridforge_cli_test");
    fs::remove_all(*root_);
    fs::create_directories(*root_);
    const Result synth = RunCommand(kSynth + " --scene corridor -n 20 -o " +
                             (*root_ / "corridor").string());
    ASSERT_EQ(synth.code, 0) << synth.output;
  }
  static void TearDownTestSuite() {
    fs::remove_all(*root_);
    delete root_;
  }
  static fs::path Path(const std::string& name) { return *root_ / name; }
  static fs::path* root_;
};

fs::path* CliTest::root_ = nullptr;

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(RunCommand(kBinary).code, 1);
  EXPECT_EQ(RunCommand(kBinary + " --help").code, 0);
  EXPECT_EQ(RunCommand(kBinary + " slam").code, 1);
  EXPECT_EQ(RunCommand(kBinary + " frobnicate").code, 1);
  EXPECT_EQ(RunCommand(kBinary + " clean in.png -o out.png --morph --model m.gsm").code,
            1);
}

TEST_F(CliTest, SlamWithoutCleaning) {
  const std::string prefix = Path("plain").string();
  const Result r = RunCommand(kBinary + " slam " + Path("corridor").string() + " -o " +
                       prefix + " --no-clean");
  ASSERT_EQ(r.code, 0) << r.output;
  EXPECT_THAT(r.output, HasSubstr("frames 20"));
  EXPECT_TRUE(fs::exists(prefix + "_raw.pgm"));
  EXPECT_TRUE(fs::exists(prefix + "_raw.yaml"));
  EXPECT_FALSE(fs::exists(prefix + "_clean.png"));
  const std::string trail = Slurp(prefix + "_trail.txt");
  EXPECT_EQ(std::count(trail.begin(), trail.end(), '\n'), 20);
}

TEST_F(CliTest, SlamWithMorphKeepsTrail) {
  const std::string plain = Path("a").string(), morph = Path("b").string();
  ASSERT_EQ(RunCommand(kBinary + " slam " + Path("corridor").string() + " -o " + plain +
                " --no-clean")
                .code,
            0);
  ASSERT_EQ(RunCommand(kBinary + " slam " + Path("corridor").string() + " -o " + morph +
                " --morph")
                .code,
            0);
  EXPECT_TRUE(fs::exists(morph + "_clean.png"));
  EXPECT_EQ(Slurp(plain + "_trail.txt"), Slurp(morph + "_trail.txt"));
  EXPECT_EQ(Slurp(plain + "_raw.pgm"), Slurp(morph + "_raw.pgm"));
  const image::GridImage raw = image::ReadImage(morph + "_raw.pgm");
  const image::GridImage clean = image::ReadImage(morph + "_clean.png");
  EXPECT_EQ(raw.width, clean.width);
  EXPECT_EQ(raw.height, clean.height);
}

TEST_F(CliTest, SlamMissingModel) {
  const Result r = RunCommand(kBinary + " slam " + Path("corridor").string() + " -o " +
                       Path("m").string() + " --model /nonexistent/tiny.gsm");
  EXPECT_EQ(r.code, 1);
  EXPECT_THAT(r.output, HasSubstr("/nonexistent/tiny.gsm"));
}

TEST_F(CliTest, SlamMissingInput) {
  const Result r = RunCommand(kBinary + " slam /nonexistent/frames -o " +
                       Path("x").string());
  EXPECT_EQ(r.code, 1);
  EXPECT_THAT(r.output, HasSubstr("/nonexistent/frames"));
}

TEST_F(CliTest, CleanPreservesDimensions) {
  image::GridImage img(500, 300, image::kUnexplored);
  for (int r = 50; r < 250; ++r)
    for (int c = 50; c < 450; ++c) img.at(r, c) = image::kFree;
  for (int c = 50; c < 450; ++c) img.at(50, c) = img.at(51, c) = image::kOccupied;
  image::WritePng(img, Path("wide.png"));
  const Result r = RunCommand(kBinary + " clean " + Path("wide.png").string() + " -o " +
                       Path("wide_clean.png").string() + " --morph");
  ASSERT_EQ(r.code, 0) << r.output;
  const image::GridImage out = image::ReadImage(Path("wide_clean.png"));
  EXPECT_EQ(out.width, 500);
  EXPECT_EQ(out.height, 300);
  EXPECT_TRUE(image::IsTrinary(out));
}

TEST_F(CliTest, DatasetAndEval) {
  const std::string dir = Path("data").string();
  const Result r = RunCommand(kBinary + " dataset -n 3 -s 5 -o " + dir);
  ASSERT_EQ(r.code, 0) << r.output;
  int pngs = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    pngs += e.path().extension() == ".png";
  }
  EXPECT_EQ(pngs, 6);
  const std::string manifest = Slurp(dir + "/manifest.txt");
  EXPECT_EQ(std::count(manifest.begin(), manifest.end(), '\n'), 3);

  const Result same = RunCommand(kBinary + " eval " + dir + "/000000_clean.png " + dir +
                          "/000000_clean.png --csv");
  ASSERT_EQ(same.code, 0) << same.output;
  EXPECT_THAT(same.output, HasSubstr(",1.000000,1.000000,1.000000,1.000000\n"));

  const Result batch =
      RunCommand(kBinary + " eval --manifest " + dir +
                 "/manifest.txt --pred-suffix _err.png --csv");
  ASSERT_EQ(batch.code, 0) << batch.output;
  std::istringstream lines(batch.output);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "id,iou_occupied,iou_free,ssim,pixel_accuracy");
  std::vector<std::array<double, 4>> rows;
  std::array<double, 4> mean{};
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::string id, cell;
    std::getline(fields, id, ',');
    std::array<double, 4> values;
    for (double& v : values) {
      std::getline(fields, cell, ',');
      v = std::stod(cell);
    }
    if (id == "mean") {
      mean = values;
    } else {
      rows.push_back(values);
    }
  }
  ASSERT_EQ(rows.size(), 3u);
  for (int k = 0; k < 4; ++k) {
    const double expected = (rows[0][k] + rows[1][k] + rows[2][k]) / 3.;
    EXPECT_NEAR(mean[k], expected, 1e-6);
  }
  EXPECT_LT(rows[0][0], 1.);
}

TEST_F(CliTest, EvalMismatchedSizes) {
  image::WritePng(image::GridImage(20, 20), Path("p.png"));
  image::WritePng(image::GridImage(20, 21), Path("q.png"));
  const Result r = RunCommand(kBinary + " eval " + Path("p.png").string() + " " +
                       Path("q.png").string());
  EXPECT_EQ(r.code, 1);
}

TEST_F(CliTest, Info) {
  const Result r = RunCommand(kBinary + " info " + Path("corridor").string());
  ASSERT_EQ(r.code, 0) << r.output;
  EXPECT_THAT(r.output, HasSubstr("frames 20"));
}

}  // namespace
}  // namespace gridforge
