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

// Command-line driver: slam, clean, dataset, eval, info.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "gridforge/cleaner/cleaner.h"
#include "gridforge/cleaner/generator_model.h"
#include "gridforge/common/error.h"
#include "gridforge/common/parallel.h"
#include "gridforge/errorsim/dataset.h"
#include "gridforge/errorsim/floor_plan.h"
#include "gridforge/eval/metrics.h"
#include "gridforge/eval/report.h"
#include "gridforge/image/grid_image.h"
#include "gridforge/mapping/grid_io.h"
#include "gridforge/pointcloud/point_cloud.h"
#include "gridforge/session/session_config.h"
#include "gridforge/session/slam_session.h"

namespace gridforge {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr int kExitError = 1;
constexpr int kExitCollapse = 2;
constexpr double kDegrees = 3.14159265358979323846 / 180.;

double Milliseconds(Clock::duration d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

struct CleanerFlags {
  std::string model;
  bool morph = false;
  bool no_clean = false;
};

void AddCleanerFlags(CLI::App* app, CleanerFlags* flags, bool allow_none) {
  auto* model = app->add_option("--model", flags->model,
                                "Neural cleaner weights (.gsm)");
  auto* morph =
      app->add_flag("--morph", flags->morph, "Morphological baseline cleaner");
  model->excludes(morph);
  if (allow_none) {
    auto* none =
        app->add_flag("--no-clean", flags->no_clean, "Skip map cleaning");
    none->excludes(model)->excludes(morph);
  }
}

cleaner::CleanerKind CleanerFromFlags(const CleanerFlags& flags) {
  if (!flags.model.empty()) return cleaner::LoadNeuralCleaner(flags.model);
  return cleaner::MorphologicalCleaner{};
}

// --- slam -------------------------------------------------------------------

struct SlamArgs {
  std::string input;
  std::string config;
  std::string prefix;
  CleanerFlags cleaner;
  bool realtime = false;
};

int RunSlam(const SlamArgs& args) {
  session::SessionConfig config;
  if (!args.config.empty()) config = session::LoadSessionConfig(args.config);
  if (!args.cleaner.model.empty()) {
    config.cleaner = session::CleanerSelection::kNeural;
    config.model_path = args.cleaner.model;
  } else if (args.cleaner.morph) {
    config.cleaner = session::CleanerSelection::kMorphological;
  } else if (args.cleaner.no_clean) {
    config.cleaner = session::CleanerSelection::kNone;
  }
  session::ValidateSessionConfig(config);
  std::optional<cleaner::CleanerKind> cleaner = session::MakeCleaner(config);

  const std::vector<pointcloud::PointCloud3D> frames =
      pointcloud::LoadSequence(args.input);
  if (frames.empty()) throw IoError("no point-cloud frames in " + args.input);

  session::SlamSession slam(config, std::move(cleaner));
  const Clock::time_point start = Clock::now();
  bool collapsed = false;
  for (const pointcloud::PointCloud3D& frame : frames) {
    if (args.realtime) {
      const auto due = start + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(
                                       frame.timestamp - frames.front().timestamp));
      std::this_thread::sleep_until(due);
    }
    const Clock::time_point begin = Clock::now();
    const session::FrameReport report = slam.ProcessFrame(frame);
    if (args.realtime) {
      std::fprintf(stderr, "frame %d t=%.3f latency_ms=%.2f%s\n", report.index,
                   report.timestamp, Milliseconds(Clock::now() - begin),
                   report.registration_failed ? " fallback" : "");
    }
    if (!report.warning.empty()) std::cerr << "warning: " << report.warning << "\n";
    if (slam.collapsed()) {
      collapsed = true;
      std::cerr << "error: registration collapsed after "
                << slam.consecutive_failures() << " consecutive failures at frame "
                << report.index << "\n";
      break;
    }
  }
  const double elapsed = Milliseconds(Clock::now() - start);

  mapping::WriteGridMap(slam.grid(), args.prefix + "_raw");
  slam.trail().Write(args.prefix + "_trail.txt");
  if (const std::optional<session::CleanedMap> clean = slam.Finalize()) {
    image::WriteImage(clean->image, args.prefix + "_clean.png");
  }
  std::cout << "frames " << slam.frame_count() << " warnings "
            << slam.warnings().size() << " elapsed_ms " << elapsed << "\n";
  return collapsed ? kExitCollapse : 0;
}

// --- clean ------------------------------------------------------------------

struct CleanArgs {
  std::string input;
  std::string output;
  std::string manifest;
  std::string out_dir;
  std::string suffix = "_pred.png";
  CleanerFlags cleaner;
};

int RunClean(const CleanArgs& args) {
  const cleaner::CleanerKind cleaner = CleanerFromFlags(args.cleaner);
  if (args.manifest.empty()) {
    if (args.input.empty() || args.output.empty()) {
      throw ContractViolation("clean needs INPUT and --out, or --manifest");
    }
    image::WriteImage(cleaner::CleanImage(image::ReadImage(args.input), cleaner),
                      args.output);
    return 0;
  }
  if (args.out_dir.empty()) throw ContractViolation("--manifest needs --out-dir");
  const fs::path root = fs::path(args.manifest).parent_path();
  const std::vector<errorsim::ManifestEntry> entries =
      errorsim::ReadManifest(args.manifest);
  fs::create_directories(args.out_dir);
  common::ParallelFor(entries.size(), [&](std::size_t i) {
    const std::string& id = entries[i].id;
    image::WriteImage(
        cleaner::CleanImage(image::ReadImage(root / (id + "_err.png")), cleaner),
        fs::path(args.out_dir) / (id + args.suffix));
  });
  std::cout << "cleaned " << entries.size() << " images\n";
  return 0;
}

// --- dataset ----------------------------------------------------------------

struct DatasetArgs {
  int count = 10;
  std::uint64_t seed = 1;
  std::string out_dir;
  std::pair<double, double> completion{0.3, 1.0};
  std::pair<double, double> noise{0.0, 0.04};
  std::pair<double, double> linear{0.0, 0.02};
  std::pair<double, double> angular_deg{0.0, 1.0};
  std::pair<double, double> accidental{0.0, 0.2};
  bool augment = false;
  std::string plan;
  double plan_resolution = 0.05;
};

errorsim::Range ToRange(const std::pair<double, double>& p, double scale = 1.) {
  if (p.first > p.second) {
    throw ContractViolation("range minimum exceeds maximum");
  }
  return {p.first * scale, p.second * scale};
}

int RunDataset(const DatasetArgs& args) {
  errorsim::DatasetOptions options;
  options.count = args.count;
  options.master_seed = args.seed;
  options.completion = ToRange(args.completion);
  options.noise_flip_prob = ToRange(args.noise);
  options.linear_drift = ToRange(args.linear);
  options.angular_drift = ToRange(args.angular_deg, kDegrees);
  options.accidental_ray_prob = ToRange(args.accidental);
  options.augment = args.augment;
  if (!args.plan.empty()) {
    options.plan = errorsim::FloorPlanFromImage(image::ReadImage(args.plan),
                                                args.plan_resolution);
  }
  const std::vector<errorsim::ManifestEntry> entries =
      errorsim::GenerateDataset(options, args.out_dir);
  std::cout << "wrote " << entries.size() << " pairs to " << args.out_dir << "\n";
  return 0;
}

// --- eval -------------------------------------------------------------------

struct EvalArgs {
  std::string pred;
  std::string gt;
  std::string manifest;
  std::string pred_dir;
  std::string pred_suffix = "_pred.png";
  bool csv = false;
};

int RunEval(const EvalArgs& args) {
  std::vector<eval::EvalReport> reports;
  if (args.manifest.empty()) {
    if (args.pred.empty() || args.gt.empty()) {
      throw ContractViolation("eval needs PRED and GT, or --manifest");
    }
    reports.push_back(eval::EvaluatePair(image::ReadImage(args.pred),
                                         image::ReadImage(args.gt),
                                         fs::path(args.pred).stem().string()));
  } else {
    const fs::path root = fs::path(args.manifest).parent_path();
    const fs::path pred_dir = args.pred_dir.empty() ? root : fs::path(args.pred_dir);
    const std::vector<errorsim::ManifestEntry> entries =
        errorsim::ReadManifest(args.manifest);
    reports.resize(entries.size());
    common::ParallelFor(entries.size(), [&](std::size_t i) {
      const std::string& id = entries[i].id;
      reports[i] = eval::EvaluatePair(
          image::ReadImage(pred_dir / (id + args.pred_suffix)),
          image::ReadImage(root / (id + "_clean.png")), id);
    });
  }
  std::cout << eval::FormatReports(
      reports, args.csv ? eval::ReportFormat::kCsv : eval::ReportFormat::kText);
  return 0;
}

// --- info -------------------------------------------------------------------

int RunInfo(const std::string& path_text) {
  const fs::path path(path_text);
  if (fs::is_directory(path)) {
    const std::vector<pointcloud::PointCloud3D> frames =
        pointcloud::LoadSequence(path);
    std::size_t points = 0;
    for (const auto& f : frames) points += f.size();
    std::cout << "sequence " << path.string() << "\nframes " << frames.size()
              << "\npoints " << points << "\n";
    if (!frames.empty()) {
      std::cout << "time " << frames.front().timestamp << " "
                << frames.back().timestamp << "\n";
    }
    return 0;
  }
  const std::string ext = path.extension().string();
  if (ext == ".gsm") {
    const cleaner::GeneratorModel model = cleaner::LoadGenerator(path);
    std::cout << "model " << path.string() << "\nlayers " << model.layers.size()
              << "\nweights " << model.weights.size() << "\n";
    for (const cleaner::LayerSpec& l : model.layers) {
      std::cout << cleaner::LayerKindName(l.kind) << " " << l.in_channels << " "
                << l.out_channels << " " << l.kernel << " " << l.stride << " "
                << l.pad << "\n";
    }
    return 0;
  }
  if (ext == ".png" || ext == ".pgm") {
    const image::GridImage img = image::ReadImage(path);
    std::cout << "image " << path.string() << "\nsize " << img.width << "x"
              << img.height << "\ntrinary " << (image::IsTrinary(img) ? 1 : 0)
              << "\noccupied " << image::CountCode(img, image::kOccupied)
              << "\nfree " << image::CountCode(img, image::kFree)
              << "\nunexplored " << image::CountCode(img, image::kUnexplored)
              << "\n";
    return 0;
  }
  if (ext == ".yaml") {
    std::cout << mapping::FormatMetadata(mapping::ReadMetadata(path));
    return 0;
  }
  if (ext == ".txt") {
    std::cout << pointcloud::LoadPointCloud(path).size() << " points\n";
    return 0;
  }
  std::cout << session::FormatSessionConfig(session::LoadSessionConfig(path));
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"gridforge: occupancy-grid SLAM with map cleaning"};
  app.require_subcommand(1);

  SlamArgs slam;
  auto* slam_cmd = app.add_subcommand("slam", "Build a map from a frame sequence");
  slam_cmd->add_option("input", slam.input, "Directory of point-cloud frames")
      ->required();
  slam_cmd->add_option("-c,--config", slam.config, "Session config file");
  slam_cmd->add_option("-o,--out", slam.prefix, "Output prefix")->required();
  AddCleanerFlags(slam_cmd, &slam.cleaner, true);
  slam_cmd->add_flag("--realtime", slam.realtime,
                     "Replay at frame timestamps and log per-frame latency");

  CleanArgs clean;
  auto* clean_cmd = app.add_subcommand("clean", "Clean an occupancy image");
  clean_cmd->add_option("input", clean.input, "PGM or PNG map");
  clean_cmd->add_option("-o,--out", clean.output, "Output PNG");
  clean_cmd->add_option("--manifest", clean.manifest,
                        "Clean every <id>_err.png listed in a dataset manifest");
  clean_cmd->add_option("--out-dir", clean.out_dir,
                        "Output directory for --manifest");
  clean_cmd->add_option("--suffix", clean.suffix,
                        "Output file suffix for --manifest")->capture_default_str();
  AddCleanerFlags(clean_cmd, &clean.cleaner, false);

  DatasetArgs dataset;
  auto* dataset_cmd =
      app.add_subcommand("dataset", "Generate erroneous/clean map pairs");
  dataset_cmd->add_option("-n,--count", dataset.count, "Number of samples")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  dataset_cmd->add_option("-s,--seed", dataset.seed, "Master seed")->capture_default_str();
  dataset_cmd->add_option("-o,--out", dataset.out_dir, "Output directory")
      ->required();
  dataset_cmd->add_option("--completion", dataset.completion,
                          "Completion fraction range MIN MAX")->capture_default_str();
  dataset_cmd->add_option("--noise", dataset.noise,
                          "Noise flip probability range MIN MAX")->capture_default_str();
  dataset_cmd->add_option("--linear-drift", dataset.linear,
                          "Linear drift range in m/m, MIN MAX")->capture_default_str();
  dataset_cmd->add_option("--angular-drift", dataset.angular_deg,
                          "Angular drift range in deg/m, MIN MAX")->capture_default_str();
  dataset_cmd->add_option("--accidental", dataset.accidental,
                          "Accidental ray probability range MIN MAX")->capture_default_str();
  dataset_cmd->add_flag("--augment", dataset.augment,
                        "Add rotated and cropped variants");
  dataset_cmd->add_option("--plan", dataset.plan,
                          "Floor-plan image (dark pixels are walls)");
  dataset_cmd->add_option("--plan-resolution", dataset.plan_resolution,
                          "Meters per pixel of --plan")->capture_default_str();

  EvalArgs evaluation;
  auto* eval_cmd = app.add_subcommand("eval", "Score maps against ground truth");
  eval_cmd->add_option("pred", evaluation.pred, "Predicted map");
  eval_cmd->add_option("gt", evaluation.gt, "Ground-truth map");
  eval_cmd->add_option("--manifest", evaluation.manifest,
                       "Evaluate every sample of a dataset manifest");
  eval_cmd->add_option("--pred-dir", evaluation.pred_dir,
                       "Directory of predictions (default: manifest directory)");
  eval_cmd->add_option("--pred-suffix", evaluation.pred_suffix,
                       "Prediction file suffix")->capture_default_str();
  eval_cmd->add_flag("--csv", evaluation.csv, "Comma-separated output");

  std::string info_path;
  auto* info_cmd = app.add_subcommand(
      "info", "Describe a model, image, map metadata, frame or sequence");
  info_cmd->add_option("path", info_path, "File or directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  try {
    if (*slam_cmd) return RunSlam(slam);
    if (*clean_cmd) return RunClean(clean);
    if (*dataset_cmd) return RunDataset(dataset);
    if (*eval_cmd) return RunEval(evaluation);
    if (*info_cmd) return RunInfo(info_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace
}  // namespace gridforge

int main(int argc, char** argv) { return gridforge::Main(argc, argv); }
