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

#include "gridforge/eval/metrics.h"

#include <cmath>
#include <vector>

#include "gridforge/common/error.h"

namespace gridforge {
namespace eval {
namespace {

void CheckSameSize(const image::GridImage& a, const image::GridImage& b) {
  if (a.width != b.width || a.height != b.height) {
    throw DimensionMismatchError(
        "image sizes differ: " + std::to_string(a.width) + "x" +
        std::to_string(a.height) + " vs " + std::to_string(b.width) + "x" +
        std::to_string(b.height));
  }
}

std::vector<double> GaussianKernel(int size, double sigma) {
  std::vector<double> kernel(size);
  const double center = 0.5 * (size - 1);
  double total = 0.;
  for (int i = 0; i < size; ++i) {
    const double d = i - center;
    kernel[i] = std::exp(-d * d / (2. * sigma * sigma));
    total += kernel[i];
  }
  for (double& v : kernel) v /= total;
  return kernel;
}

// Separable "valid" filtering of a row-major field.
std::vector<double> FilterValid(const std::vector<double>& field, int width,
                                int height, const std::vector<double>& kernel) {
  const int n = static_cast<int>(kernel.size());
  const int out_w = width - n + 1;
  const int out_h = height - n + 1;
  std::vector<double> rows(static_cast<std::size_t>(height) * out_w);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < out_w; ++x) {
      double sum = 0.;
      for (int i = 0; i < n; ++i) sum += kernel[i] * field[y * width + x + i];
      rows[y * out_w + x] = sum;
    }
  }
  std::vector<double> out(static_cast<std::size_t>(out_h) * out_w);
  for (int y = 0; y < out_h; ++y) {
    for (int x = 0; x < out_w; ++x) {
      double sum = 0.;
      for (int i = 0; i < n; ++i) sum += kernel[i] * rows[(y + i) * out_w + x];
      out[y * out_w + x] = sum;
    }
  }
  return out;
}

}  // namespace

double Iou(const image::GridImage& pred, const image::GridImage& gt,
           std::uint8_t class_code) {
  CheckSameSize(pred, gt);
  std::size_t intersection = 0;
  std::size_t union_count = 0;
  for (std::size_t i = 0; i < pred.pixels.size(); ++i) {
    const bool p = pred.pixels[i] == class_code;
    const bool g = gt.pixels[i] == class_code;
    intersection += p && g;
    union_count += p || g;
  }
  if (union_count == 0) return 1.;
  return static_cast<double>(intersection) / union_count;
}

double Ssim(const image::GridImage& a, const image::GridImage& b,
            const SsimOptions& options) {
  CheckSameSize(a, b);
  if (a.width < options.window || a.height < options.window) {
    throw DimensionMismatchError("SSIM needs images of at least " +
                                 std::to_string(options.window) + "x" +
                                 std::to_string(options.window) + " pixels");
  }
  const std::size_t n = a.pixels.size();
  std::vector<double> x(n), y(n), xx(n), yy(n), xy(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = a.pixels[i];
    y[i] = b.pixels[i];
    xx[i] = x[i] * x[i];
    yy[i] = y[i] * y[i];
    xy[i] = x[i] * y[i];
  }
  const std::vector<double> kernel =
      GaussianKernel(options.window, options.sigma);
  const auto filter = [&](const std::vector<double>& field) {
    return FilterValid(field, a.width, a.height, kernel);
  };
  const std::vector<double> mu_x = filter(x);
  const std::vector<double> mu_y = filter(y);
  const std::vector<double> e_xx = filter(xx);
  const std::vector<double> e_yy = filter(yy);
  const std::vector<double> e_xy = filter(xy);
  const double c1 = std::pow(options.k1 * options.data_range, 2);
  const double c2 = std::pow(options.k2 * options.data_range, 2);
  double total = 0.;
  for (std::size_t i = 0; i < mu_x.size(); ++i) {
    const double var_x = e_xx[i] - mu_x[i] * mu_x[i];
    const double var_y = e_yy[i] - mu_y[i] * mu_y[i];
    const double cov = e_xy[i] - mu_x[i] * mu_y[i];
    total += ((2. * mu_x[i] * mu_y[i] + c1) * (2. * cov + c2)) /
             ((mu_x[i] * mu_x[i] + mu_y[i] * mu_y[i] + c1) *
              (var_x + var_y + c2));
  }
  return total / mu_x.size();
}

double PixelAccuracy(const image::GridImage& pred, const image::GridImage& gt) {
  CheckSameSize(pred, gt);
  if (pred.pixels.empty()) return 1.;
  std::size_t same = 0;
  for (std::size_t i = 0; i < pred.pixels.size(); ++i) {
    same += pred.pixels[i] == gt.pixels[i];
  }
  return static_cast<double>(same) / pred.pixels.size();
}

EvalReport EvaluatePair(const image::GridImage& pred,
                        const image::GridImage& gt,
                        const std::string& sample_id) {
  EvalReport report;
  report.sample_id = sample_id;
  report.iou_occupied = Iou(pred, gt, image::kOccupied);
  report.iou_free = Iou(pred, gt, image::kFree);
  report.ssim = Ssim(pred, gt);
  report.pixel_accuracy = PixelAccuracy(pred, gt);
  return report;
}

}  // namespace eval
}  // namespace gridforge
