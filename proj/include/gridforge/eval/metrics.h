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

#ifndef GRIDFORGE_EVAL_METRICS_H_
#define GRIDFORGE_EVAL_METRICS_H_

#include <cstdint>
#include <string>

#include "gridforge/image/grid_image.h"

namespace gridforge {
namespace eval {

// Intersection over union of the pixels equal to `class_code`. An empty
// union (class absent from both images) scores 1.
double Iou(const image::GridImage& pred, const image::GridImage& gt,
           std::uint8_t class_code);

struct SsimOptions {
  int window = 11;
  double sigma = 1.5;
  double k1 = 0.01;
  double k2 = 0.03;
  double data_range = 255.;
};

// Mean single-scale SSIM over every fully contained window position, using
// a normalized Gaussian window and population (biased) local statistics.
// When both local variances are zero the structure term is taken as 1,
// which the stabilizing constants already guarantee.
double Ssim(const image::GridImage& a, const image::GridImage& b,
            const SsimOptions& options = {});

// Fraction of pixels with identical codes.
double PixelAccuracy(const image::GridImage& pred, const image::GridImage& gt);

struct EvalReport {
  std::string sample_id;
  double iou_occupied = 0.;
  double iou_free = 0.;
  double ssim = 0.;
  double pixel_accuracy = 0.;

  double MeanIou() const { return 0.5 * (iou_occupied + iou_free); }
};

EvalReport EvaluatePair(const image::GridImage& pred,
                        const image::GridImage& gt,
                        const std::string& sample_id = "");

}  // namespace eval
}  // namespace gridforge

#endif  // GRIDFORGE_EVAL_METRICS_H_
