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

#ifndef GRIDFORGE_EVAL_REPORT_H_
#define GRIDFORGE_EVAL_REPORT_H_

#include <string>
#include <vector>

#include "gridforge/eval/metrics.h"

namespace gridforge {
namespace eval {

enum class ReportFormat { kText, kCsv };

// Arithmetic mean of every metric, labelled "mean".
EvalReport MeanReport(const std::vector<EvalReport>& reports);

// One line per report followed by the mean row. CSV has a header line
// "id,iou_occupied,iou_free,ssim,pixel_accuracy".
std::string FormatReports(const std::vector<EvalReport>& reports,
                          ReportFormat format);

}  // namespace eval
}  // namespace gridforge

#endif  // GRIDFORGE_EVAL_REPORT_H_
