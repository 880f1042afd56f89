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

#include "gridforge/eval/report.h"

#include <iomanip>
#include <sstream>

#include "gridforge/common/error.h"

namespace gridforge {
namespace eval {

EvalReport MeanReport(const std::vector<EvalReport>& reports) {
  if (reports.empty()) throw ContractViolation("no reports to average");
  EvalReport mean;
  mean.sample_id = "mean";
  for (const EvalReport& r : reports) {
    mean.iou_occupied += r.iou_occupied;
    mean.iou_free += r.iou_free;
    mean.ssim += r.ssim;
    mean.pixel_accuracy += r.pixel_accuracy;
  }
  const double n = static_cast<double>(reports.size());
  mean.iou_occupied /= n;
  mean.iou_free /= n;
  mean.ssim /= n;
  mean.pixel_accuracy /= n;
  return mean;
}

std::string FormatReports(const std::vector<EvalReport>& reports,
                          ReportFormat format) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6);
  auto row = [&](const EvalReport& r) {
    if (format == ReportFormat::kCsv) {
      out << r.sample_id << ',' << r.iou_occupied << ',' << r.iou_free << ','
          << r.ssim << ',' << r.pixel_accuracy << '\n';
    } else {
      out << r.sample_id << "  iou_occupied=" << r.iou_occupied
          << "  iou_free=" << r.iou_free << "  ssim=" << r.ssim
          << "  pixel_accuracy=" << r.pixel_accuracy << '\n';
    }
  };
  if (format == ReportFormat::kCsv) {
    out << "id,iou_occupied,iou_free,ssim,pixel_accuracy\n";
  }
  for (const EvalReport& r : reports) row(r);
  if (!reports.empty()) row(MeanReport(reports));
  return out.str();
}

}  // namespace eval
}  // namespace gridforge
