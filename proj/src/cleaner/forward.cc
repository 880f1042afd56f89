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

#include "gridforge/cleaner/forward.h"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "Eigen/Core"
#include "gridforge/common/error.h"

namespace gridforge {
namespace cleaner {
namespace {

using RowMatrix =
    Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstRowMap = Eigen::Map<const RowMatrix>;
using RowMap = Eigen::Map<RowMatrix>;

// Upper bound on im2col buffer entries per tile.
constexpr std::size_t kMaxColumnEntries = std::size_t{1} << 21;

// Stride-1 convolution without im2col, for layers with few input or output
// channels where the GEMM would be thin.
Tensor DirectConv(const Tensor& in, const LayerSpec& layer,
                  const float* params) {
  const int k = layer.kernel;
  const int p = layer.pad;
  const int out_h = in.height + 2 * p - k + 1;
  const int out_w = in.width + 2 * p - k + 1;
  const float* bias = params + static_cast<std::size_t>(layer.out_channels) *
                                   in.channels * k * k;
  Tensor out(layer.out_channels, out_h, out_w);
  for (int co = 0; co < layer.out_channels; ++co) {
    for (int oy = 0; oy < out_h; ++oy) {
      float* dst = &out.at(co, oy, 0);
      std::fill_n(dst, out_w, bias[co]);
      for (int ci = 0; ci < in.channels; ++ci) {
        const float* w =
            params + static_cast<std::size_t>(co * in.channels + ci) * k * k;
        for (int ky = 0; ky < k; ++ky) {
          const int iy = oy - p + ky;
          if (iy < 0 || iy >= in.height) continue;
          const float* src = &in.at(ci, iy, 0);
          for (int kx = 0; kx < k; ++kx) {
            const float wk = w[ky * k + kx];
            const int x_lo = std::max(0, p - kx);
            const int x_hi = std::min(out_w, in.width + p - kx);
            const float* shifted = src - p + kx;
            for (int ox = x_lo; ox < x_hi; ++ox) dst[ox] += wk * shifted[ox];
          }
        }
      }
    }
  }
  return out;
}

Tensor Conv(const Tensor& in, const LayerSpec& layer, const float* params) {
  if (layer.stride == 1 && (layer.in_channels < 8 || layer.out_channels < 8)) {
    return DirectConv(in, layer, params);
  }
  const int k = layer.kernel;
  const int s = layer.stride;
  const int p = layer.pad;
  const int out_h = (in.height + 2 * p - k) / s + 1;
  const int out_w = (in.width + 2 * p - k) / s + 1;
  const int depth = in.channels * k * k;
  Tensor out(layer.out_channels, out_h, out_w);
  const ConstRowMap weights(params, layer.out_channels, depth);
  const float* bias = params + static_cast<std::size_t>(layer.out_channels) *
                                   depth;

  const int tile_rows = std::clamp<int>(
      static_cast<int>(kMaxColumnEntries /
                       (static_cast<std::size_t>(depth) * out_w)),
      1, out_h);
  thread_local std::vector<float> columns;
  thread_local RowMatrix tile_out;
  for (int row0 = 0; row0 < out_h; row0 += tile_rows) {
    const int rows = std::min(tile_rows, out_h - row0);
    const int span = rows * out_w;
    columns.resize(static_cast<std::size_t>(depth) * span);
    for (int ci = 0; ci < in.channels; ++ci) {
      for (int ky = 0; ky < k; ++ky) {
        for (int kx = 0; kx < k; ++kx) {
          float* dst = columns.data() +
                       static_cast<std::size_t>((ci * k + ky) * k + kx) * span;
          // Output columns whose input x falls inside the image.
          const int x_lo = std::max(0, (p - kx + s - 1) / s);
          const int x_hi = std::min(out_w, (in.width + p - kx + s - 1) / s);
          for (int r = 0; r < rows; ++r) {
            const int iy = (row0 + r) * s - p + ky;
            float* row_dst = dst + static_cast<std::size_t>(r) * out_w;
            if (iy < 0 || iy >= in.height || x_lo >= x_hi) {
              std::fill_n(row_dst, out_w, 0.f);
              continue;
            }
            std::fill_n(row_dst, x_lo, 0.f);
            std::fill(row_dst + x_hi, row_dst + out_w, 0.f);
            const float* src = &in.at(ci, iy, 0);
            if (s == 1) {
              std::memcpy(row_dst + x_lo, src + x_lo - p + kx,
                          sizeof(float) * (x_hi - x_lo));
            } else {
              for (int ox = x_lo; ox < x_hi; ++ox) {
                row_dst[ox] = src[ox * s - p + kx];
              }
            }
          }
        }
      }
    }
    const ConstRowMap cols(columns.data(), depth, span);
    tile_out.noalias() = weights * cols;
    for (int co = 0; co < layer.out_channels; ++co) {
      float* dst = &out.at(co, row0, 0);
      const float b = bias[co];
      for (int i = 0; i < span; ++i) dst[i] = tile_out(co, i) + b;
    }
  }
  return out;
}

Tensor TransposedConv(const Tensor& in, const LayerSpec& layer,
                      const float* params) {
  const int k = layer.kernel;
  const int s = layer.stride;
  const int p = layer.pad;
  const int out_h = (in.height - 1) * s - 2 * p + k;
  const int out_w = (in.width - 1) * s - 2 * p + k;
  const int spread = layer.out_channels * k * k;
  const ConstRowMap weights(params, in.channels, spread);
  const float* bias = params + static_cast<std::size_t>(in.channels) * spread;
  Tensor out(layer.out_channels, out_h, out_w);
  for (int co = 0; co < layer.out_channels; ++co) {
    std::fill_n(&out.at(co, 0, 0), static_cast<std::size_t>(out_h) * out_w,
                bias[co]);
  }

  const int tile_rows = std::clamp<int>(
      static_cast<int>(kMaxColumnEntries /
                       (static_cast<std::size_t>(spread) * in.width)),
      1, in.height);
  thread_local RowMatrix columns;
  for (int row0 = 0; row0 < in.height; row0 += tile_rows) {
    const int rows = std::min(tile_rows, in.height - row0);
    const int span = rows * in.width;
    const Eigen::Map<const RowMatrix, 0, Eigen::OuterStride<>> input(
        &in.at(0, row0, 0), in.channels, span,
        Eigen::OuterStride<>(static_cast<Eigen::Index>(in.height) * in.width));
    columns.noalias() = weights.transpose() * input;
    for (int co = 0; co < layer.out_channels; ++co) {
      for (int ky = 0; ky < k; ++ky) {
        for (int kx = 0; kx < k; ++kx) {
          const float* src = columns.row((co * k + ky) * k + kx).data();
          // Input columns whose output x falls inside the image.
          const int ix_lo = std::max(0, (p - kx + s - 1) / s);
          const int ix_hi = std::min(in.width, (out_w - 1 + p - kx) / s + 1);
          for (int r = 0; r < rows; ++r) {
            const int oy = (row0 + r) * s - p + ky;
            if (oy < 0 || oy >= out_h) continue;
            float* dst = &out.at(co, oy, 0);
            const float* row_src = src + static_cast<std::size_t>(r) * in.width;
            for (int ix = ix_lo; ix < ix_hi; ++ix) {
              dst[ix * s - p + kx] += row_src[ix];
            }
          }
        }
      }
    }
  }
  return out;
}

void InstanceNorm(Tensor& t, const float* params) {
  const Eigen::Index plane = static_cast<Eigen::Index>(t.height) * t.width;
  const float* scale = params;
  const float* shift = params + t.channels;
  for (int c = 0; c < t.channels; ++c) {
    Eigen::Map<Eigen::ArrayXf> x(t.data.data() + c * plane, plane);
    const float mean = x.sum() / plane;
    const float variance = (x - mean).square().sum() / plane;
    const float gain = scale[c] / std::sqrt(variance + kInstanceNormEpsilon);
    x = x * gain + (shift[c] - mean * gain);
  }
}

int Reflect(int i, int n) {
  if (i < 0) return -i;
  if (i >= n) return 2 * (n - 1) - i;
  return i;
}

Tensor ReflectionPad(const Tensor& in, int pad) {
  if (pad >= in.height || pad >= in.width) {
    throw ContractViolation("reflection pad exceeds input size");
  }
  Tensor out(in.channels, in.height + 2 * pad, in.width + 2 * pad);
  for (int c = 0; c < in.channels; ++c) {
    for (int y = 0; y < out.height; ++y) {
      const float* src = &in.at(c, Reflect(y - pad, in.height), 0);
      float* dst = &out.at(c, y, 0);
      for (int x = 0; x < out.width; ++x) {
        dst[x] = src[Reflect(x - pad, in.width)];
      }
    }
  }
  return out;
}

}  // namespace

Tensor RunGenerator(const GeneratorModel& model, Tensor input) {
  const std::vector<std::size_t> offsets = model.ParameterOffsets();
  std::vector<Tensor> skips;
  Tensor x = std::move(input);
  for (std::size_t i = 0; i < model.layers.size(); ++i) {
    const LayerSpec& layer = model.layers[i];
    if (layer.in_channels != x.channels) {
      throw ContractViolation("layer " + std::to_string(i) + " expects " +
                              std::to_string(layer.in_channels) +
                              " channels, got " + std::to_string(x.channels));
    }
    const float* params = model.weights.data() + offsets[i];
    switch (layer.kind) {
      case LayerKind::kConv:
        x = Conv(x, layer, params);
        break;
      case LayerKind::kTransposedConv:
        x = TransposedConv(x, layer, params);
        break;
      case LayerKind::kInstanceNorm:
        InstanceNorm(x, params);
        break;
      case LayerKind::kRelu:
        for (float& v : x.data) v = std::max(v, 0.f);
        break;
      case LayerKind::kTanh:
        for (float& v : x.data) v = std::tanh(v);
        break;
      case LayerKind::kReflectionPad:
        x = ReflectionPad(x, layer.pad);
        break;
      case LayerKind::kResidualBegin:
        skips.push_back(x);
        break;
      case LayerKind::kResidualEnd: {
        if (skips.empty() || skips.back().data.size() != x.data.size()) {
          throw ContractViolation("residual block shape mismatch");
        }
        const Tensor& skip = skips.back();
        for (std::size_t j = 0; j < x.data.size(); ++j) x.data[j] += skip.data[j];
        skips.pop_back();
        break;
      }
    }
  }
  return x;
}

mapfilter::ModelRaster Forward(const GeneratorModel& model,
                               const mapfilter::ModelRaster& input) {
  Tensor x(1, mapfilter::kModelSize, mapfilter::kModelSize);
  x.data = input.values;
  Tensor y = RunGenerator(model, std::move(x));
  if (y.channels != 1 || y.height != mapfilter::kModelSize ||
      y.width != mapfilter::kModelSize) {
    throw ContractViolation("generator output is not 1x256x256");
  }
  mapfilter::ModelRaster out;
  out.values = std::move(y.data);
  return out;
}

}  // namespace cleaner
}  // namespace gridforge
