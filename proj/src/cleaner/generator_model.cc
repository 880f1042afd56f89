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

#include "gridforge/cleaner/generator_model.h"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "gridforge/common/error.h"
#include "gridforge/mapfilter/map_filter.h"

namespace gridforge {
namespace cleaner {
namespace {

static_assert(std::endian::native == std::endian::little,
              "model files are read in place as little-endian floats");

struct KindName {
  LayerKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {LayerKind::kConv, "conv"},
    {LayerKind::kTransposedConv, "transposed-conv"},
    {LayerKind::kInstanceNorm, "instance-norm"},
    {LayerKind::kRelu, "relu"},
    {LayerKind::kTanh, "tanh"},
    {LayerKind::kResidualBegin, "residual-block-begin"},
    {LayerKind::kResidualEnd, "residual-block-end"},
    {LayerKind::kReflectionPad, "reflection-pad"},
};

std::string Describe(std::size_t index, const LayerSpec& layer) {
  return "layer " + std::to_string(index) + " (" + LayerKindName(layer.kind) +
         ")";
}

}  // namespace

const char* LayerKindName(LayerKind kind) {
  for (const KindName& entry : kKindNames) {
    if (entry.kind == kind) return entry.name;
  }
  return "unknown";
}

LayerKind ParseLayerKind(const std::string& name) {
  for (const KindName& entry : kKindNames) {
    if (name == entry.name) return entry.kind;
  }
  throw ModelFormatError("unknown layer kind '" + name + "'");
}

std::size_t LayerSpec::ParameterCount() const {
  const std::size_t in = in_channels;
  const std::size_t out = out_channels;
  const std::size_t area = static_cast<std::size_t>(kernel) * kernel;
  switch (kind) {
    case LayerKind::kConv:
    case LayerKind::kTransposedConv:
      return out * in * area + out;
    case LayerKind::kInstanceNorm:
      return 2 * out;
    default:
      return 0;
  }
}

std::vector<std::size_t> GeneratorModel::ParameterOffsets() const {
  std::vector<std::size_t> offsets;
  offsets.reserve(layers.size());
  std::size_t offset = 0;
  for (const LayerSpec& layer : layers) {
    offsets.push_back(offset);
    offset += layer.ParameterCount();
  }
  return offsets;
}

std::size_t GeneratorModel::ExpectedWeightCount() const {
  std::size_t total = 0;
  for (const LayerSpec& layer : layers) total += layer.ParameterCount();
  return total;
}

void ValidateGenerator(const GeneratorModel& model) {
  if (model.layers.empty()) throw ModelFormatError("model has no layers");
  int channels = kModelChannels;
  int size = mapfilter::kModelSize;
  std::vector<std::pair<int, int>> residual_stack;
  for (std::size_t i = 0; i < model.layers.size(); ++i) {
    const LayerSpec& layer = model.layers[i];
    if (layer.in_channels != channels) {
      throw ModelFormatError(Describe(i, layer) + " expects " +
                             std::to_string(layer.in_channels) +
                             " input channels, previous layer produces " +
                             std::to_string(channels));
    }
    if (layer.out_channels < 1) {
      throw ModelFormatError(Describe(i, layer) + " has no output channels");
    }
    const bool is_conv = layer.kind == LayerKind::kConv ||
                         layer.kind == LayerKind::kTransposedConv;
    if (!is_conv && layer.out_channels != layer.in_channels) {
      throw ModelFormatError(Describe(i, layer) + " cannot change channels");
    }
    switch (layer.kind) {
      case LayerKind::kConv:
        if (layer.kernel < 1 || layer.stride < 1 || layer.pad < 0) {
          throw ModelFormatError(Describe(i, layer) + " has bad geometry");
        }
        if (size + 2 * layer.pad < layer.kernel) {
          throw ModelFormatError(Describe(i, layer) + " kernel exceeds input");
        }
        size = (size + 2 * layer.pad - layer.kernel) / layer.stride + 1;
        break;
      case LayerKind::kTransposedConv:
        if (layer.kernel < 1 || layer.stride < 1 || layer.pad < 0) {
          throw ModelFormatError(Describe(i, layer) + " has bad geometry");
        }
        size = (size - 1) * layer.stride - 2 * layer.pad + layer.kernel;
        if (size < 1) {
          throw ModelFormatError(Describe(i, layer) + " produces empty output");
        }
        break;
      case LayerKind::kReflectionPad:
        if (layer.pad < 0 || layer.pad >= size) {
          throw ModelFormatError(Describe(i, layer) +
                                 " pad must be below the input size");
        }
        size += 2 * layer.pad;
        break;
      case LayerKind::kResidualBegin:
        residual_stack.emplace_back(channels, size);
        break;
      case LayerKind::kResidualEnd:
        if (residual_stack.empty()) {
          throw ModelFormatError(Describe(i, layer) + " without a begin");
        }
        if (residual_stack.back() != std::make_pair(channels, size)) {
          throw ModelFormatError(Describe(i, layer) +
                                 " shape differs from the block input");
        }
        residual_stack.pop_back();
        break;
      default:
        break;
    }
    channels = layer.out_channels;
  }
  if (!residual_stack.empty()) {
    throw ModelFormatError("unterminated residual block");
  }
  if (channels != kModelChannels || size != mapfilter::kModelSize) {
    throw ModelFormatError(
        "model maps a 1x256x256 input to " + std::to_string(channels) + "x" +
        std::to_string(size) + "x" + std::to_string(size) +
        ", expected 1x256x256");
  }
  const std::size_t expected = model.ExpectedWeightCount();
  if (model.weights.size() != expected) {
    throw ModelFormatError("weight count mismatch: expected " +
                           std::to_string(expected) + ", found " +
                           std::to_string(model.weights.size()));
  }
  for (std::size_t i = 0; i < model.weights.size(); ++i) {
    if (!std::isfinite(model.weights[i])) {
      throw ModelFormatError("non-finite weight at index " +
                             std::to_string(i));
    }
  }
}

std::string SerializeGenerator(const GeneratorModel& model) {
  std::ostringstream header;
  for (const LayerSpec& layer : model.layers) {
    header << LayerKindName(layer.kind) << ' ' << layer.in_channels << ' '
           << layer.out_channels << ' ' << layer.kernel << ' ' << layer.stride
           << ' ' << layer.pad << '\n';
  }
  std::string bytes = kModelMagic;
  bytes += header.str();
  bytes.push_back('\0');
  const std::size_t offset = bytes.size();
  bytes.resize(offset + model.weights.size() * sizeof(float));
  std::memcpy(bytes.data() + offset, model.weights.data(),
              model.weights.size() * sizeof(float));
  return bytes;
}

GeneratorModel ParseGenerator(const std::string& bytes) {
  constexpr std::size_t kMagicSize = sizeof(kModelMagic) - 1;
  if (bytes.size() < kMagicSize || bytes.compare(0, 3, "GSM") != 0) {
    throw ModelFormatError("bad magic: not a GSM model file");
  }
  if (bytes.compare(0, kMagicSize, kModelMagic) != 0) {
    throw ModelFormatError("version mismatch: file is '" +
                           bytes.substr(0, kMagicSize) + "', reader supports '" +
                           kModelMagic + "'");
  }
  const std::size_t terminator = bytes.find('\0', kMagicSize);
  if (terminator == std::string::npos) {
    throw ModelFormatError("header is not terminated by a zero byte");
  }
  GeneratorModel model;
  std::istringstream header(bytes.substr(kMagicSize, terminator - kMagicSize));
  std::string line;
  int line_number = 0;
  while (std::getline(header, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::string kind;
    LayerSpec layer;
    if (!(fields >> kind >> layer.in_channels >> layer.out_channels >>
          layer.kernel >> layer.stride >> layer.pad)) {
      throw ModelFormatError("header line " + std::to_string(line_number) +
                             ": expected 'kind in_ch out_ch kernel stride pad'");
    }
    std::string extra;
    if (fields >> extra) {
      throw ModelFormatError("header line " + std::to_string(line_number) +
                             ": trailing field '" + extra + "'");
    }
    layer.kind = ParseLayerKind(kind);
    model.layers.push_back(layer);
  }
  const std::size_t payload = bytes.size() - terminator - 1;
  const std::size_t expected = model.ExpectedWeightCount();
  if (payload % sizeof(float) != 0 || payload / sizeof(float) != expected) {
    throw ModelFormatError(
        "weight count mismatch: expected " + std::to_string(expected) +
        ", found " + std::to_string(payload / sizeof(float)) +
        (payload % sizeof(float) ? " (plus a partial value)" : ""));
  }
  model.weights.resize(expected);
  std::memcpy(model.weights.data(), bytes.data() + terminator + 1, payload);
  ValidateGenerator(model);
  return model;
}

GeneratorModel LoadGenerator(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseGenerator(buffer.str());
  } catch (const ModelFormatError& e) {
    throw ModelFormatError(path.string() + ": " + e.what());
  }
}

void SaveGenerator(const GeneratorModel& model,
                   const std::filesystem::path& path) {
  ValidateGenerator(model);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  const std::string bytes = SerializeGenerator(model);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed writing " + path.string());
}

GeneratorModel MakeResnetGenerator(const GeneratorPreset& preset) {
  const int base = preset.base_channels;
  GeneratorModel model;
  auto add = [&](LayerKind kind, int in, int out, int kernel = 0,
                 int stride = 1, int pad = 0) {
    model.layers.push_back(LayerSpec{kind, in, out, kernel, stride, pad});
  };
  auto norm_relu = [&](int channels) {
    add(LayerKind::kInstanceNorm, channels, channels);
    add(LayerKind::kRelu, channels, channels);
  };
  add(LayerKind::kReflectionPad, 1, 1, 0, 1, 3);
  add(LayerKind::kConv, 1, base, 7, 1, 0);
  norm_relu(base);
  add(LayerKind::kConv, base, 2 * base, 3, 2, 1);
  norm_relu(2 * base);
  add(LayerKind::kConv, 2 * base, 4 * base, 3, 2, 1);
  norm_relu(4 * base);
  const int inner = 4 * base;
  for (int b = 0; b < preset.residual_blocks; ++b) {
    add(LayerKind::kResidualBegin, inner, inner);
    add(LayerKind::kReflectionPad, inner, inner, 0, 1, 1);
    add(LayerKind::kConv, inner, inner, 3, 1, 0);
    norm_relu(inner);
    add(LayerKind::kReflectionPad, inner, inner, 0, 1, 1);
    add(LayerKind::kConv, inner, inner, 3, 1, 0);
    add(LayerKind::kInstanceNorm, inner, inner);
    add(LayerKind::kResidualEnd, inner, inner);
  }
  add(LayerKind::kTransposedConv, 4 * base, 2 * base, 4, 2, 1);
  norm_relu(2 * base);
  add(LayerKind::kTransposedConv, 2 * base, base, 4, 2, 1);
  norm_relu(base);
  add(LayerKind::kReflectionPad, base, base, 0, 1, 3);
  add(LayerKind::kConv, base, 1, 7, 1, 0);
  add(LayerKind::kTanh, 1, 1);
  model.weights.assign(model.ExpectedWeightCount(), 0.f);
  return model;
}

}  // namespace cleaner
}  // namespace gridforge
