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

#ifndef GRIDFORGE_CLEANER_GENERATOR_MODEL_H_
#define GRIDFORGE_CLEANER_GENERATOR_MODEL_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace gridforge {
namespace cleaner {

enum class LayerKind {
  kConv,
  kTransposedConv,
  kInstanceNorm,
  kRelu,
  kTanh,
  kResidualBegin,
  kResidualEnd,
  kReflectionPad,
};

// Token used for a layer kind in the model file header.
const char* LayerKindName(LayerKind kind);
LayerKind ParseLayerKind(const std::string& name);

// One header line: "kind in_ch out_ch kernel stride pad". For convolutions
// `pad` is implicit zero padding; for reflection-pad it is the pad width.
struct LayerSpec {
  LayerKind kind = LayerKind::kRelu;
  int in_channels = 0;
  int out_channels = 0;
  int kernel = 0;
  int stride = 1;
  int pad = 0;

  // Number of float parameters the layer owns in the weight buffer.
  std::size_t ParameterCount() const;
};

// Serialized generator: layer list plus one flat weight buffer. Per layer,
// in order: weights, biases (convolutions), or scale then shift
// (instance-norm). Convolution weights are [out][in][k][k], transposed
// convolution weights [in][out][k][k], both row-major.
struct GeneratorModel {
  std::vector<LayerSpec> layers;
  std::vector<float> weights;

  // Offset of each layer's parameters in `weights`.
  std::vector<std::size_t> ParameterOffsets() const;
  std::size_t ExpectedWeightCount() const;
};

constexpr int kModelChannels = 1;
constexpr char kModelMagic[] = "GSM1";

// Checks the channel chain (1 channel in, 1 out, each layer consuming what
// the previous produced), residual nesting, that a kModelSize input keeps
// valid shapes and yields a kModelSize output, and that the weight buffer
// has exactly the declared size with finite values. Throws ModelFormatError.
void ValidateGenerator(const GeneratorModel& model);

// File layout: magic "GSM1", UTF-8 header with one layer per line, a zero
// byte, then little-endian float32 weights.
std::string SerializeGenerator(const GeneratorModel& model);
GeneratorModel ParseGenerator(const std::string& bytes);
GeneratorModel LoadGenerator(const std::filesystem::path& path);
void SaveGenerator(const GeneratorModel& model,
                   const std::filesystem::path& path);

struct GeneratorPreset {
  int base_channels = 32;
  int residual_blocks = 3;
};

// ResNet generator: reflection-pad 3, 7x7 conv (1 -> base), two stride-2 3x3
// downsampling convs, residual blocks at 4 * base channels, two stride-2
// 4x4 transposed convs, reflection-pad 3, 7x7 conv (base -> 1), tanh;
// instance-norm + relu after every conv but the last. Weights are zero.
GeneratorModel MakeResnetGenerator(const GeneratorPreset& preset = {});

}  // namespace cleaner
}  // namespace gridforge

#endif  // GRIDFORGE_CLEANER_GENERATOR_MODEL_H_
