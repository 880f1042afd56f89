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

#include "gridforge/errorsim/dataset.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "gridforge/common/error.h"
#include "gridforge/common/parallel.h"
#include "gridforge/errorsim/augment.h"

namespace gridforge {
namespace errorsim {
namespace {

std::string SampleId(int index) {
  char buffer[16];
  std::snprintf(buffer, sizeof(buffer), "%06d", index);
  return buffer;
}

}  // namespace

std::uint64_t SampleSeed(std::uint64_t master_seed, int index) {
  std::uint64_t x = master_seed * 0x9e3779b97f4a7c15ULL +
                    static_cast<std::uint64_t>(index) + 1;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

ErrorConfig SampleConfig(const DatasetOptions& options, int index) {
  const int n = std::max(options.count, 1);
  std::vector<int> strata(n);
  std::iota(strata.begin(), strata.end(), 0);
  std::mt19937_64 shuffle_rng(options.master_seed);
  std::shuffle(strata.begin(), strata.end(), shuffle_rng);

  ErrorConfig config;
  config.rng_seed = SampleSeed(options.master_seed, index);
  std::mt19937_64 rng(config.rng_seed);
  std::uniform_real_distribution<double> unit(0., 1.);
  const double completion_t = (index + unit(rng)) / n;
  const double severity = (strata[index % n] + unit(rng)) / n;
  config.completion_fraction =
      std::clamp(options.completion.Lerp(completion_t), 1e-3, 1.);
  config.noise_flip_prob = options.noise_flip_prob.Lerp(severity);
  config.linear_drift = options.linear_drift.Lerp(severity);
  config.angular_drift = options.angular_drift.Lerp(severity);
  config.accidental_ray_prob = options.accidental_ray_prob.Lerp(severity);
  return config;
}

std::string FormatManifestEntry(const ManifestEntry& entry) {
  std::ostringstream out;
  out.precision(10);
  out << entry.id << " seed=" << entry.seed
      << " completion=" << entry.config.completion_fraction
      << " noise=" << entry.config.noise_flip_prob
      << " linear_drift=" << entry.config.linear_drift
      << " angular_drift=" << entry.config.angular_drift
      << " accidental=" << entry.config.accidental_ray_prob
      << " achieved=" << entry.achieved_completion
      << " variant=" << entry.variant;
  return out.str();
}

ManifestEntry ParseManifestEntry(const std::string& line) {
  std::istringstream in(line);
  ManifestEntry entry;
  if (!(in >> entry.id)) throw ParseError("empty manifest line", 0);
  std::map<std::string, std::string> fields;
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      throw ParseError("manifest field '" + token + "' is not key=value", 0);
    }
    fields[token.substr(0, eq)] = token.substr(eq + 1);
  }
  auto number = [&](const char* key, double fallback) {
    const auto it = fields.find(key);
    if (it == fields.end()) return fallback;
    try {
      return std::stod(it->second);
    } catch (const std::exception&) {
      throw ParseError(std::string("bad value for '") + key + "'", 0);
    }
  };
  if (const auto it = fields.find("seed"); it != fields.end()) {
    try {
      entry.seed = std::stoull(it->second);
    } catch (const std::exception&) {
      throw ParseError("bad value for 'seed'", 0);
    }
  }
  entry.config.rng_seed = entry.seed;
  entry.config.completion_fraction = number("completion", 1.);
  entry.config.noise_flip_prob = number("noise", 0.);
  entry.config.linear_drift = number("linear_drift", 0.);
  entry.config.angular_drift = number("angular_drift", 0.);
  entry.config.accidental_ray_prob = number("accidental", 0.);
  entry.achieved_completion = number("achieved", 0.);
  if (const auto it = fields.find("variant"); it != fields.end()) {
    entry.variant = it->second;
  }
  return entry;
}

std::vector<ManifestEntry> ReadManifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest " + path.string());
  std::vector<ManifestEntry> entries;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') {
      continue;
    }
    try {
      entries.push_back(ParseManifestEntry(line));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_number, path.string());
    }
  }
  return entries;
}

std::vector<ManifestEntry> GenerateDataset(const DatasetOptions& options,
                                           const std::filesystem::path& out_dir) {
  if (options.count < 0) throw ContractViolation("negative sample count");
  std::error_code error;
  std::filesystem::create_directories(out_dir, error);
  if (error) {
    throw IoError("cannot create " + out_dir.string() + ": " + error.message());
  }
  const int per_sample = options.augment ? 6 : 1;
  std::vector<ManifestEntry> entries(
      static_cast<std::size_t>(options.count) * per_sample);
  common::ParallelFor(options.count, [&](std::size_t i) {
    const int index = static_cast<int>(i);
    const ErrorConfig config = SampleConfig(options, index);
    const FloorPlan plan = options.plan
                               ? *options.plan
                               : GenerateFloorPlan(config.rng_seed,
                                                   options.plan_options);
    const SamplePair pair = ExploreAndMap(plan, config);
    std::vector<AugmentedPair> variants;
    if (options.augment) {
      variants = Augment(pair, config.rng_seed ^ 0x1234567ULL);
    } else {
      variants.push_back(AugmentedPair{pair, "original"});
    }
    for (std::size_t v = 0; v < variants.size(); ++v) {
      const std::size_t slot = i * per_sample + v;
      ManifestEntry& entry = entries[slot];
      entry.id = SampleId(static_cast<int>(slot));
      entry.seed = config.rng_seed;
      entry.config = config;
      entry.achieved_completion = pair.achieved_completion;
      entry.variant = variants[v].variant;
      try {
        image::WritePng(variants[v].pair.erroneous,
                        out_dir / (entry.id + "_err.png"));
        image::WritePng(variants[v].pair.clean,
                        out_dir / (entry.id + "_clean.png"));
      } catch (const Error& e) {
        throw IoError("sample " + entry.id + ": " + e.what());
      }
    }
  });
  const std::filesystem::path manifest = out_dir / "manifest.txt";
  std::ofstream out(manifest, std::ios::binary);
  if (!out) throw IoError("cannot write " + manifest.string());
  for (const ManifestEntry& entry : entries) {
    out << FormatManifestEntry(entry) << '\n';
  }
  if (!out) throw IoError("failed writing " + manifest.string());
  return entries;
}

}  // namespace errorsim
}  // namespace gridforge
