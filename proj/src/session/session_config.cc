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

#include "gridforge/session/session_config.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <vector>

#include "gridforge/common/error.h"

namespace gridforge {
namespace session {
namespace {

constexpr double kDegrees = 180. / std::numbers::pi;

double ParseDouble(const std::string& value, int line) {
  double out = 0.;
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || !std::isfinite(out)) {
    throw ParseError("'" + value + "' is not a finite number", line);
  }
  return out;
}

int ParseInt(const std::string& value, int line) {
  int out = 0;
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("'" + value + "' is not an integer", line);
  }
  return out;
}

struct Field {
  const char* key;
  std::function<void(SessionConfig&, const std::string&, int)> set;
  std::function<std::string(const SessionConfig&)> get;
};

std::string Str(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

#define GRIDFORGE_DOUBLE_FIELD(name, member)                                 \
  Field {                                                                    \
    name,                                                                    \
        [](SessionConfig& c, const std::string& v, int line) {               \
          c.member = ParseDouble(v, line);                                   \
        },                                                                   \
        [](const SessionConfig& c) { return Str(c.member); }                 \
  }
#define GRIDFORGE_INT_FIELD(name, member)                                    \
  Field {                                                                    \
    name,                                                                    \
        [](SessionConfig& c, const std::string& v, int line) {               \
          c.member = ParseInt(v, line);                                      \
        },                                                                   \
        [](const SessionConfig& c) { return std::to_string(c.member); }      \
  }

const std::vector<Field>& Fields() {
  static const std::vector<Field> fields = {
      GRIDFORGE_DOUBLE_FIELD("box_half_extent", box_half_extent),
      GRIDFORGE_DOUBLE_FIELD("voxel_resolution", voxel_resolution),
      GRIDFORGE_INT_FIELD("projection_bins", projection.num_bins),
      GRIDFORGE_DOUBLE_FIELD("z_min", projection.z_min),
      GRIDFORGE_DOUBLE_FIELD("z_max", projection.z_max),
      GRIDFORGE_DOUBLE_FIELD("max_correspondence_distance",
                             gicp.max_correspondence_distance),
      GRIDFORGE_INT_FIELD("max_iterations", gicp.max_iterations),
      GRIDFORGE_DOUBLE_FIELD("convergence_epsilon", gicp.convergence_epsilon),
      GRIDFORGE_INT_FIELD("min_correspondences", gicp.min_correspondences),
      GRIDFORGE_INT_FIELD("covariance_neighbors", gicp.covariance_neighbors),
      GRIDFORGE_DOUBLE_FIELD("keyframe_distance", submap.keyframe_distance),
      Field{"keyframe_yaw_deg",
            [](SessionConfig& c, const std::string& v, int line) {
              c.submap.keyframe_yaw = ParseDouble(v, line) / kDegrees;
            },
            [](const SessionConfig& c) {
              return Str(c.submap.keyframe_yaw * kDegrees);
            }},
      GRIDFORGE_INT_FIELD("submap_keyframes", submap.submap_keyframes),
      GRIDFORGE_DOUBLE_FIELD("resolution", mapping.resolution),
      GRIDFORGE_DOUBLE_FIELD("log_odds_hit", mapping.log_odds_hit),
      GRIDFORGE_DOUBLE_FIELD("log_odds_miss", mapping.log_odds_miss),
      GRIDFORGE_DOUBLE_FIELD("log_odds_clamp", mapping.log_odds_clamp),
      GRIDFORGE_INT_FIELD("max_cells", mapping.max_cells),
      GRIDFORGE_INT_FIELD("initial_grid_cells", initial_grid_cells),
      Field{"cleaner",
            [](SessionConfig& c, const std::string& v, int line) {
              if (v == "none") {
                c.cleaner = CleanerSelection::kNone;
              } else if (v == "morph") {
                c.cleaner = CleanerSelection::kMorphological;
              } else if (v == "model") {
                c.cleaner = CleanerSelection::kNeural;
              } else {
                throw ParseError("cleaner must be none, morph or model", line);
              }
            },
            [](const SessionConfig& c) -> std::string {
              switch (c.cleaner) {
                case CleanerSelection::kMorphological:
                  return "morph";
                case CleanerSelection::kNeural:
                  return "model";
                default:
                  return "none";
              }
            }},
      Field{"model_path",
            [](SessionConfig& c, const std::string& v, int) {
              c.model_path = v;
            },
            [](const SessionConfig& c) { return c.model_path.string(); }},
      GRIDFORGE_INT_FIELD("min_area", morphology.min_area),
      GRIDFORGE_INT_FIELD("clean_every", clean_every),
      GRIDFORGE_INT_FIELD("max_consecutive_failures", max_consecutive_failures),
  };
  return fields;
}

#undef GRIDFORGE_DOUBLE_FIELD
#undef GRIDFORGE_INT_FIELD

}  // namespace

void ValidateSessionConfig(const SessionConfig& c) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ContractViolation(std::string("config: ") + what);
  };
  require(c.box_half_extent > 0., "box_half_extent must be positive");
  require(c.voxel_resolution > 0., "voxel_resolution must be positive");
  require(c.projection.num_bins >= 1, "projection_bins must be at least 1");
  require(c.projection.z_min < c.projection.z_max, "z_min must be below z_max");
  require(c.gicp.max_correspondence_distance > 0.,
          "max_correspondence_distance must be positive");
  require(c.gicp.max_iterations >= 1, "max_iterations must be at least 1");
  require(c.gicp.convergence_epsilon > 0.,
          "convergence_epsilon must be positive");
  require(c.gicp.min_correspondences >= 1,
          "min_correspondences must be at least 1");
  require(c.gicp.covariance_neighbors >= 3,
          "covariance_neighbors must be at least 3");
  require(c.submap.keyframe_distance > 0., "keyframe_distance must be positive");
  require(c.submap.keyframe_yaw > 0., "keyframe_yaw_deg must be positive");
  require(c.submap.submap_keyframes >= 1, "submap_keyframes must be at least 1");
  require(c.mapping.resolution > 0., "resolution must be positive");
  require(c.mapping.log_odds_hit > 0., "log_odds_hit must be positive");
  require(c.mapping.log_odds_miss < 0., "log_odds_miss must be negative");
  require(c.mapping.log_odds_clamp > 0., "log_odds_clamp must be positive");
  require(c.mapping.max_cells >= 1, "max_cells must be at least 1");
  require(c.initial_grid_cells >= 1 &&
              c.initial_grid_cells <= c.mapping.max_cells,
          "initial_grid_cells must lie in [1, max_cells]");
  require(c.morphology.min_area >= 1, "min_area must be at least 1");
  require(c.clean_every >= 0, "clean_every must be non-negative");
  require(c.max_consecutive_failures >= 1,
          "max_consecutive_failures must be at least 1");
  require(c.cleaner != CleanerSelection::kNeural || !c.model_path.empty(),
          "cleaner 'model' needs model_path");
}

SessionConfig ParseSessionConfig(const std::string& text, SessionConfig base) {
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw ParseError("expected 'key: value'", line_number);
    }
    std::string key = line.substr(first, colon - first);
    key.erase(key.find_last_not_of(" \t") + 1);
    std::string value = line.substr(colon + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    value.erase(value.find_last_not_of(" \t\r") + 1);
    const auto& fields = Fields();
    const auto it = std::find_if(fields.begin(), fields.end(),
                                 [&](const Field& f) { return key == f.key; });
    if (it == fields.end()) {
      throw ParseError("unknown key '" + key + "'", line_number);
    }
    it->set(base, value, line_number);
  }
  return base;
}

SessionConfig LoadSessionConfig(const std::filesystem::path& path,
                                SessionConfig base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseSessionConfig(buffer.str(), std::move(base));
  } catch (const ParseError& e) {
    throw e.WithSource(path.string());
  }
}

std::string FormatSessionConfig(const SessionConfig& config) {
  std::string out;
  for (const Field& field : Fields()) {
    out += std::string(field.key) + ": " + field.get(config) + "\n";
  }
  return out;
}

}  // namespace session
}  // namespace gridforge
