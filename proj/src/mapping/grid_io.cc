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

#include "gridforge/mapping/grid_io.h"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "gridforge/common/error.h"

namespace gridforge {
namespace mapping {

GridMetadata MetadataFor(const OccupancyGrid& grid, const std::string& image) {
  return GridMetadata{image, grid.resolution(), grid.origin(), grid.width(),
                      grid.height()};
}

std::string FormatMetadata(const GridMetadata& metadata) {
  std::ostringstream out;
  out << std::setprecision(12);
  out << "image: " << metadata.image << "\n";
  out << "resolution: " << metadata.resolution << "\n";
  out << "origin_x: " << metadata.origin.x << "\n";
  out << "origin_y: " << metadata.origin.y << "\n";
  out << "origin_yaw: " << metadata.origin.yaw << "\n";
  out << "width: " << metadata.width << "\n";
  out << "height: " << metadata.height << "\n";
  return out.str();
}

GridMetadata ParseMetadata(const std::string& text) {
  std::map<std::string, std::string> values;
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw ParseError("expected 'key: value'", line_number);
    }
    std::string value = line.substr(colon + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    value.erase(value.find_last_not_of(" \t\r") + 1);
    values[line.substr(0, colon)] = value;
  }
  auto get = [&](const std::string& key) -> const std::string& {
    const auto it = values.find(key);
    if (it == values.end()) throw ParseError("missing key '" + key + "'", 0);
    return it->second;
  };
  GridMetadata metadata;
  try {
    metadata.image = get("image");
    metadata.resolution = std::stod(get("resolution"));
    metadata.origin.x = std::stod(get("origin_x"));
    metadata.origin.y = std::stod(get("origin_y"));
    metadata.origin.yaw = std::stod(get("origin_yaw"));
    metadata.width = std::stoi(get("width"));
    metadata.height = std::stoi(get("height"));
  } catch (const std::invalid_argument&) {
    throw ParseError("non-numeric metadata value", 0);
  }
  return metadata;
}

GridMetadata ReadMetadata(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseMetadata(buffer.str());
  } catch (const ParseError& e) {
    throw e.WithSource(path.string());
  }
}

void WriteGridMap(const OccupancyGrid& grid,
                  const std::filesystem::path& stem) {
  std::filesystem::path image_path = stem;
  image_path += ".pgm";
  std::filesystem::path metadata_path = stem;
  metadata_path += ".yaml";
  image::WritePgm(SnapshotTrinary(grid), image_path);
  std::ofstream out(metadata_path, std::ios::binary);
  if (!out) throw IoError("cannot write " + metadata_path.string());
  out << FormatMetadata(MetadataFor(grid, image_path.filename().string()));
  if (!out) throw IoError("failed writing " + metadata_path.string());
}

}  // namespace mapping
}  // namespace gridforge
