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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string_view>

#include "gridforge/common/error.h"
#include "gridforge/pointcloud/point_cloud.h"

namespace gridforge {
namespace pointcloud {
namespace {

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    const std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

double ParseNumber(std::string_view token, int line) {
  double value = 0.;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("non-numeric field '" + std::string(token) + "'", line);
  }
  if (!std::isfinite(value)) {
    throw ParseError("non-finite field '" + std::string(token) + "'", line);
  }
  return value;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open point cloud file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

PointCloud3D ParseWithTimestampFlag(const std::string& text,
                                    bool* has_timestamp);

}  // namespace

std::vector<Eigen::Vector3d> Positions(const PointCloud3D& cloud) {
  std::vector<Eigen::Vector3d> positions;
  positions.reserve(cloud.size());
  for (const Point3& point : cloud.points) positions.push_back(point.position);
  return positions;
}

PointCloud3D ParsePointCloud(const std::string& text) {
  return ParseWithTimestampFlag(text, nullptr);
}

namespace {

PointCloud3D ParseWithTimestampFlag(const std::string& text,
                                    bool* has_timestamp) {
  if (has_timestamp != nullptr) *has_timestamp = false;
  PointCloud3D cloud;
  bool has_fields = false;
  long expected = -1;
  int line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line(text.data() + pos, end - pos);
    pos = end + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = SplitWhitespace(line);
    if (tokens.empty() || tokens[0].front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tokens[0] == "FIELDS") {
      if (tokens.size() != 5 || tokens[1] != "x" || tokens[2] != "y" ||
          tokens[3] != "z" || tokens[4] != "intensity") {
        throw ParseError("expected 'FIELDS x y z intensity'", line_number);
      }
      has_fields = true;
    } else if (tokens[0] == "TIMESTAMP") {
      if (tokens.size() != 2) throw ParseError("malformed TIMESTAMP", line_number);
      cloud.timestamp = ParseNumber(tokens[1], line_number);
      if (has_timestamp != nullptr) *has_timestamp = true;
    } else if (tokens[0] == "POINTS") {
      if (!has_fields) throw ParseError("POINTS before FIELDS", line_number);
      if (tokens.size() != 2) throw ParseError("malformed POINTS", line_number);
      const double n = ParseNumber(tokens[1], line_number);
      if (n < 0 || n != std::floor(n)) {
        throw ParseError("POINTS must be a non-negative integer", line_number);
      }
      expected = static_cast<long>(n);
      cloud.points.reserve(static_cast<std::size_t>(expected));
    } else {
      if (expected < 0) throw ParseError("data before header", line_number);
      if (tokens.size() != 4) {
        throw ParseError("expected 4 fields, found " +
                             std::to_string(tokens.size()),
                         line_number);
      }
      if (static_cast<long>(cloud.points.size()) >= expected) {
        throw ParseError("more records than declared by POINTS", line_number);
      }
      Point3 point;
      point.position = Eigen::Vector3d(ParseNumber(tokens[0], line_number),
                                       ParseNumber(tokens[1], line_number),
                                       ParseNumber(tokens[2], line_number));
      point.intensity = ParseNumber(tokens[3], line_number);
      if (point.intensity < 0.) {
        throw ParseError("negative intensity", line_number);
      }
      cloud.points.push_back(point);
    }
    if (end == text.size()) break;
  }
  if (expected < 0) throw ParseError("missing FIELDS/POINTS header", 0);
  if (static_cast<long>(cloud.points.size()) != expected) {
    throw ParseError("POINTS declares " + std::to_string(expected) +
                         " records, found " +
                         std::to_string(cloud.points.size()),
                     line_number);
  }
  return cloud;
}

}  // namespace

PointCloud3D LoadPointCloud(const std::filesystem::path& path) {
  try {
    return ParsePointCloud(ReadFile(path));
  } catch (const ParseError& e) {
    throw e.WithSource(path.string());
  }
}

std::string FormatPointCloud(const PointCloud3D& cloud) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "FIELDS x y z intensity\n";
  out << "TIMESTAMP " << cloud.timestamp << "\n";
  out << "POINTS " << cloud.size() << "\n";
  out << std::setprecision(9);
  for (const Point3& p : cloud.points) {
    out << p.position.x() << ' ' << p.position.y() << ' ' << p.position.z()
        << ' ' << p.intensity << '\n';
  }
  return out.str();
}

void WritePointCloud(const PointCloud3D& cloud,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write point cloud file " + path.string());
  out << FormatPointCloud(cloud);
  if (!out) throw IoError("failed writing " + path.string());
}

std::vector<std::filesystem::path> ListSequence(
    const std::filesystem::path& directory) {
  if (!std::filesystem::is_directory(directory)) {
    throw IoError("not a directory: " + directory.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(directory)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::vector<PointCloud3D> LoadSequence(const std::filesystem::path& directory,
                                       double default_period) {
  std::vector<PointCloud3D> frames;
  const auto files = ListSequence(directory);
  for (std::size_t i = 0; i < files.size(); ++i) {
    const std::string text = ReadFile(files[i]);
    PointCloud3D cloud;
    bool has_timestamp = false;
    try {
      cloud = ParseWithTimestampFlag(text, &has_timestamp);
    } catch (const ParseError& e) {
      throw e.WithSource(files[i].string());
    }
    if (!has_timestamp) {
      cloud.timestamp = static_cast<double>(i) * default_period;
    }
    if (!frames.empty() && cloud.timestamp <= frames.back().timestamp) {
      throw ParseError("timestamp does not increase", 0, files[i].string());
    }
    frames.push_back(std::move(cloud));
  }
  return frames;
}

}  // namespace pointcloud
}  // namespace gridforge
