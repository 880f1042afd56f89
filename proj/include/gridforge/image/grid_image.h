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

#ifndef GRIDFORGE_IMAGE_GRID_IMAGE_H_
#define GRIDFORGE_IMAGE_GRID_IMAGE_H_

#include <cstdint>
#include <filesystem>
#include <vector>

namespace gridforge {
namespace image {

// Pixel codes of the trinary map alphabet.
constexpr std::uint8_t kOccupied = 0;
constexpr std::uint8_t kFree = 200;
constexpr std::uint8_t kUnexplored = 255;

// 8-bit raster exchange form of an occupancy grid, row-major. Row r holds
// grid row r. Either trinary ({0, 200, 255}) or raw (probability codes
// 0..254 with 255 for unexplored, higher code = more likely occupied).
struct GridImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  GridImage() = default;
  GridImage(int width, int height, std::uint8_t fill = kUnexplored);

  std::uint8_t& at(int row, int col) { return pixels[row * width + col]; }
  std::uint8_t at(int row, int col) const { return pixels[row * width + col]; }
  bool Contains(int row, int col) const {
    return row >= 0 && row < height && col >= 0 && col < width;
  }

  bool operator==(const GridImage&) const = default;
};

bool IsTrinary(const GridImage& image);

// Number of pixels equal to `code`.
std::size_t CountCode(const GridImage& image, std::uint8_t code);

// 8-bit grayscale binary PGM (P5) and PNG. Readers throw IoError.
GridImage ReadPgm(const std::filesystem::path& path);
void WritePgm(const GridImage& image, const std::filesystem::path& path);
GridImage ReadPng(const std::filesystem::path& path);
void WritePng(const GridImage& image, const std::filesystem::path& path);

// Dispatches on the file contents (PGM magic or PNG signature).
GridImage ReadImage(const std::filesystem::path& path);
// Dispatches on the extension: ".pgm" writes PGM, anything else PNG.
void WriteImage(const GridImage& image, const std::filesystem::path& path);

}  // namespace image
}  // namespace gridforge

#endif  // GRIDFORGE_IMAGE_GRID_IMAGE_H_
