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

#include <png.h>

#include <fstream>
#include <sstream>
#include <string>

#include "gridforge/common/error.h"
#include "gridforge/image/grid_image.h"

namespace gridforge {
namespace image {
namespace {

// Reads the next whitespace-delimited PGM header token, skipping comments.
std::string NextHeaderToken(std::istream& in) {
  std::string token;
  char c = 0;
  while (in.get(c)) {
    if (c == '#') {
      std::string ignored;
      std::getline(in, ignored);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!token.empty()) return token;
      continue;
    }
    token.push_back(c);
  }
  return token;
}

}  // namespace

GridImage ReadPgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  if (NextHeaderToken(in) != "P5") {
    throw IoError(path.string() + ": not a binary PGM (P5)");
  }
  int width = 0, height = 0, max_value = 0;
  try {
    width = std::stoi(NextHeaderToken(in));
    height = std::stoi(NextHeaderToken(in));
    max_value = std::stoi(NextHeaderToken(in));
  } catch (const std::exception&) {
    throw IoError(path.string() + ": malformed PGM header");
  }
  if (width < 1 || height < 1 || max_value < 1 || max_value > 255) {
    throw IoError(path.string() + ": unsupported PGM dimensions or depth");
  }
  GridImage image(width, height);
  in.read(reinterpret_cast<char*>(image.pixels.data()),
          static_cast<std::streamsize>(image.pixels.size()));
  if (in.gcount() != static_cast<std::streamsize>(image.pixels.size())) {
    throw IoError(path.string() + ": truncated PGM data");
  }
  return image;
}

void WritePgm(const GridImage& image, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << "P5\n" << image.width << " " << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.pixels.data()),
            static_cast<std::streamsize>(image.pixels.size()));
  if (!out) throw IoError("failed writing " + path.string());
}

GridImage ReadPng(const std::filesystem::path& path) {
  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  if (png_image_begin_read_from_file(&png, path.c_str()) == 0) {
    throw IoError(path.string() + ": " + png.message);
  }
  png.format = PNG_FORMAT_GRAY;
  GridImage image(static_cast<int>(png.width), static_cast<int>(png.height));
  if (png_image_finish_read(&png, nullptr, image.pixels.data(), 0, nullptr) ==
      0) {
    png_image_free(&png);
    throw IoError(path.string() + ": " + png.message);
  }
  return image;
}

void WritePng(const GridImage& image, const std::filesystem::path& path) {
  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(image.width);
  png.height = static_cast<png_uint_32>(image.height);
  png.format = PNG_FORMAT_GRAY;
  if (png_image_write_to_file(&png, path.c_str(), 0, image.pixels.data(), 0,
                              nullptr) == 0) {
    throw IoError("cannot write " + path.string() + ": " + png.message);
  }
}

GridImage ReadImage(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  char magic[8] = {};
  in.read(magic, sizeof(magic));
  in.close();
  if (magic[0] == 'P' && magic[1] == '5') return ReadPgm(path);
  if (png_sig_cmp(reinterpret_cast<png_const_bytep>(magic), 0, 8) == 0) {
    return ReadPng(path);
  }
  throw IoError(path.string() + ": not a PGM or PNG image");
}

void WriteImage(const GridImage& image, const std::filesystem::path& path) {
  if (path.extension() == ".pgm") {
    WritePgm(image, path);
  } else {
    WritePng(image, path);
  }
}

}  // namespace image
}  // namespace gridforge
