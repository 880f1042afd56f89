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

#ifndef GRIDFORGE_COMMON_ERROR_H_
#define GRIDFORGE_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace gridforge {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable, missing or unwritable files.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line,
             const std::string& source = "")
      : Error(Format(message, line, source)),
        message_(message),
        line_(line) {}

  int line() const { return line_; }

  // Same error, attributed to a file or other named source.
  ParseError WithSource(const std::string& source) const {
    return ParseError(message_, line_, source);
  }

 private:
  static std::string Format(const std::string& message, int line,
                            const std::string& source) {
    std::string out = source.empty() ? "" : source + ": ";
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    return out + message;
  }

  std::string message_;
  int line_;
};

class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// Too few correspondences for registration to continue.
class RegistrationError : public Error {
 public:
  using Error::Error;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class ContractViolation : public Error {
 public:
  using Error::Error;
};

class ModelFormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace gridforge

#endif  // GRIDFORGE_COMMON_ERROR_H_
