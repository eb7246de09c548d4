// Copyright 2026 The shutterlab Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace shutterlab {

/// Result would leave the range of double precision (e.g. e^{-z^2} overflow).
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A searched-for feature (e.g. a threshold crossing) does not occur.
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid run configuration. `line` is 0 when the error is
/// not tied to a particular line of the input document.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string message, int line = 0, std::string key = {})
      : std::runtime_error(std::move(message)), line_(line), key_(std::move(key)) {}

  int line() const noexcept { return line_; }
  const std::string& key() const noexcept { return key_; }

 private:
  int line_;
  std::string key_;
};

}  // namespace shutterlab
