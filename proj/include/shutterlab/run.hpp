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

#include <ostream>

#include "shutterlab/config.hpp"

namespace shutterlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitRange = 2;
inline constexpr int kExitNotFound = 3;
inline constexpr int kExitVerifyFailed = 4;

/// Executes `config`. CSV goes to config.output_path, or to `out` when the
/// path is empty; the verify table always goes to `out`. Error text goes
/// to `err`. Returns one of the kExit codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace shutterlab::cli
