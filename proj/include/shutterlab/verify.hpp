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
#include <string>
#include <vector>

#include "shutterlab/config.hpp"

namespace shutterlab::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Built-in invariant suite evaluated with the parameters and grids of
/// `config`: special-function anchors, shutter limits, the density and
/// concurrence identities on every configured grid, exchange symmetry and
/// thread-count determinism.
std::vector<CheckResult> run_verification(const RunConfig& config);

void print_results(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace shutterlab::cli
