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

#include <optional>
#include <string>
#include <string_view>

#include "shutterlab/presets.hpp"

namespace shutterlab::cli {

enum class Mode { MapConcurrence, TraceTime, ScanDx, Activation, Verify };

std::string_view to_string(Mode m);
/// Accepts map | trace | scan | activation | verify.
std::optional<Mode> parse_mode(std::string_view text);

/// Fully validated run description.
struct RunConfig {
  Mode mode = Mode::ScanDx;
  std::string preset = "fig2";
  double hbar = 0.0;  // eV ps
  double mass = 0.0;  // eV ps^2 / nm^2
  PairSpec pair;
  double x1 = 0.0;       // nm
  double x2 = 0.0;       // nm
  double t_fixed = 0.0;  // ps
  sweep::GridSpec t_grid;
  sweep::GridSpec xi_grid;
  sweep::GridSpec dx_grid;
  double threshold_frac = 0.05;
  unsigned threads = 0;
  double nonbunching_tol = -1.0;  // negative: relative default
  std::string output_path;        // empty: standard output

  MediumConstants constants() const { return MediumConstants(hbar, mass); }

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Defaults for `preset` (fig1 or fig2) with electron constants.
RunConfig preset_config(std::string_view preset);

/// Parses a line-oriented `key = value` document. `#` starts a comment.
/// The preset line, wherever it appears, is applied first and every other
/// key overrides it. Throws ConfigError carrying the line number for
/// syntax errors, unknown or duplicate keys and unparsable values, and
/// naming the key for constraint violations.
RunConfig parse_config(std::string_view text);

/// Throws ConfigError naming the first field that breaks its invariant.
void validate(const RunConfig& config);

/// Canonical document for `config`; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& config);

}  // namespace shutterlab::cli
