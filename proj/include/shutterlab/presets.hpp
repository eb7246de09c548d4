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

#include <array>
#include <string_view>

#include "shutterlab/sweep.hpp"

namespace shutterlab::presets {

/// Reference wavenumber k0 in 1/nm.
inline constexpr double kReferenceWavenumber = 1.448;

/// Every parameter needed to regenerate one figure.
struct FigurePreset {
  std::string_view name;
  PairSpec pair;
  double x1 = 0.0;       // nm
  double x2 = 0.0;       // nm
  double t_fixed = 0.0;  // ps, time of the fixed-time cut / scan
  sweep::GridSpec xi_grid;
  sweep::GridSpec t_grid;
  sweep::GridSpec dx_grid;
  double threshold_frac = 0.05;
};

/// Concurrence map: x1 = 10 nm, x2 = 11 nm, alpha = k0, beta = 1.01 k0,
/// cut at t0 = 0.32 ps. 201 xi samples on [0, 1], 400 times on (0, 0.8] ps.
FigurePreset fig1();

/// Joint densities: x1 = 100 nm, alpha = 2 k0, beta = 2.05 k0,
/// |xi| = 1/sqrt(2), scan at t0 = 0.4 ps. x2 defaults to 101 nm.
/// 2000 times on (0, 1.2] ps and 1601 separations on [-200, 200] nm.
FigurePreset fig2();

/// Detector separations for the five time-trace panels: quarter steps of
/// the stationary fringe from full bunching (0) to the first
/// anti-bunching extremum (pi / delta_k).
std::array<double, 5> trace_separations(const PairSpec& s);

}  // namespace shutterlab::presets
