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

#include "shutterlab/presets.hpp"

#include <numbers>

namespace shutterlab::presets {

using sweep::Axis;
using sweep::GridSpec;

FigurePreset fig1() {
  constexpr double k0 = kReferenceWavenumber;
  FigurePreset p;
  p.name = "fig1";
  p.pair = {k0, 1.01 * k0, 1.0 / std::numbers::sqrt2, 0.0, Statistics::Boson};
  p.x1 = 10.0;
  p.x2 = 11.0;
  p.t_fixed = 0.32;
  p.xi_grid = {Axis::XiCoefficient, 0.0, 1.0, 201};
  p.t_grid = {Axis::Time, 0.002, 0.8, 400};
  p.dx_grid = {Axis::DeltaX, -200.0, 200.0, 1601};
  return p;
}

FigurePreset fig2() {
  constexpr double k0 = kReferenceWavenumber;
  FigurePreset p;
  p.name = "fig2";
  p.pair = {2.0 * k0, 2.05 * k0, 1.0 / std::numbers::sqrt2, 0.0, Statistics::Boson};
  p.x1 = 100.0;
  p.x2 = 101.0;
  p.t_fixed = 0.4;
  p.xi_grid = {Axis::XiCoefficient, 0.0, 1.0, 201};
  p.t_grid = {Axis::Time, 0.0006, 1.2, 2000};
  p.dx_grid = {Axis::DeltaX, -200.0, 200.0, 1601};
  return p;
}

std::array<double, 5> trace_separations(const PairSpec& s) {
  const double quarter = std::numbers::pi / (4.0 * std::abs(s.delta_k()));
  return {0.0, quarter, 2.0 * quarter, 3.0 * quarter, 4.0 * quarter};
}

}  // namespace shutterlab::presets
