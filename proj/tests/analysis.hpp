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

// Post-processing helpers shared by the sweep tests and the acceptance suite.

#include <cstddef>
#include <vector>

#include "shutterlab/sweep.hpp"

namespace shutterlab::analysis {

/// Peak positions of rho+ over a Delta-x scan, one per complete bunching
/// fringe: each maximal run of samples with I_AB > 0 that does not touch
/// the scan boundary contributes the coordinate of its largest rho+.
/// Grouping by the sign of I_AB keeps the small |M| ripple from splitting
/// a fringe into several local maxima.
inline std::vector<double> fringe_peaks(const std::vector<sweep::SweepRecord>& scan, const sweep::GridSpec& grid) {
  std::vector<double> peaks;
  std::size_t i = 0;
  while (i < scan.size()) {
    if (scan[i].correlation.i_ab_exact <= 0.0) {
      ++i;
      continue;
    }
    const std::size_t begin = i;
    std::size_t best = i;
    while (i < scan.size() && scan[i].correlation.i_ab_exact > 0.0) {
      if (scan[i].correlation.rho_plus > scan[best].correlation.rho_plus) best = i;
      ++i;
    }
    if (begin > 0 && i < scan.size()) peaks.push_back(grid.at(best));
  }
  return peaks;
}

/// Mean spacing between first and last peak; 0 with fewer than two peaks.
inline double mean_spacing(const std::vector<double>& peaks) {
  if (peaks.size() < 2) return 0.0;
  return (peaks.back() - peaks.front()) / static_cast<double>(peaks.size() - 1);
}

}  // namespace shutterlab::analysis
