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

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "shutterlab/entangle.hpp"

namespace shutterlab::sweep {

enum class Axis { Time, DeltaX, XiCoefficient };

std::string_view to_string(Axis a);

/// Uniform grid of n_points samples from start to stop inclusive.
///
/// Sample i is start + (stop - start) * i / (n - 1), with the last sample
/// pinned to stop. Refining n -> 2n - 1 reproduces every coarse sample bit
/// for bit at the even indices.
struct GridSpec {
  Axis axis = Axis::Time;
  double start = 0.0;
  double stop = 1.0;
  std::size_t n_points = 2;

  double at(std::size_t i) const;
  std::vector<double> values() const;
  double step() const { return (stop - start) / static_cast<double>(n_points - 1); }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Throws DomainError unless start < stop (both finite) and n_points >= 2.
/// Time grids must additionally start above 0 and XiCoefficient grids must
/// stay within [0, 1].
void validate(const GridSpec& g);

struct SweepOptions {
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Non-bunching band for the classification; negative selects the
  /// default 1e-12 * max(rho+, rho-, 1).
  double nonbunching_tol = -1.0;
};

/// One sampled configuration with every observable.
struct SweepRecord {
  double coordinate = 0.0;  // value on the swept axis (t or delta x)
  double x1 = 0.0;
  double x2 = 0.0;
  double t = 0.0;
  PhiComponents phi;
  CorrelationRecord correlation;
  double concurrence_stationary = 0.0;
};

/// Transient concurrence over (xi, t), row-major with xi as the slow index.
/// Cells whose evaluation raised a RangeError hold std::nullopt.
struct ConcurrenceMap {
  GridSpec xi_grid;
  GridSpec t_grid;
  std::vector<std::optional<double>> values;

  const std::optional<double>& at(std::size_t xi_index, std::size_t t_index) const {
    return values[xi_index * t_grid.n_points + t_index];
  }
  std::size_t missing_count() const;
};

/// Runs fn(i) for i in [0, n) on up to `threads` workers, in contiguous
/// index blocks. fn must only write to storage owned by index i. The first
/// exception thrown by any worker is rethrown after all workers join.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

/// Fixed detectors (x1, x2); alpha, beta and delta_theta from `s`, xi from
/// the grid. The stationary factor |Phi_A Phi_B| is evaluated per cell.
ConcurrenceMap concurrence_map(const GridSpec& xi_grid, const GridSpec& t_grid, double x1, double x2,
                               const PairSpec& s, const MediumConstants& c, const SweepOptions& opts = {});

/// Records at fixed (x1, x2) for every t on the grid.
std::vector<SweepRecord> time_trace(const GridSpec& t_grid, double x1, double x2, const PairSpec& s,
                                    const MediumConstants& c, const SweepOptions& opts = {});

/// Records at fixed t for x2 = x1 + dx over the grid.
std::vector<SweepRecord> dx_scan(const GridSpec& dx_grid, double t, double x1, const PairSpec& s,
                                 const MediumConstants& c, const SweepOptions& opts = {});

/// First upward crossing of the transient concurrence through
/// threshold_frac * C(psi) on the time grid, linearly interpolated between
/// the bracketing samples. Throws NotFoundError when no sample pair
/// brackets the threshold from below, DomainError for threshold_frac
/// outside (0, 1).
double activation_time(const GridSpec& t_grid, double x1, double x2, const PairSpec& s,
                       const MediumConstants& c, double threshold_frac = 0.05,
                       const SweepOptions& opts = {});

}  // namespace shutterlab::sweep
