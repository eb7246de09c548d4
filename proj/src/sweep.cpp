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

#include "shutterlab/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "shutterlab/errors.hpp"

namespace shutterlab::sweep {

std::string_view to_string(Axis a) {
  switch (a) {
    case Axis::Time:
      return "time";
    case Axis::DeltaX:
      return "delta_x";
    case Axis::XiCoefficient:
      return "xi";
  }
  return "unknown";
}

double GridSpec::at(std::size_t i) const {
  if (i + 1 >= n_points) return stop;
  return start + (stop - start) * static_cast<double>(i) / static_cast<double>(n_points - 1);
}

std::vector<double> GridSpec::values() const {
  std::vector<double> out(n_points);
  for (std::size_t i = 0; i < n_points; ++i) out[i] = at(i);
  return out;
}

void validate(const GridSpec& g) {
  const std::string name(to_string(g.axis));
  if (!std::isfinite(g.start) || !std::isfinite(g.stop)) throw DomainError(name + " grid: bounds must be finite");
  if (!(g.start < g.stop)) throw DomainError(name + " grid: start must be < stop");
  if (g.n_points < 2) throw DomainError(name + " grid: n_points must be >= 2");
  if (g.axis == Axis::Time && !(g.start > 0.0)) throw DomainError("time grid: start must be > 0");
  if (g.axis == Axis::XiCoefficient && (g.start < 0.0 || g.stop > 1.0)) {
    throw DomainError("xi grid: must lie within [0, 1]");
  }
}

std::size_t ConcurrenceMap::missing_count() const {
  return static_cast<std::size_t>(std::count(values.begin(), values.end(), std::nullopt));
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(threads, std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t block = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * block;
    const std::size_t end = std::min(n, begin + block);
    pool.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

void require_axis(const GridSpec& g, Axis expected) {
  if (g.axis != expected) {
    throw DomainError("expected a " + std::string(to_string(expected)) + " grid, got " +
                      std::string(to_string(g.axis)));
  }
  validate(g);
}

SweepRecord make_record(double coordinate, const SpacetimePoint& p, const PairSpec& s, const MediumConstants& c,
                        const SweepOptions& opts) {
  SweepRecord r;
  r.coordinate = coordinate;
  r.x1 = p.x1;
  r.x2 = p.x2;
  r.t = p.t;
  r.phi = entangle::phi_components(p, s, c);
  r.correlation = entangle::correlation_record(r.phi, p, s, opts.nonbunching_tol);
  r.concurrence_stationary = entangle::wootters_concurrence(s.xi_mag);
  return r;
}

}  // namespace

ConcurrenceMap concurrence_map(const GridSpec& xi_grid, const GridSpec& t_grid, double x1, double x2,
                               const PairSpec& s, const MediumConstants& c, const SweepOptions& opts) {
  require_axis(xi_grid, Axis::XiCoefficient);
  require_axis(t_grid, Axis::Time);
  validate(s);

  ConcurrenceMap map{xi_grid, t_grid, std::vector<std::optional<double>>(xi_grid.n_points * t_grid.n_points)};
  parallel_for(map.values.size(), opts.threads, [&](std::size_t cell) {
    PairSpec cell_spec = s;
    cell_spec.xi_mag = xi_grid.at(cell / t_grid.n_points);
    const SpacetimePoint p{x1, x2, t_grid.at(cell % t_grid.n_points)};
    try {
      map.values[cell] = entangle::transient_concurrence(p, cell_spec, c);
    } catch (const RangeError&) {
      map.values[cell] = std::nullopt;
    }
  });
  return map;
}

std::vector<SweepRecord> time_trace(const GridSpec& t_grid, double x1, double x2, const PairSpec& s,
                                    const MediumConstants& c, const SweepOptions& opts) {
  require_axis(t_grid, Axis::Time);
  validate(s);
  std::vector<SweepRecord> out(t_grid.n_points);
  parallel_for(out.size(), opts.threads,
               [&](std::size_t i) {
                 const double t = t_grid.at(i);
                 out[i] = make_record(t, {x1, x2, t}, s, c, opts);
               });
  return out;
}

std::vector<SweepRecord> dx_scan(const GridSpec& dx_grid, double t, double x1, const PairSpec& s,
                                 const MediumConstants& c, const SweepOptions& opts) {
  require_axis(dx_grid, Axis::DeltaX);
  validate(s);
  if (!(t >= 0.0)) throw DomainError("dx_scan: t must be >= 0");
  std::vector<SweepRecord> out(dx_grid.n_points);
  parallel_for(out.size(), opts.threads,
               [&](std::size_t i) {
                 const double dx = dx_grid.at(i);
                 out[i] = make_record(dx, {x1, x1 + dx, t}, s, c, opts);
               });
  return out;
}

double activation_time(const GridSpec& t_grid, double x1, double x2, const PairSpec& s,
                       const MediumConstants& c, double threshold_frac, const SweepOptions& opts) {
  require_axis(t_grid, Axis::Time);
  validate(s);
  if (!(threshold_frac > 0.0 && threshold_frac < 1.0)) {
    throw DomainError("activation_time: threshold_frac must lie in (0, 1)");
  }

  std::vector<double> conc(t_grid.n_points);
  parallel_for(conc.size(), opts.threads, [&](std::size_t i) {
    conc[i] = entangle::transient_concurrence({x1, x2, t_grid.at(i)}, s, c);
  });

  const double threshold = threshold_frac * entangle::wootters_concurrence(s.xi_mag);
  for (std::size_t i = 1; i < conc.size(); ++i) {
    if (conc[i - 1] < threshold && conc[i] >= threshold) {
      const double t0 = t_grid.at(i - 1);
      const double t1 = t_grid.at(i);
      return t0 + (threshold - conc[i - 1]) / (conc[i] - conc[i - 1]) * (t1 - t0);
    }
  }
  throw NotFoundError("activation_time: transient concurrence never rises through " +
                      std::to_string(threshold) + " on the time grid");
}

}  // namespace shutterlab::sweep
