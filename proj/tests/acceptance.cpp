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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "oracle/faddeyeva_oracle.hpp"
#include "shutterlab/entangle.hpp"
#include "shutterlab/presets.hpp"
#include "shutterlab/shutter.hpp"
#include "shutterlab/specfun.hpp"
#include "shutterlab/sweep.hpp"

using namespace shutterlab;

namespace {

const MediumConstants kElectron = MediumConstants::electron();
const double kMaxEntangled = 1.0 / std::numbers::sqrt2;

struct Outcome {
  bool passed = true;
  std::string detail;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

bool same_bits(const sweep::SweepRecord& a, const sweep::SweepRecord& b) {
  const auto& x = a.correlation;
  const auto& y = b.correlation;
  return same_bits(a.coordinate, b.coordinate) && same_bits(x.rho_plus, y.rho_plus) &&
         same_bits(x.rho_minus, y.rho_minus) && same_bits(x.concurrence_transient, y.concurrence_transient) &&
         same_bits(x.i_ab_exact, y.i_ab_exact) && same_bits(x.i_ab_approx, y.i_ab_approx) &&
         same_bits(a.concurrence_stationary, b.concurrence_stationary) && x.classification == y.classification;
}

Outcome special_function_accuracy() {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const Complex z(-6.0 + 12.0 * i / 19.0, -6.0 + 12.0 * j / 19.0);
      worst = std::max(worst, oracle::rel_error(specfun::faddeyeva_w(z), oracle::faddeyeva_series(z)));
    }
  }
  const double origin = std::abs(specfun::faddeyeva_w({0.0, 0.0}) - 1.0);
  return {worst <= 1e-8 && origin <= 1e-14, fmt("max rel err %.3g on 20x20 grid, |w(0)-1| = %.3g", worst, origin)};
}

Outcome front_value() {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> dk(0.05, 20.0), dt(1e-4, 100.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double k = dk(rng), t = dt(rng);
    const double x = kElectron.kappa() * k * t;
    worst = std::max(worst, std::abs(std::norm(shutter::moshinsky_m(x, k, t, kElectron)) - 0.25));
  }
  return {worst <= 1e-12, fmt("max ||M|^2 - 1/4| = %.3g over 100 (k, t)", worst)};
}

Outcome stationary_limit() {
  const double gamma = shutter::gamma_arg(100.0, 2.896, 50.0, kElectron);
  const double dev = std::abs(std::norm(shutter::moshinsky_m(100.0, 2.896, 50.0, kElectron)) - 1.0);
  return {dev < 0.01, fmt("||M|^2 - 1| = %.4g at gamma = %.1f", dev, gamma)};
}

Outcome concurrence_asymptote() {
  const auto f2 = presets::fig2();
  const double transient = entangle::transient_concurrence({f2.x1, f2.x2, 50.0}, f2.pair, kElectron);
  const double stationary = entangle::wootters_concurrence(f2.pair.xi_mag);
  const double dev = std::abs(transient - stationary);
  return {dev < 0.02, fmt("|C_t - C| = %.4g (C_t = %.6f, C = %.6f)", dev, transient, stationary)};
}

struct IdentityErrors {
  double decomposition = 0.0;
  double cauchy_schwarz = 0.0;
  double sigma_yy = 0.0;
  double exchange = 0.0;
  double pauli = 0.0;
  std::size_t samples = 0;

  double worst() const { return std::max({decomposition, cauchy_schwarz, sigma_yy, exchange, pauli}); }

  void observe(const PhiComponents& phi, const PairSpec& s, const CorrelationRecord& c) {
    const double base = s.xi_mag * s.xi_mag * std::norm(phi.a) + std::norm(s.eta()) * std::norm(phi.b);
    const double scale = std::max(base, 1e-300);
    decomposition = std::max({decomposition, std::abs(c.rho_plus - (base + c.i_ab_exact)) / scale,
                              std::abs(c.rho_minus - (base - c.i_ab_exact)) / scale,
                              std::abs(c.rho_plus - c.rho_minus - 2.0 * c.i_ab_exact) / scale});
    cauchy_schwarz = std::max(cauchy_schwarz, (std::abs(c.i_ab_exact) - c.concurrence_transient) / scale);
    const double overlap = entangle::pure_state_concurrence(entangle::dressed_state(phi, s));
    sigma_yy = std::max(sigma_yy,
                        std::abs(overlap - c.concurrence_transient) / std::max(c.concurrence_transient, 1e-300));
    ++samples;
  }

  void observe(const sweep::SweepRecord& r, const PairSpec& s) { observe(r.phi, r.correlation, s); }
  void observe(const PhiComponents& phi, const CorrelationRecord& c, const PairSpec& s) { observe(phi, s, c); }

  void observe_symmetry(const SpacetimePoint& p, PairSpec s) {
    s.xi_mag = kMaxEntangled;
    s.delta_theta = 0.0;
    for (Statistics st : {Statistics::Boson, Statistics::Fermion}) {
      s.statistics = st;
      const PhiComponents phi = entangle::phi_components(p, s, kElectron);
      const double scale = std::max(s.xi_mag * std::abs(phi.a) + std::abs(s.eta()) * std::abs(phi.b), 1e-300);
      const Complex forward = entangle::pair_wavefunction(phi, s);
      const Complex backward = entangle::pair_wavefunction({p.x2, p.x1, p.t}, s, kElectron);
      exchange = std::max(exchange, std::abs(backward - s.sign() * forward) / scale);
    }
    s.statistics = Statistics::Fermion;
    const SpacetimePoint coincident{p.x1, p.x1, p.t};
    const PhiComponents phi = entangle::phi_components(coincident, s, kElectron);
    const double scale = std::max(std::norm(phi.a) + std::norm(phi.b), 1e-300);
    pauli = std::max(pauli, entangle::joint_density(coincident, s, kElectron) / scale);
  }
};

Outcome identity_suite() {
  IdentityErrors e;
  for (const auto& f : {presets::fig1(), presets::fig2()}) {
    const sweep::SweepOptions opts{0};
    for (const auto& r : sweep::dx_scan(f.dx_grid, f.t_fixed, f.x1, f.pair, kElectron, opts)) {
      e.observe(r, f.pair);
      e.observe_symmetry({r.x1, r.x2, r.t}, f.pair);
    }
    std::vector<double> separations{f.x2 - f.x1};
    for (double dx : presets::trace_separations(f.pair)) separations.push_back(dx);
    for (double dx : separations) {
      for (const auto& r : sweep::time_trace(f.t_grid, f.x1, f.x1 + dx, f.pair, kElectron, opts)) {
        e.observe(r, f.pair);
        e.observe_symmetry({r.x1, r.x2, r.t}, f.pair);
      }
    }
    for (double xi : f.xi_grid.values()) {
      PairSpec s = f.pair;
      s.xi_mag = xi;
      for (double t : f.t_grid.values()) {
        const SpacetimePoint p{f.x1, f.x2, t};
        const PhiComponents phi = entangle::phi_components(p, s, kElectron);
        e.observe(phi, s, entangle::correlation_record(phi, p, s));
      }
    }
  }
  return {e.worst() <= 1e-12,
          fmt("decomposition %.2g, |I|<=C %.2g, sigma_yy %.2g", e.decomposition, e.cauchy_schwarz, e.sigma_yy) +
              fmt(", exchange %.2g, Pauli %.2g", e.exchange, e.pauli) + ", " + std::to_string(e.samples) +
              " samples"};
}

Outcome fig1_structure() {
  const auto f1 = presets::fig1();
  const sweep::GridSpec cut{sweep::Axis::Time, f1.t_fixed, f1.t_fixed + 1.0, 2};
  const auto map = sweep::concurrence_map(f1.xi_grid, cut, f1.x1, f1.x2, f1.pair, kElectron, {0});
  const std::size_t mid = f1.xi_grid.n_points / 2;
  const double ratio_ref = *map.at(mid, 0) / entangle::wootters_concurrence(f1.xi_grid.at(mid));
  double worst = 0.0;
  std::size_t best = 0;
  for (std::size_t i = 0; i < f1.xi_grid.n_points; ++i) {
    const double value = *map.at(i, 0);
    if (value > *map.at(best, 0)) best = i;
    const double w = entangle::wootters_concurrence(f1.xi_grid.at(i));
    if (w == 0.0) {
      worst = std::max(worst, std::abs(value) / ratio_ref);
      continue;
    }
    worst = std::max(worst, std::abs(value / w - ratio_ref) / ratio_ref);
  }
  const double offset = std::abs(f1.xi_grid.at(best) - kMaxEntangled);
  return {worst < 1e-10 && offset <= f1.xi_grid.step(),
          fmt("proportionality dev %.3g, argmax xi = %.4f (step %.4f)", worst, f1.xi_grid.at(best),
              f1.xi_grid.step())};
}

Outcome activation() {
  const auto f2 = presets::fig2();
  const double ta =
      sweep::activation_time(f2.t_grid, f2.x1, f2.x1 + 1.0, f2.pair, kElectron, f2.threshold_frac, {0});
  return {ta >= 0.2 && ta <= 0.4, fmt("t_a = %.4f ps at %.0f%% threshold", ta, 100.0 * f2.threshold_frac)};
}

Outcome fringe_signature() {
  const auto f2 = presets::fig2();
  const auto scan = sweep::dx_scan(f2.dx_grid, 50.0, f2.x1, f2.pair, kElectron, {0});
  const double period = 2.0 * std::numbers::pi / f2.pair.delta_k();
  const double spacing = analysis::mean_spacing(analysis::fringe_peaks(scan, f2.dx_grid));
  double hi = -1.0, lo = 1e300;
  for (const auto& r : scan) {
    hi = std::max(hi, r.correlation.rho_plus);
    lo = std::min(lo, r.correlation.rho_plus);
  }
  const bool spacing_ok = std::abs(spacing - period) <= f2.dx_grid.step();
  const bool max_ok = hi >= 1.9 && hi <= 2.0;
  const bool min_ok = lo >= 0.0 && lo <= 0.1;
  return {spacing_ok && max_ok && min_ok,
          fmt("spacing %.3f nm vs %.3f nm", spacing, period) + fmt(", max rho+ %.6f, min rho+ %.3g", hi, lo)};
}

Outcome approximation_quality() {
  constexpr double kFrozen = 0.16696229332573986;
  const auto f2 = presets::fig2();
  const auto scan = sweep::dx_scan(f2.dx_grid, f2.t_fixed, f2.x1, f2.pair, kElectron, {0});
  double worst = 0.0;
  for (const auto& r : scan) worst = std::max(worst, std::abs(r.correlation.i_ab_exact - r.correlation.i_ab_approx));
  return {worst <= kFrozen + 1e-12, fmt("max |I_exact - I_approx| = %.17g (bound %.17g)", worst, kFrozen)};
}

Outcome determinism() {
  const auto f1 = presets::fig1();
  const auto f2 = presets::fig2();
  std::size_t compared = 0, mismatched = 0;
  const auto serial_scan = sweep::dx_scan(f2.dx_grid, f2.t_fixed, f2.x1, f2.pair, kElectron, {1});
  const auto serial_trace = sweep::time_trace(f2.t_grid, f2.x1, f2.x2, f2.pair, kElectron, {1});
  const auto serial_map = sweep::concurrence_map(f1.xi_grid, f1.t_grid, f1.x1, f1.x2, f1.pair, kElectron, {1});
  for (unsigned n : {2u, 3u, 8u}) {
    const auto scan = sweep::dx_scan(f2.dx_grid, f2.t_fixed, f2.x1, f2.pair, kElectron, {n});
    for (std::size_t i = 0; i < scan.size(); ++i, ++compared) mismatched += !same_bits(scan[i], serial_scan[i]);
    const auto trace = sweep::time_trace(f2.t_grid, f2.x1, f2.x2, f2.pair, kElectron, {n});
    for (std::size_t i = 0; i < trace.size(); ++i, ++compared) mismatched += !same_bits(trace[i], serial_trace[i]);
    const auto map = sweep::concurrence_map(f1.xi_grid, f1.t_grid, f1.x1, f1.x2, f1.pair, kElectron, {n});
    for (std::size_t i = 0; i < map.values.size(); ++i, ++compared) {
      mismatched += map.values[i].has_value() != serial_map.values[i].has_value() ||
                    (map.values[i] && !same_bits(*map.values[i], *serial_map.values[i]));
    }
  }
  return {mismatched == 0, std::to_string(mismatched) + " of " + std::to_string(compared) +
                               " outputs differ from the 1-thread run (2, 3, 8 threads)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"special-function accuracy", special_function_accuracy},
      {"front value", front_value},
      {"stationary limit", stationary_limit},
      {"concurrence asymptote", concurrence_asymptote},
      {"identity suite", identity_suite},
      {"concurrence map structure", fig1_structure},
      {"activation time", activation},
      {"fringe signature", fringe_signature},
      {"approximation quality", approximation_quality},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.passed;
    std::printf("%s  %2zu %-28s %s [%.2fs]\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), seconds);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
