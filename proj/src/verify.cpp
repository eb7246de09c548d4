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

#include "shutterlab/verify.hpp"

#include <cmath>
#include <cstring>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

#include "shutterlab/presets.hpp"
#include "shutterlab/sweep.hpp"

namespace shutterlab::cli {
namespace {

struct Tracker {
  double worst = 0.0;
  std::size_t count = 0;
  void observe(double v) {
    worst = std::max(worst, v);
    ++count;
  }
};

std::string describe(const Tracker& t, double limit) {
  std::ostringstream os;
  os << "worst " << std::setprecision(3) << t.worst << " (limit " << limit << ") over " << t.count << " samples";
  return os.str();
}

CheckResult bounded(std::string name, const Tracker& t, double limit) {
  return {std::move(name), t.worst <= limit, describe(t, limit)};
}

// Latest time the checks need: doubles t from 50 ps until the detector is
// at least 100 dimensionless units behind both fronts.
double late_time(double x, const PairSpec& s, const MediumConstants& c) {
  double t = 50.0;
  const double k = std::min(s.alpha, s.beta);
  while (shutter::gamma_arg(x, k, t, c) > -100.0 && t < 1e9) t *= 2.0;
  return t;
}

// Relative identity errors of one record, scaled by the non-interfering
// part |xi|^2 rho_A + |eta|^2 rho_B.
void observe_identities(const sweep::SweepRecord& r, const PairSpec& s, Tracker& decomposition,
                        Tracker& difference, Tracker& schwarz, Tracker& sigma) {
  const auto& c = r.correlation;
  const double base = s.xi_mag * s.xi_mag * std::norm(r.phi.a) + std::norm(s.eta()) * std::norm(r.phi.b);
  const double scale = std::max(base, 1e-300);
  decomposition.observe(std::max(std::abs(c.rho_plus - (base + c.i_ab_exact)),
                                 std::abs(c.rho_minus - (base - c.i_ab_exact))) /
                        scale);
  difference.observe(std::abs(c.rho_plus - c.rho_minus - 2.0 * c.i_ab_exact) / scale);
  schwarz.observe(std::max(0.0, std::abs(c.i_ab_exact) - c.concurrence_transient) / std::max(base, 1e-300));
  const double overlap = entangle::pure_state_concurrence(entangle::dressed_state(r.phi, s));
  sigma.observe(std::abs(overlap - c.concurrence_transient) / std::max(c.concurrence_transient, 1e-300));
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

}  // namespace

std::vector<CheckResult> run_verification(const RunConfig& config) {
  validate(config);
  const MediumConstants c = config.constants();
  const PairSpec& s = config.pair;
  sweep::SweepOptions opts{config.threads, config.nonbunching_tol};
  std::vector<CheckResult> results;

  {
    Tracker t;
    t.observe(std::abs(specfun::faddeyeva_w({0.0, 0.0}) - Complex(1.0, 0.0)));
    results.push_back(bounded("faddeyeva_origin", t, 1e-14));
  }
  {
    Tracker t;
    std::mt19937_64 rng(20240501);
    std::uniform_real_distribution<double> dk(0.1 * s.alpha, 10.0 * s.alpha), dt(1e-3, 10.0);
    for (int i = 0; i < 100; ++i) {
      const double k = dk(rng), time = dt(rng);
      t.observe(std::abs(std::norm(shutter::moshinsky_m(c.kappa() * k * time, k, time, c)) - 0.25));
    }
    results.push_back(bounded("front_value", t, 1e-12));
  }
  const double t_late = late_time(std::max(config.x1, config.x2), s, c);
  {
    Tracker t;
    double limit = 0.0;
    for (double k : {s.alpha, s.beta}) {
      const double gamma = shutter::gamma_arg(config.x1, k, t_late, c);
      // First correction to |M|^2 has amplitude 1/(sqrt(pi)|gamma|).
      limit = std::max(limit, 1.05 / (std::sqrt(std::numbers::pi) * std::abs(gamma)));
      t.observe(std::abs(std::norm(shutter::moshinsky_m(config.x1, k, t_late, c)) - 1.0));
    }
    results.push_back(bounded("stationary_limit", t, std::min(limit, 0.01)));
  }
  {
    Tracker t;
    const double conc = entangle::transient_concurrence({config.x1, config.x2, t_late}, s, c);
    t.observe(std::abs(conc - entangle::wootters_concurrence(s.xi_mag)));
    results.push_back(bounded("concurrence_asymptote", t, 0.02));
  }
  {
    Tracker t;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dg(-500.0, -20.0), dt(0.05, 5.0);
    for (int i = 0; i < 200; ++i) {
      const double time = dt(rng);
      const double x = c.kappa() * s.alpha * time + dg(rng) * std::sqrt(2.0 * c.kappa() * time);
      const Complex exact = shutter::moshinsky_m(x, s.alpha, time, c);
      t.observe(std::abs(shutter::moshinsky_series(x, s.alpha, time, c, 3) - exact) / std::abs(exact));
    }
    results.push_back(bounded("series_consistency", t, 1e-3));
  }

  Tracker decomposition, difference, schwarz, sigma;
  const auto scan = sweep::dx_scan(config.dx_grid, config.t_fixed, config.x1, s, c, opts);
  for (const auto& r : scan) observe_identities(r, s, decomposition, difference, schwarz, sigma);
  std::vector<double> separations{config.x2 - config.x1};
  for (double dx : presets::trace_separations(s)) separations.push_back(dx);
  for (double dx : separations) {
    const auto trace = sweep::time_trace(config.t_grid, config.x1, config.x1 + dx, s, c, opts);
    for (const auto& r : trace) observe_identities(r, s, decomposition, difference, schwarz, sigma);
  }
  {
    Tracker map_sigma;
    const auto map = sweep::concurrence_map(config.xi_grid, config.t_grid, config.x1, config.x2, s, c, opts);
    for (std::size_t i = 0; i < config.xi_grid.n_points; ++i) {
      PairSpec cell = s;
      cell.xi_mag = config.xi_grid.at(i);
      for (std::size_t j = 0; j < config.t_grid.n_points; ++j) {
        if (!map.at(i, j)) continue;
        const SpacetimePoint p{config.x1, config.x2, config.t_grid.at(j)};
        const double overlap =
            entangle::pure_state_concurrence(entangle::dressed_state(entangle::phi_components(p, cell, c), cell));
        map_sigma.observe(std::abs(overlap - *map.at(i, j)) / std::max(*map.at(i, j), 1e-300));
      }
    }
    results.push_back(bounded("density_decomposition", decomposition, 1e-12));
    results.push_back(bounded("density_difference", difference, 1e-12));
    results.push_back(bounded("cauchy_schwarz", schwarz, 1e-12));
    results.push_back(bounded("sigma_yy_concurrence", sigma, 1e-12));
    results.push_back(bounded("sigma_yy_concurrence_map", map_sigma, 1e-12));
  }

  PairSpec symmetric = s;
  symmetric.xi_mag = 1.0 / std::numbers::sqrt2;
  symmetric.delta_theta = 0.0;
  {
    Tracker t;
    for (Statistics st : {Statistics::Boson, Statistics::Fermion}) {
      symmetric.statistics = st;
      for (std::size_t i = 0; i < config.dx_grid.n_points; ++i) {
        const SpacetimePoint p{config.x1, config.x1 + config.dx_grid.at(i), config.t_fixed};
        const Complex forward = entangle::pair_wavefunction(p, symmetric, c);
        const Complex backward = entangle::pair_wavefunction({p.x2, p.x1, p.t}, symmetric, c);
        const PhiComponents phi = entangle::phi_components(p, symmetric, c);
        const double scale = symmetric.xi_mag * std::abs(phi.a) + std::abs(symmetric.eta()) * std::abs(phi.b);
        t.observe(std::abs(backward - symmetric.sign() * forward) / std::max(scale, 1e-300));
      }
    }
    results.push_back(bounded("exchange_symmetry", t, 1e-12));
  }
  {
    Tracker t;
    symmetric.statistics = Statistics::Fermion;
    for (double time : config.t_grid.values()) {
      t.observe(entangle::joint_density({config.x1, config.x1, time}, symmetric, c));
    }
    results.push_back(bounded("pauli_zero", t, 1e-20));
  }
  {
    Tracker t;
    for (double xi : config.xi_grid.values()) {
      if (xi < 0.1) continue;
      PairSpec a = s, b = s;
      a.xi_mag = xi;
      b.xi_mag = a.eta_mag();
      const SpacetimePoint p{config.x1, config.x2, std::max(config.t_fixed, config.t_grid.start)};
      const double ca = entangle::transient_concurrence(p, a, c);
      const double cb = entangle::transient_concurrence(p, b, c);
      t.observe(std::abs(ca - cb) / std::max(ca, 1e-300));
    }
    results.push_back(bounded("xi_symmetry", t, 1e-12));
  }
  {
    const auto serial = sweep::dx_scan(config.dx_grid, config.t_fixed, config.x1, s, c, {1, opts.nonbunching_tol});
    const auto parallel = sweep::dx_scan(config.dx_grid, config.t_fixed, config.x1, s, c, {4, opts.nonbunching_tol});
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < serial.size(); ++i) {
      const auto& a = serial[i].correlation;
      const auto& b = parallel[i].correlation;
      if (!same_bits(a.rho_plus, b.rho_plus) || !same_bits(a.rho_minus, b.rho_minus) ||
          !same_bits(a.concurrence_transient, b.concurrence_transient) || !same_bits(a.i_ab_exact, b.i_ab_exact) ||
          !same_bits(a.i_ab_approx, b.i_ab_approx)) {
        ++mismatches;
      }
    }
    results.push_back({"thread_determinism", mismatches == 0,
                       std::to_string(mismatches) + " of " + std::to_string(serial.size()) +
                           " records differ between 1 and 4 threads"});
  }
  return results;
}

void print_results(std::ostream& os, const std::vector<CheckResult>& results) {
  std::size_t passed = 0;
  for (const auto& r : results) {
    os << std::left << std::setw(28) << r.name << (r.passed ? "PASS  " : "FAIL  ") << r.detail << "\n";
    passed += r.passed;
  }
  os << passed << "/" << results.size() << " checks passed\n";
}

}  // namespace shutterlab::cli
