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

#include "shutterlab/shutter.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "shutterlab/errors.hpp"

namespace shutterlab {

MediumConstants::MediumConstants(double hbar_ev_ps, double mass_ev_ps2_per_nm2)
    : hbar_(hbar_ev_ps), mass_(mass_ev_ps2_per_nm2) {
  if (!(std::isfinite(hbar_) && hbar_ > 0.0)) {
    throw DomainError("MediumConstants: hbar must be finite and positive");
  }
  if (!(std::isfinite(mass_) && mass_ > 0.0)) {
    throw DomainError("MediumConstants: mass must be finite and positive");
  }
  if (!(std::isfinite(kappa()) && kappa() > 0.0)) {
    throw DomainError("MediumConstants: hbar/mass must be finite and positive");
  }
}

MediumConstants MediumConstants::electron() {
  constexpr double hbar = 6.582119569e-4;          // eV ps
  constexpr double rest_energy = 510998.95;        // eV
  constexpr double light_speed = 2.99792458e5;     // nm / ps
  return MediumConstants(hbar, rest_energy / (light_speed * light_speed));
}

namespace shutter {
namespace {

constexpr double kInvSqrtPi = std::numbers::inv_sqrtpi;

void require_positive_time(double t_ps, const char* where) {
  if (!(t_ps > 0.0)) {
    throw DomainError(std::string(where) + ": t must be > 0 (got " + std::to_string(t_ps) + ")");
  }
}

Complex unit_phase(double phase) { return {std::cos(phase), std::sin(phase)}; }

}  // namespace

double gamma_arg(double x_nm, double k_per_nm, double t_ps, const MediumConstants& c) {
  require_positive_time(t_ps, "gamma_arg");
  const double kappa = c.kappa();
  return (x_nm - kappa * k_per_nm * t_ps) * std::sqrt(1.0 / (2.0 * kappa * t_ps));
}

Complex y_arg(double gamma) {
  const double r = std::numbers::sqrt2 / 2.0;
  return {r * gamma, -r * gamma};
}

Complex moshinsky_m(double x_nm, double k_per_nm, double t_ps, const MediumConstants& c) {
  if (t_ps < 0.0 || std::isnan(t_ps)) {
    throw DomainError("moshinsky_m: t must be >= 0");
  }
  if (t_ps == 0.0) {
    if (x_nm < 0.0) return unit_phase(k_per_nm * x_nm);
    if (x_nm == 0.0) return {0.5, 0.0};
    return {0.0, 0.0};
  }
  const double gamma = gamma_arg(x_nm, k_per_nm, t_ps, c);
  const Complex prefactor = 0.5 * unit_phase(x_nm * x_nm / (2.0 * c.kappa() * t_ps));
  return prefactor * specfun::erfc_scaled(y_arg(gamma));
}

Complex moshinsky_series(double x_nm, double k_per_nm, double t_ps, const MediumConstants& c,
                         int n_terms) {
  if (n_terms < 1 || n_terms > 3) {
    throw DomainError("moshinsky_series: n_terms must be 1, 2 or 3");
  }
  const double gamma = gamma_arg(x_nm, k_per_nm, t_ps, c);
  if (gamma == 0.0) {
    throw DomainError("moshinsky_series: expansion is singular on the classical front");
  }
  const double free_phase = x_nm * x_nm / (2.0 * c.kappa() * t_ps);
  if (n_terms == 1) return unit_phase(free_phase - gamma * gamma);

  Complex bracket = 2.0 * unit_phase(-gamma * gamma);
  bracket += unit_phase(std::numbers::pi / 4.0) * (kInvSqrtPi / gamma);
  if (n_terms == 3) {
    bracket -= unit_phase(3.0 * std::numbers::pi / 4.0) * (0.5 * kInvSqrtPi / (gamma * gamma * gamma));
  }
  return 0.5 * unit_phase(free_phase) * bracket;
}

Complex stationary_amplitude(double x_nm, double k_per_nm, double t_ps, const MediumConstants& c) {
  return unit_phase(k_per_nm * x_nm - 0.5 * c.kappa() * k_per_nm * k_per_nm * t_ps);
}

}  // namespace shutter
}  // namespace shutterlab
