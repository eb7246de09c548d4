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

#include "shutterlab/specfun.hpp"

namespace shutterlab {

/// Physical constants fixing the kinematic scale kappa = hbar / mass.
///
/// Units: hbar in eV*ps, mass in eV*ps^2/nm^2, so kappa is in nm^2/ps,
/// lengths in nm, wavenumbers in 1/nm and times in ps.
class MediumConstants {
 public:
  /// Throws DomainError unless both values are finite and positive.
  MediumConstants(double hbar_ev_ps, double mass_ev_ps2_per_nm2);

  /// Free electron: hbar = 6.582119569e-4 eV ps, m c^2 = 510998.95 eV.
  static MediumConstants electron();

  double hbar() const noexcept { return hbar_; }
  double mass() const noexcept { return mass_; }
  double kappa() const noexcept { return hbar_ / mass_; }

  friend bool operator==(const MediumConstants&, const MediumConstants&) = default;

 private:
  double hbar_;
  double mass_;
};

namespace shutter {

/// Dimensionless distance from the classical front x = kappa k t,
/// gamma = (x - kappa k t) / sqrt(2 kappa t). Negative behind the front.
/// Throws DomainError for t <= 0.
double gamma_arg(double x_nm, double k_per_nm, double t_ps, const MediumConstants& c);

/// y = exp(-i pi/4) gamma.
Complex y_arg(double gamma);

/// Transient (Moshinsky) function for a shutter at x = 0 opened at t = 0:
///   M = 1/2 exp(i x^2 / (2 kappa t)) w(i y).
/// At t = 0 it returns the initial condition exp(ikx) Theta(-x), with the
/// jump at x = 0 resolved to 1/2. Throws DomainError for t < 0 and
/// propagates RangeError from the Faddeyeva evaluation.
Complex moshinsky_m(double x_nm, double k_per_nm, double t_ps, const MediumConstants& c);

/// Asymptotic expansion of M behind the front, truncated after `n_terms`
/// (1, 2 or 3) terms of
///   M ~ 1/2 exp(i x^2/(2 kappa t)) [2 exp(-i gamma^2) + e^{i pi/4}/(sqrt(pi) gamma)
///                                   - e^{i 3pi/4}/(2 sqrt(pi) gamma^3) + ...].
/// n_terms = 1 is the pure-phase approximation exp(i(x^2/(2 kappa t) - gamma^2)).
/// Accuracy statements hold for gamma < 0; ahead of the front the
/// expansion is not valid and the result is returned as-is.
/// Throws DomainError for t <= 0, gamma == 0 or n_terms outside {1, 2, 3}.
Complex moshinsky_series(double x_nm, double k_per_nm, double t_ps, const MediumConstants& c,
                         int n_terms);

/// Long-time limit exp(ikx) exp(-i kappa k^2 t / 2).
Complex stationary_amplitude(double x_nm, double k_per_nm, double t_ps, const MediumConstants& c);

}  // namespace shutter
}  // namespace shutterlab
