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

#include "shutterlab/shutter.hpp"

namespace shutterlab {

enum class Statistics { Boson, Fermion };

/// Table I labels for the sign of the interference term.
enum class Correlation { Bunching, NonBunching, AntiBunching };

std::string_view to_string(Statistics s);
std::string_view to_string(Correlation c);

/// Two-mode entangled pair xi Phi_A +/- eta Phi_B.
///
/// Only |xi| and the relative phase delta_theta = arg(xi) - arg(eta) are
/// stored; eta is taken real and |eta| = sqrt(1 - |xi|^2).
struct PairSpec {
  double alpha = 0.0;        // 1/nm
  double beta = 0.0;         // 1/nm
  double xi_mag = 0.0;       // in [0, 1]
  double delta_theta = 0.0;  // rad
  Statistics statistics = Statistics::Boson;

  double eta_mag() const;
  Complex xi() const;
  Complex eta() const { return {eta_mag(), 0.0}; }
  double delta_k() const { return beta - alpha; }
  double sign() const { return statistics == Statistics::Boson ? 1.0 : -1.0; }

  friend bool operator==(const PairSpec&, const PairSpec&) = default;
};

/// Throws DomainError unless alpha, beta are finite and positive,
/// alpha != beta, and 0 <= xi_mag <= 1.
void validate(const PairSpec& s);

/// Detector positions (nm) and time (ps).
struct SpacetimePoint {
  double x1 = 0.0;
  double x2 = 0.0;
  double t = 0.0;

  double delta_x() const { return x2 - x1; }
};

/// Phi_A = Psi_alpha(x1) Psi_beta(x2), Phi_B = Psi_beta(x1) Psi_alpha(x2).
struct PhiComponents {
  Complex a;
  Complex b;
};

/// All observables of one detector configuration.
struct CorrelationRecord {
  double rho_plus = 0.0;
  double rho_minus = 0.0;
  double concurrence_transient = 0.0;
  double i_ab_exact = 0.0;
  double i_ab_approx = 0.0;
  Correlation classification = Correlation::NonBunching;
};

namespace entangle {

/// Amplitudes of the dressed two-qubit state in the order |00>, |01>, |10>, |11>.
using TwoQubitState = std::array<Complex, 4>;

PhiComponents phi_components(const SpacetimePoint& p, const PairSpec& s, const MediumConstants& c);

/// xi Phi_A + eta Phi_B for bosons, xi Phi_A - eta Phi_B for fermions.
Complex pair_wavefunction(const PhiComponents& phi, const PairSpec& s);
Complex pair_wavefunction(const SpacetimePoint& p, const PairSpec& s, const MediumConstants& c);

/// |pair_wavefunction|^2 for the statistics in `s`.
double joint_density(const PhiComponents& phi, const PairSpec& s);
double joint_density(const SpacetimePoint& p, const PairSpec& s, const MediumConstants& c);

/// |xi|^2 rho_A + |eta|^2 rho_B +/- I_AB; equal to joint_density up to rounding.
double joint_density_decomposed(const PhiComponents& phi, const PairSpec& s);
double joint_density_decomposed(const SpacetimePoint& p, const PairSpec& s, const MediumConstants& c);

/// Pure-state concurrence 2|xi| sqrt(1 - |xi|^2). Throws DomainError
/// outside [0, 1].
double wootters_concurrence(double xi_mag);

/// C(psi) |Phi_A| |Phi_B|.
double transient_concurrence(const PhiComponents& phi, const PairSpec& s);
double transient_concurrence(const SpacetimePoint& p, const PairSpec& s, const MediumConstants& c);

/// The dressed state xi Phi_A |01> +/- eta Phi_B |10>.
TwoQubitState dressed_state(const PhiComponents& phi, const PairSpec& s);

/// |<psi*| sigma_y (x) sigma_y |psi>| by explicit matrix-vector product.
double pure_state_concurrence(const TwoQubitState& psi);

/// Interference term 2|xi eta| Re(Phi_A conj(Phi_B) e^{i delta_theta}), which is
/// C(Psi) cos(dphi + dtheta) without extracting any phase angle.
double interference_exact(const PhiComponents& phi, const PairSpec& s);
double interference_exact(const SpacetimePoint& p, const PairSpec& s, const MediumConstants& c);

/// C(Psi) cos(delta_k delta_x). Assumes delta_theta = 0.
double interference_approx(const PhiComponents& phi, const SpacetimePoint& p, const PairSpec& s);
double interference_approx(const SpacetimePoint& p, const PairSpec& s, const MediumConstants& c);

/// |xi|^2 rho_A + |eta|^2 rho_B +/- 2|xi eta| sqrt(rho_A rho_B) cos(delta_k delta_x).
double joint_density_approx(const PhiComponents& phi, const SpacetimePoint& p, const PairSpec& s);
double joint_density_approx(const SpacetimePoint& p, const PairSpec& s, const MediumConstants& c);

/// Stationary fringe law 1 +/- C(psi) cos(delta_k delta_x).
double asymptotic_density(double delta_x_nm, const PairSpec& s);

/// Bosons: I > tol bunching, I < -tol anti-bunching; fermions reversed.
/// |I| <= tol is non-bunching. Throws DomainError for negative tol.
Correlation classify_correlation(double i_ab, Statistics statistics, double tol);

/// 1e-12 * max(rho_plus, rho_minus, 1).
double default_nonbunching_tol(double rho_plus, double rho_minus);

/// Every observable at once from a single set of Phi evaluations.
/// A negative `tol` selects default_nonbunching_tol.
CorrelationRecord correlation_record(const PhiComponents& phi, const SpacetimePoint& p, const PairSpec& s,
                                     double tol = -1.0);
CorrelationRecord correlation_record(const SpacetimePoint& p, const PairSpec& s, const MediumConstants& c,
                                     double tol = -1.0);

}  // namespace entangle
}  // namespace shutterlab
