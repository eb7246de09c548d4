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

#include "shutterlab/entangle.hpp"

#include <algorithm>
#include <cmath>

#include "shutterlab/errors.hpp"

namespace shutterlab {

std::string_view to_string(Statistics s) {
  return s == Statistics::Boson ? "boson" : "fermion";
}

std::string_view to_string(Correlation c) {
  switch (c) {
    case Correlation::Bunching:
      return "bunching";
    case Correlation::NonBunching:
      return "non_bunching";
    case Correlation::AntiBunching:
      return "anti_bunching";
  }
  return "unknown";
}

double PairSpec::eta_mag() const {
  return std::sqrt((1.0 - xi_mag) * (1.0 + xi_mag));
}

Complex PairSpec::xi() const {
  if (delta_theta == 0.0) return {xi_mag, 0.0};
  return std::polar(xi_mag, delta_theta);
}

void validate(const PairSpec& s) {
  if (!(std::isfinite(s.alpha) && s.alpha > 0.0)) throw DomainError("alpha must be finite and > 0");
  if (!(std::isfinite(s.beta) && s.beta > 0.0)) throw DomainError("beta must be finite and > 0");
  if (s.alpha == s.beta) throw DomainError("alpha and beta must differ");
  if (!(s.xi_mag >= 0.0 && s.xi_mag <= 1.0)) throw DomainError("xi_mag must lie in [0, 1]");
  if (!std::isfinite(s.delta_theta)) throw DomainError("delta_theta must be finite");
}

namespace entangle {

PhiComponents phi_components(const SpacetimePoint& p, const PairSpec& s, const MediumConstants& c) {
  const Complex m1a = shutter::moshinsky_m(p.x1, s.alpha, p.t, c);
  const Complex m2b = shutter::moshinsky_m(p.x2, s.beta, p.t, c);
  const Complex m1b = shutter::moshinsky_m(p.x1, s.beta, p.t, c);
  const Complex m2a = shutter::moshinsky_m(p.x2, s.alpha, p.t, c);
  return {m1a * m2b, m1b * m2a};
}

Complex pair_wavefunction(const PhiComponents& phi, const PairSpec& s) {
  return s.xi() * phi.a + s.sign() * (s.eta() * phi.b);
}

Complex pair_wavefunction(const SpacetimePoint& p, const PairSpec& s, const MediumConstants& c) {
  return pair_wavefunction(phi_components(p, s, c), s);
}

double joint_density(const PhiComponents& phi, const PairSpec& s) {
  return std::norm(pair_wavefunction(phi, s));
}

double joint_density(const SpacetimePoint& p, const PairSpec& s, const MediumConstants& c) {
  return joint_density(phi_components(p, s, c), s);
}

double joint_density_decomposed(const PhiComponents& phi, const PairSpec& s) {
  const double xi2 = s.xi_mag * s.xi_mag;
  const double eta2 = (1.0 - s.xi_mag) * (1.0 + s.xi_mag);
  return xi2 * std::norm(phi.a) + eta2 * std::norm(phi.b) + s.sign() * interference_exact(phi, s);
}

double joint_density_decomposed(const SpacetimePoint& p, const PairSpec& s, const MediumConstants& c) {
  return joint_density_decomposed(phi_components(p, s, c), s);
}

double wootters_concurrence(double xi_mag) {
  if (!(xi_mag >= 0.0 && xi_mag <= 1.0)) {
    throw DomainError("wootters_concurrence: |xi| must lie in [0, 1]");
  }
  return 2.0 * xi_mag * std::sqrt((1.0 - xi_mag) * (1.0 + xi_mag));
}

double transient_concurrence(const PhiComponents& phi, const PairSpec& s) {
  return wootters_concurrence(s.xi_mag) * std::abs(phi.a) * std::abs(phi.b);
}

double transient_concurrence(const SpacetimePoint& p, const PairSpec& s, const MediumConstants& c) {
  return transient_concurrence(phi_components(p, s, c), s);
}

TwoQubitState dressed_state(const PhiComponents& phi, const PairSpec& s) {
  return {Complex(), s.xi() * phi.a, s.sign() * (s.eta() * phi.b), Complex()};
}

double pure_state_concurrence(const TwoQubitState& psi) {
  // sigma_y (x) sigma_y in the computational basis.
  static constexpr std::array<std::array<double, 4>, 4> kSyy{{
      {0.0, 0.0, 0.0, -1.0},
      {0.0, 0.0, 1.0, 0.0},
      {0.0, 1.0, 0.0, 0.0},
      {-1.0, 0.0, 0.0, 0.0},
  }};
  // <psi*| has components conj(conj(psi_i)) = psi_i.
  Complex overlap;
  for (std::size_t i = 0; i < 4; ++i) {
    Complex row;
    for (std::size_t j = 0; j < 4; ++j) row += kSyy[i][j] * psi[j];
    overlap += psi[i] * row;
  }
  return std::abs(overlap);
}

double interference_exact(const PhiComponents& phi, const PairSpec& s) {
  Complex cross = phi.a * std::conj(phi.b);
  if (s.delta_theta != 0.0) cross *= std::polar(1.0, s.delta_theta);
  return 2.0 * s.xi_mag * s.eta_mag() * cross.real();
}

double interference_exact(const SpacetimePoint& p, const PairSpec& s, const MediumConstants& c) {
  return interference_exact(phi_components(p, s, c), s);
}

double interference_approx(const PhiComponents& phi, const SpacetimePoint& p, const PairSpec& s) {
  return transient_concurrence(phi, s) * std::cos(s.delta_k() * p.delta_x());
}

double interference_approx(const SpacetimePoint& p, const PairSpec& s, const MediumConstants& c) {
  return interference_approx(phi_components(p, s, c), p, s);
}

double joint_density_approx(const PhiComponents& phi, const SpacetimePoint& p, const PairSpec& s) {
  const double rho_a = std::norm(phi.a);
  const double rho_b = std::norm(phi.b);
  const double xi = s.xi_mag;
  const double eta = s.eta_mag();
  return xi * xi * rho_a + eta * eta * rho_b +
         s.sign() * 2.0 * xi * eta * std::sqrt(rho_a * rho_b) * std::cos(s.delta_k() * p.delta_x());
}

double joint_density_approx(const SpacetimePoint& p, const PairSpec& s, const MediumConstants& c) {
  return joint_density_approx(phi_components(p, s, c), p, s);
}

double asymptotic_density(double delta_x_nm, const PairSpec& s) {
  return 1.0 + s.sign() * wootters_concurrence(s.xi_mag) * std::cos(s.delta_k() * delta_x_nm);
}

Correlation classify_correlation(double i_ab, Statistics statistics, double tol) {
  if (!(tol >= 0.0)) throw DomainError("classify_correlation: tol must be >= 0");
  if (std::abs(i_ab) <= tol) return Correlation::NonBunching;
  const bool positive = i_ab > 0.0;
  const bool bunching = statistics == Statistics::Boson ? positive : !positive;
  return bunching ? Correlation::Bunching : Correlation::AntiBunching;
}

double default_nonbunching_tol(double rho_plus, double rho_minus) {
  return 1e-12 * std::max({rho_plus, rho_minus, 1.0});
}

CorrelationRecord correlation_record(const PhiComponents& phi, const SpacetimePoint& p, const PairSpec& s,
                                     double tol) {
  PairSpec boson = s;
  boson.statistics = Statistics::Boson;
  PairSpec fermion = s;
  fermion.statistics = Statistics::Fermion;

  CorrelationRecord r;
  r.rho_plus = joint_density(phi, boson);
  r.rho_minus = joint_density(phi, fermion);
  r.concurrence_transient = transient_concurrence(phi, s);
  r.i_ab_exact = interference_exact(phi, s);
  r.i_ab_approx = interference_approx(phi, p, s);
  const double band = tol < 0.0 ? default_nonbunching_tol(r.rho_plus, r.rho_minus) : tol;
  r.classification = classify_correlation(r.i_ab_exact, s.statistics, band);
  return r;
}

CorrelationRecord correlation_record(const SpacetimePoint& p, const PairSpec& s, const MediumConstants& c,
                                     double tol) {
  return correlation_record(phi_components(p, s, c), p, s, tol);
}

}  // namespace entangle
}  // namespace shutterlab
