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

#include "shutterlab/csv.hpp"

#include <cstdio>

namespace shutterlab::csv {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_map(std::ostream& os, const sweep::ConcurrenceMap& map) {
  os << kFormatTag << "\n";
  os << "xi,t_ps,concurrence,status\n";
  for (std::size_t i = 0; i < map.xi_grid.n_points; ++i) {
    const std::string xi = format_number(map.xi_grid.at(i));
    for (std::size_t j = 0; j < map.t_grid.n_points; ++j) {
      const auto& v = map.at(i, j);
      os << xi << ',' << format_number(map.t_grid.at(j)) << ',';
      if (v) {
        os << format_number(*v) << ",ok\n";
      } else {
        os << "nan,range_error\n";
      }
    }
  }
}

namespace {

void write_observables(std::ostream& os, const CorrelationRecord& c) {
  os << format_number(c.rho_plus) << ',' << format_number(c.rho_minus) << ','
     << format_number(c.concurrence_transient) << ',';
}

}  // namespace

void write_trace(std::ostream& os, const std::vector<sweep::SweepRecord>& records) {
  os << kFormatTag << "\n";
  os << "t_ps,rho_plus,rho_minus,concurrence,concurrence_stationary,i_ab_exact,i_ab_approx,classification\n";
  for (const auto& r : records) {
    os << format_number(r.coordinate) << ',';
    write_observables(os, r.correlation);
    os << format_number(r.concurrence_stationary) << ',' << format_number(r.correlation.i_ab_exact) << ','
       << format_number(r.correlation.i_ab_approx) << ',' << to_string(r.correlation.classification) << "\n";
  }
}

void write_scan(std::ostream& os, const std::vector<sweep::SweepRecord>& records) {
  os << kFormatTag << "\n";
  os << "delta_x_nm,rho_plus,rho_minus,concurrence,i_ab_exact,i_ab_approx,classification\n";
  for (const auto& r : records) {
    os << format_number(r.coordinate) << ',';
    write_observables(os, r.correlation);
    os << format_number(r.correlation.i_ab_exact) << ',' << format_number(r.correlation.i_ab_approx) << ','
       << to_string(r.correlation.classification) << "\n";
  }
}

void write_activation(std::ostream& os, double x1, double x2, double threshold_frac, double t_activation) {
  os << kFormatTag << "\n";
  os << "x1_nm,x2_nm,threshold_frac,activation_time_ps\n";
  os << format_number(x1) << ',' << format_number(x2) << ',' << format_number(threshold_frac) << ','
     << format_number(t_activation) << "\n";
}

}  // namespace shutterlab::csv
