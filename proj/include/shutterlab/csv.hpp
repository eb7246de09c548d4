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

#include <ostream>
#include <string>
#include <vector>

#include "shutterlab/sweep.hpp"

namespace shutterlab::csv {

/// First line of every file written by this module.
inline constexpr const char* kFormatTag = "# shutterlab v1";

/// Shortest text that round-trips a double exactly (17 significant digits).
std::string format_number(double v);

/// Columns: xi,t_ps,concurrence,status. Missing cells print concurrence as
/// nan with status range_error.
void write_map(std::ostream& os, const sweep::ConcurrenceMap& map);

/// Columns: t_ps,rho_plus,rho_minus,concurrence,concurrence_stationary,
/// i_ab_exact,i_ab_approx,classification.
void write_trace(std::ostream& os, const std::vector<sweep::SweepRecord>& records);

/// Columns: delta_x_nm,rho_plus,rho_minus,concurrence,i_ab_exact,
/// i_ab_approx,classification.
void write_scan(std::ostream& os, const std::vector<sweep::SweepRecord>& records);

/// Columns: x1_nm,x2_nm,threshold_frac,activation_time_ps.
void write_activation(std::ostream& os, double x1, double x2, double threshold_frac, double t_activation);

}  // namespace shutterlab::csv
