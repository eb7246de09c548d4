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

#include "shutterlab/run.hpp"

#include <fstream>

#include "shutterlab/csv.hpp"
#include "shutterlab/errors.hpp"
#include "shutterlab/verify.hpp"

namespace shutterlab::cli {
namespace {

void emit(const RunConfig& config, std::ostream& os) {
  const MediumConstants c = config.constants();
  const sweep::SweepOptions opts{config.threads, config.nonbunching_tol};
  switch (config.mode) {
    case Mode::MapConcurrence:
      csv::write_map(os, sweep::concurrence_map(config.xi_grid, config.t_grid, config.x1, config.x2, config.pair, c,
                                                opts));
      break;
    case Mode::TraceTime:
      csv::write_trace(os, sweep::time_trace(config.t_grid, config.x1, config.x2, config.pair, c, opts));
      break;
    case Mode::ScanDx:
      csv::write_scan(os, sweep::dx_scan(config.dx_grid, config.t_fixed, config.x1, config.pair, c, opts));
      break;
    case Mode::Activation:
      csv::write_activation(os, config.x1, config.x2, config.threshold_frac,
                            sweep::activation_time(config.t_grid, config.x1, config.x2, config.pair, c,
                                                   config.threshold_frac, opts));
      break;
    case Mode::Verify:
      break;
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    if (config.mode == Mode::Verify) {
      const auto results = run_verification(config);
      print_results(out, results);
      for (const auto& r : results) {
        if (!r.passed) return kExitVerifyFailed;
      }
      return kExitOk;
    }
    if (config.output_path.empty()) {
      emit(config, out);
      out.flush();
      return kExitOk;
    }
    std::ofstream file(config.output_path);
    if (!file) {
      err << "error: cannot open " << config.output_path << " for writing\n";
      return kExitInvalid;
    }
    emit(config, file);
    file.close();
    if (!file) {
      err << "error: failed writing " << config.output_path << "\n";
      return kExitInvalid;
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << "\n";
    return kExitRange;
  } catch (const NotFoundError& e) {
    err << "not found: " << e.what() << "\n";
    return kExitNotFound;
  }
}

}  // namespace shutterlab::cli
